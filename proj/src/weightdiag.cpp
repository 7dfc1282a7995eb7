#include "wbr/weightdiag.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wbr {

Symbol WeightDiagram::at(long i) const {
  auto it = symbols.find(i);
  return it == symbols.end() ? Symbol::Empty : it->second;
}

long WeightDiagram::count(Symbol s) const {
  if (s != Symbol::Empty) return std::count_if(symbols.begin(), symbols.end(), [s](auto& kv) { return kv.second == s; });
  long c = 0;
  for (long i = lo; i <= hi; ++i) c += at(i) == Symbol::Empty;
  return c;
}

SuperWeight rho(int m, int n) {
  SuperWeight r(m + n);
  for (int i = 0; i < m; ++i) r[i] = -i;
  for (int j = 0; j < n; ++j) r[m + j] = m - 1 - j;
  return r;
}

bool is_integral_dominant(const SuperWeight& w, int m) {
  for (const auto& c : w)
    if (c.get_den() != 1) return false;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (static_cast<int>(i) == m - 1) continue;
    if (w[i] < w[i + 1]) return false;
  }
  return true;
}

WeightDiagram diagram_from_symbols(const std::map<long, Symbol>& s, long lo, long hi) {
  WeightDiagram d;
  for (const auto& [i, c] : s)
    if (c != Symbol::Empty) d.symbols[i] = c;
  d.lo = lo;
  d.hi = hi;
  if (!d.symbols.empty()) {
    d.lo = std::min(d.lo, d.symbols.begin()->first);
    d.hi = std::max(d.hi, d.symbols.rbegin()->first);
  }
  return d;
}

WeightDiagram weight_diagram(const SuperWeight& w, int m, int n) {
  if (static_cast<int>(w.size()) != m + n) throw std::invalid_argument("weight has the wrong length");
  if (!is_integral_dominant(w, m)) throw std::invalid_argument("weight is not integral dominant");
  auto r = rho(m, n);
  std::set<long> L, R;
  for (int i = 0; i < m; ++i) L.insert(Q(w[i] + r[i]).get_num().get_si());
  for (int j = 0; j < n; ++j) R.insert(-Q(w[m + j] + r[m + j]).get_num().get_si());
  std::map<long, Symbol> s;
  for (long v : L) s[v] = R.count(v) ? Symbol::Cross : Symbol::Right;
  for (long v : R)
    if (!L.count(v)) s[v] = Symbol::Left;
  long lo = s.empty() ? 0 : s.begin()->first, hi = s.empty() ? 0 : s.rbegin()->first;
  return diagram_from_symbols(s, lo, hi);
}

SuperWeight diagram_weight(const WeightDiagram& d, int m, int n) {
  std::vector<long> L, R;
  for (const auto& [i, c] : d.symbols) {
    if (c == Symbol::Right || c == Symbol::Cross) L.push_back(i);
    if (c == Symbol::Left || c == Symbol::Cross) R.push_back(i);
  }
  if (static_cast<int>(L.size()) != m || static_cast<int>(R.size()) != n)
    throw std::invalid_argument("diagram symbol counts do not match (m|n)");
  std::sort(L.rbegin(), L.rend());  // lambda^L + rho strictly decreasing
  std::sort(R.begin(), R.end());    // -(lambda^R + rho) strictly increasing
  auto r = rho(m, n);
  SuperWeight w(m + n);
  for (int i = 0; i < m; ++i) w[i] = Q(L[i]) - r[i];
  for (int j = 0; j < n; ++j) w[m + j] = Q(-R[j]) - r[m + j];
  return w;
}

WeightDiagram lambda_top(const WeightDiagram& d) {
  std::vector<long> crosses;
  for (const auto& [i, c] : d.symbols)
    if (c == Symbol::Cross) crosses.push_back(i);
  std::set<long> taken;
  std::map<long, Symbol> out;
  for (const auto& [i, c] : d.symbols)
    if (c != Symbol::Cross) out[i] = c;
  for (auto it = crosses.rbegin(); it != crosses.rend(); ++it) {
    long j = *it + 1;
    while (d.at(j) != Symbol::Empty || taken.count(j)) ++j;
    taken.insert(j);
    out[j] = Symbol::Cross;
  }
  return diagram_from_symbols(out, d.lo, d.hi);
}

std::string render(const WeightDiagram& d) {
  std::ostringstream top, bot;
  for (long i = d.lo; i <= d.hi; ++i) {
    std::string idx = std::to_string(i);
    int wdt = std::max<int>(2, static_cast<int>(idx.size())) + 1;
    char c = static_cast<char>(d.at(i));
    top << std::string(wdt - 1, ' ') << c;
    bot << std::string(wdt - idx.size(), ' ') << idx;
  }
  return top.str() + "\n" + bot.str() + "\n";
}

std::string to_json_string(const WeightDiagram& d) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [i, c] : d.symbols) j[std::to_string(i)] = std::string(1, static_cast<char>(c));
  return j.dump();
}

std::pair<long, long> i_plus(int m, int n, long p, long q) { return {p - m + 1, q - m + n}; }

namespace {

SuperWeight bar_weight(const Bipartition& l, int m, int n, long p, long q) {
  return triple_weight(m, n, Q(p), Q(q), CellIndex{0, l, {}});
}

bool in_window(const WeightDiagram& d, std::pair<long, long> win) {
  for (const auto& [i, c] : d.symbols)
    if (i < win.first || i > win.second) return false;
  return true;
}

// ge: compare counts over vertices >= j, otherwise <= j.
bool counting_condition(const WeightDiagram& d, std::pair<long, long> win, bool ge) {
  for (long j = win.first; j <= win.second; ++j) {
    long empty = 0, cross = 0;
    for (long v = win.first; v <= win.second; ++v) {
      if (ge ? v < j : v > j) continue;
      Symbol s = d.at(v);
      empty += s == Symbol::Empty;
      cross += s == Symbol::Cross;
    }
    if (empty < cross) return false;
  }
  return true;
}

}  // namespace

TiltingVerdict tilting_criterion(const Bipartition& lambda, int m, int n, long p, long q) {
  if (p - q > -m) throw std::invalid_argument("tilting criterion needs p - q <= -m");
  auto win = i_plus(m, n, p, q);
  WeightDiagram d = weight_diagram(bar_weight(lambda, m, n, p, q), m, n);
  WeightDiagram top = lambda_top(d);
  TiltingVerdict v;
  v.in_window = in_window(d, win);
  v.from_lambda = v.in_window && counting_condition(d, win, true);
  v.from_top = in_window(top, win) && counting_condition(top, win, false);
  return v;
}

bool kleshchev_diagram_condition(const Bipartition& mu, int m, int n, long p, long q) {
  auto win = i_plus(m, n, p, q);
  WeightDiagram d = weight_diagram(bar_weight(mu, m, n, p, q), m, n);
  return in_window(d, win) && counting_condition(d, win, false);
}

bool kleshchev_rows(const Bipartition& mu, int k) {
  auto part = [](const Partition& l, size_t i) { return i < l.size() ? l[i] : 0; };
  for (size_t i = 0; i < std::max(mu.first.size(), mu.second.size()); ++i)
    if (part(mu.first, i) < part(mu.second, i) - k) return false;
  return true;
}

SuperWeight triple_to_weight(const CellIndex& idx, int m, int n, const Q& p, const Q& q) {
  return triple_weight(m, n, p, q, idx);
}

CellIndex weight_to_triple(const SuperWeight& w, int m, int n, const Q& p, const Q& q, int r, int t) {
  if (static_cast<int>(w.size()) != m + n) throw std::invalid_argument("weight has the wrong length");
  std::vector<long> pos(m + n), neg(m + n);
  for (int a = 0; a < m + n; ++a) {
    Q x = w[a] - (a < m ? p : Q(-q));
    if (x.get_den() != 1) throw std::invalid_argument("weight is not lambda_pq plus an integral weight");
    long v = x.get_num().get_si();
    pos[a] = std::max(v, 0L);
    neg[a] = std::max(-v, 0L);
  }
  auto to_part = [](std::vector<long> v) {
    Partition out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i && v[i] > v[i - 1]) throw std::invalid_argument("weight is not dominant");
      if (v[i] > 0) out.push_back(static_cast<int>(v[i]));
    }
    return out;
  };
  CellIndex idx;
  idx.mu.first = to_part({pos.begin(), pos.begin() + m});
  idx.mu.second = to_part({pos.begin() + m, pos.end()});
  // hat(nu) = (nu1_m..nu1_1 | nu2_n..nu2_1)
  idx.nu.first = to_part({neg.rend() - m, neg.rend()});
  idx.nu.second = to_part({neg.rbegin(), neg.rend() - m});
  auto size = [](const Bipartition& b) {
    long s = 0;
    for (int x : b.first) s += x;
    for (int x : b.second) s += x;
    return s;
  };
  long f1 = r - size(idx.mu), f2 = t - size(idx.nu);
  if (f1 < 0 || f1 != f2) throw std::invalid_argument("weight does not occur in M_pq^{rt}");
  idx.f = static_cast<int>(f1);
  return idx;
}

}  // namespace wbr
