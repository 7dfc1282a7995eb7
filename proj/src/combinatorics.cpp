#include "wbr/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace wbr {

Perm::Perm(std::vector<int> v) : img(std::move(v)) {
  std::vector<bool> seen(img.size() + 1, false);
  for (int x : img) {
    if (x < 1 || x > n() || seen[x]) throw std::invalid_argument("Perm: not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Perm Perm::s(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("s_i index");
  Perm p = identity(n);
  std::swap(p.img[i - 1], p.img[i]);
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) p.img[img[i - 1] - 1] = i;
  return p;
}

int Perm::length() const {
  int c = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img[i] > img[j]) ++c;
  return c;
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img[i] != i + 1) return false;
  return true;
}

Perm operator*(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("Perm product: size");
  Perm p;
  p.img.resize(v.img.size());
  for (int i = 0; i < v.n(); ++i) p.img[i] = w.img[v.img[i] - 1];
  return p;
}

std::vector<int> perm_word(const Perm& w0) {
  // Peel right descents: if w = w' s_i with l(w') < l(w), then w' = w s_i,
  // which swaps the values i and i+1 in the one-line image.
  Perm w = w0;
  std::vector<int> rev;
  std::vector<int> pos(w.n() + 1);
  for (;;) {
    for (int i = 0; i < w.n(); ++i) pos[w.img[i]] = i;
    int found = 0;
    for (int i = 1; i < w.n(); ++i)
      if (pos[i] > pos[i + 1]) {
        found = i;
        break;
      }
    if (!found) break;
    std::swap(w.img[pos[found]], w.img[pos[found + 1]]);
    rev.push_back(found);
  }
  return {rev.rbegin(), rev.rend()};
}

Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm p = Perm::identity(n);
  for (int i : word) p = p * Perm::s(n, i);
  return p;
}

std::vector<int> s_range_word(int i, int j) {
  std::vector<int> w;
  if (i < j)
    for (int k = i; k < j; ++k) w.push_back(k);
  else
    for (int k = i - 1; k >= j; --k) w.push_back(k);
  return w;
}

Perm s_range(int n, int i, int j) { return perm_from_word(n, s_range_word(i, j)); }

Perm w_a_perm(int r, int a) {
  if (a < 0 || a > r) throw std::out_of_range("w_a: a out of range");
  Perm p;
  p.img.resize(r);
  for (int i = 1; i <= a; ++i) p.img[i - 1] = r - a + i;
  for (int j = 1; j <= r - a; ++j) p.img[a + j - 1] = j;
  return p;
}

Perm perm_shift(const Perm& w, int offset, int n) {
  Perm p = Perm::identity(n);
  for (int i = 1; i <= w.n(); ++i) p.img[offset + i - 1] = offset + w(i);
  return p;
}

int psize(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> enumerate_bipartitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_bipartitions: n < 0");
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& p1 : enumerate_partitions(a))
      for (const auto& p2 : enumerate_partitions(n - a)) out.push_back({p1, p2});
  return out;
}

static int part(const Partition& p, int i) { return i < static_cast<int>(p.size()) ? p[i] : 0; }

bool dominance_leq(const Bipartition& l, const Bipartition& m) {
  if (l.size() != m.size()) throw std::invalid_argument("dominance: size mismatch");
  int len = static_cast<int>(std::max({l.first.size(), l.second.size(), m.first.size(), m.second.size()}));
  int sl = 0, sm = 0;
  for (int i = 0; i < len; ++i) {
    sl += part(l.first, i);
    sm += part(m.first, i);
    if (sl > sm) return false;
  }
  int al = psize(l.first), am = psize(m.first);
  sl = al;
  sm = am;
  for (int i = 0; i < len; ++i) {
    sl += part(l.second, i);
    sm += part(m.second, i);
    if (sl > sm) return false;
  }
  return true;
}

bool dominance_lt(const Bipartition& l, const Bipartition& m) { return l != m && dominance_leq(l, m); }

Bipartition conjugate(const Bipartition& l) { return {conjugate(l.first), conjugate(l.second)}; }
Bipartition swap_components(const Bipartition& l) { return {l.second, l.first}; }
Bipartition hecke_conjugate(const Bipartition& l) { return swap_components(conjugate(l)); }

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string to_string(const Bipartition& l) { return "(" + to_string(l.first) + "," + to_string(l.second) + ")"; }

Bipartition shape(const BiTableau& t) {
  Bipartition l;
  for (const auto& row : t.first) l.first.push_back(static_cast<int>(row.size()));
  for (const auto& row : t.second) l.second.push_back(static_cast<int>(row.size()));
  return l;
}

static bool standard_component(const Tableau& t) {
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t[i].size(); ++j) {
      if (j + 1 < t[i].size() && t[i][j] >= t[i][j + 1]) return false;
      if (i + 1 < t.size() && j < t[i + 1].size() && t[i][j] >= t[i + 1][j]) return false;
      if (i + 1 < t.size() && t[i + 1].size() > t[i].size()) return false;
    }
  return true;
}

std::vector<int> reading_word(const BiTableau& t) {
  std::vector<int> w;
  for (const auto& row : t.first) w.insert(w.end(), row.begin(), row.end());
  for (const auto& row : t.second) w.insert(w.end(), row.begin(), row.end());
  return w;
}

bool is_standard(const BiTableau& t) {
  auto w = reading_word(t);
  std::vector<int> s = w;
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return false;
  return standard_component(t.first) && standard_component(t.second);
}

static Tableau empty_shape(const Partition& p) {
  Tableau t;
  for (int x : p) t.emplace_back(x, 0);
  return t;
}

BiTableau t_upper(const Bipartition& l) {
  BiTableau t{empty_shape(l.first), empty_shape(l.second)};
  int k = 1;
  for (auto& row : t.first)
    for (auto& e : row) e = k++;
  for (auto& row : t.second)
    for (auto& e : row) e = k++;
  return t;
}

static void fill_columns(Tableau& t, int& k) {
  if (t.empty()) return;
  for (size_t j = 0; j < t[0].size(); ++j)
    for (auto& row : t)
      if (j < row.size()) row[j] = k++;
}

BiTableau t_lower(const Bipartition& l) {
  BiTableau t{empty_shape(l.first), empty_shape(l.second)};
  int k = 1;
  fill_columns(t.second, k);
  fill_columns(t.first, k);
  return t;
}

std::vector<BiTableau> standard_tableaux(const Bipartition& l) {
  int r = l.size();
  std::vector<BiTableau> out;
  BiTableau cur{empty_shape(l.first), empty_shape(l.second)};
  // filled[c][row] = number of boxes already filled in that row
  std::vector<std::vector<int>> filled = {std::vector<int>(l.first.size(), 0),
                                          std::vector<int>(l.second.size(), 0)};
  std::function<void(int)> rec = [&](int k) {
    if (k > r) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < 2; ++c) {
      const Partition& p = c == 0 ? l.first : l.second;
      Tableau& tab = c == 0 ? cur.first : cur.second;
      for (size_t i = 0; i < p.size(); ++i) {
        int j = filled[c][i];
        if (j >= p[i]) continue;
        if (i > 0 && filled[c][i - 1] <= j) continue;
        tab[i][j] = k;
        ++filled[c][i];
        rec(k + 1);
        --filled[c][i];
        tab[i][j] = 0;
      }
    }
  };
  rec(1);
  std::sort(out.begin(), out.end(),
            [](const BiTableau& a, const BiTableau& b) { return reading_word(a) < reading_word(b); });
  return out;
}

long count_standard(const Bipartition& l) { return static_cast<long>(standard_tableaux(l).size()); }

BiTableau act(const BiTableau& t, const Perm& w) {
  BiTableau s = t;
  for (auto* tab : {&s.first, &s.second})
    for (auto& row : *tab)
      for (auto& e : row) e = w(e);
  return s;
}

Perm tableau_perm(const BiTableau& t) {
  if (!is_standard(t)) throw std::invalid_argument("tableau_perm: non-standard tableau");
  auto base = reading_word(t_upper(shape(t)));
  auto word = reading_word(t);
  Perm p;
  p.img.resize(word.size());
  for (size_t i = 0; i < word.size(); ++i) p.img[base[i] - 1] = word[i];
  return p;
}

Perm w_lambda(const Bipartition& l) { return tableau_perm(t_lower(l)); }

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [v, c] : a)
    for (const auto& [w, d] : b) {
      Q& x = out[v * w];
      x += c * d;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b, const Q& c) {
  GroupAlgebraElement out = a;
  for (const auto& [w, d] : b) {
    Q& x = out[w];
    x += c * d;
    if (x == 0) out.erase(w);
  }
  return out;
}

GroupAlgebraElement ga_single(const Perm& w, const Q& c) {
  GroupAlgebraElement g;
  if (c != 0) g[w] = c;
  return g;
}

std::vector<Perm> young_subgroup(const std::vector<int>& comp, int offset, int n) {
  std::vector<Perm> out{Perm::identity(n)};
  int start = offset;
  for (int block : comp) {
    std::vector<int> letters(block);
    std::iota(letters.begin(), letters.end(), start + 1);
    std::vector<Perm> local;
    std::vector<int> arr = letters;
    do {
      Perm p = Perm::identity(n);
      for (int i = 0; i < block; ++i) p.img[letters[i] - 1] = arr[i];
      local.push_back(p);
    } while (std::next_permutation(arr.begin(), arr.end()));
    std::vector<Perm> next;
    for (const auto& a : out)
      for (const auto& b : local) next.push_back(a * b);
    out = std::move(next);
    start += block;
  }
  std::sort(out.begin(), out.end());
  return out;
}

YoungElements young_elements(const std::vector<int>& comp, int offset, int n) {
  int sz = std::accumulate(comp.begin(), comp.end(), 0);
  if (n < 0) n = offset + sz;
  YoungElements ye;
  for (const auto& w : young_subgroup(comp, offset, n)) {
    ye.x[w] = 1;
    ye.y[w] = w.sign();
  }
  return ye;
}

GroupAlgebraElement jucys_murphy(int n, int i) {
  if (i < 1 || i > n) throw std::out_of_range("jucys_murphy: index");
  GroupAlgebraElement L;
  for (int j = 1; j < i; ++j) {
    Perm p = Perm::identity(n);
    std::swap(p.img[j - 1], p.img[i - 1]);
    L[p] = 1;
  }
  return L;
}

bool kleshchev(const Bipartition& l, const Q& u1, const Q& u2) {
  Q d = u1 - u2;
  if (d.get_den() != 1 || d < 0) return true;
  long off = d.get_num().get_si();
  for (size_t i = 0; i < l.first.size(); ++i) {
    // lambda^(1)_{off+i} <= lambda^(2)_i for i >= 1 (1-based)
    long row1 = off + static_cast<long>(i) + 1;
    if (row1 > static_cast<long>(l.first.size())) break;
    if (l.first[row1 - 1] > part(l.second, static_cast<int>(i))) return false;
  }
  return true;
}

static void append_range(std::vector<int>& w, int i, int j) {
  auto r = s_range_word(i, j);
  w.insert(w.end(), r.begin(), r.end());
}

std::vector<CosetDatum> coset_elements(int r, int t, int f, CosetFlavor flavor) {
  if (f < 0 || f > std::min(r, t)) throw std::out_of_range("coset_reps: f out of range");
  std::vector<CosetDatum> out;
  // all increasing f-subsets of {1..r}
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == f) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= r; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  // j-sequences: slot k (1..f) ranges over [lo_k, t]
  std::vector<std::vector<int>> jseqs{{}};
  for (int k = 1; k <= f; ++k) {
    int lo = k;  // head: j_k >= k; tail: j_{t-f+k} >= k
    std::vector<std::vector<int>> next;
    for (const auto& s : jseqs)
      for (int j = lo; j <= t; ++j) {
        auto s2 = s;
        s2.push_back(j);
        next.push_back(s2);
      }
    jseqs = std::move(next);
  }
  for (const auto& is : subsets)
    for (const auto& js : jseqs) {
      CosetDatum d;
      d.moved = is;
      if (flavor == CosetFlavor::Head) {
        // s_{f,i_f} sb_{f,j_f} ... s_{1,i_1} sb_{1,j_1}
        for (int k = f; k >= 1; --k) {
          append_range(d.word_top, k, is[k - 1]);
          append_range(d.word_bar, k, js[k - 1]);
        }
      } else {
        // s_{r-f+1,i_{r-f+1}} sb_{t-f+1,j_{t-f+1}} ... s_{r,i_r} sb_{t,j_t};
        // slot k (1..f) carries i_{r-f+k} = is[k-1] and j_{t-f+k} = js[k-1].
        for (int k = 1; k <= f; ++k) {
          append_range(d.word_top, r - f + k, is[k - 1]);
          append_range(d.word_bar, t - f + k, js[k - 1]);
        }
      }
      d.top = perm_from_word(r, d.word_top);
      d.bar = perm_from_word(t, d.word_bar);
      d.kappa.assign(r, 0);
      out.push_back(std::move(d));
    }
  return out;
}

std::vector<CosetDatum> coset_reps(int r, int t, int f, CosetFlavor flavor) {
  auto elems = coset_elements(r, t, f, flavor);
  if (flavor == CosetFlavor::Head) return elems;
  std::vector<CosetDatum> out;
  for (const auto& e : elems) {
    for (int mask = 0; mask < (1 << f); ++mask) {
      CosetDatum d = e;
      for (int b = 0; b < f; ++b)
        if (mask >> b & 1) d.kappa[e.moved[b] - 1] = 1;
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace wbr
