#include "wbr/diagrams.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wbr {

std::string to_string(const Gen& g) {
  switch (g.kind) {
    case GenKind::E: return "e1";
    case GenKind::S: return "s" + std::to_string(g.idx);
    case GenKind::SB: return "sb" + std::to_string(g.idx);
    case GenKind::X: return "x1";
    case GenKind::XB: return "xb1";
  }
  return "?";
}

std::string to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
  return s;
}

Word parse_word(const std::string& s) {
  std::istringstream in(s);
  std::string tok;
  Word w;
  while (in >> tok) {
    if (tok == "e1" || tok == "e")
      w.push_back(gen_e());
    else if (tok == "x1" || tok == "x")
      w.push_back(gen_x());
    else if (tok == "xb1" || tok == "xb")
      w.push_back(gen_xb());
    else if (tok.rfind("sb", 0) == 0)
      w.push_back(gen_sb(std::stoi(tok.substr(2))));
    else if (tok.rfind("s", 0) == 0)
      w.push_back(gen_s(std::stoi(tok.substr(1))));
    else
      throw std::invalid_argument("unknown generator token: " + tok);
  }
  return w;
}

Word word_s(const std::vector<int>& idx) {
  Word w;
  for (int i : idx) w.push_back(gen_s(i));
  return w;
}

Word word_sb(const std::vector<int>& idx) {
  Word w;
  for (int i : idx) w.push_back(gen_sb(i));
  return w;
}

Word reversed(const Word& w) { return {w.rbegin(), w.rend()}; }

WalledDiagram::WalledDiagram(int r, int t, std::vector<int> match) : r_(r), t_(t), match_(std::move(match)) {
  int N = r + t;
  if (static_cast<int>(match_.size()) != 2 * N) throw std::invalid_argument("diagram: wrong vertex count");
  for (int v = 0; v < 2 * N; ++v) {
    int w = match_[v];
    if (w < 0 || w >= 2 * N || w == v || match_[w] != v) throw std::invalid_argument("diagram: not a perfect matching");
    bool same_row = is_top(v) == is_top(w);
    bool same_side = is_barred(v) == is_barred(w);
    // vertical edges stay on one side of the wall, horizontal edges cross it
    if (same_row == same_side) throw std::invalid_argument("diagram: edge violates the wall");
  }
}

WalledDiagram WalledDiagram::identity(int r, int t) {
  int N = r + t;
  std::vector<int> m(2 * N);
  for (int v = 0; v < N; ++v) {
    m[v] = v + N;
    m[v + N] = v;
  }
  return WalledDiagram(r, t, std::move(m));
}

WalledDiagram WalledDiagram::from_perms(const Perm& top, const Perm& bar) {
  int r = top.n(), t = bar.n();
  WalledDiagram d = identity(r, t);
  for (int i = 1; i <= r; ++i) {
    d.match_[d.top(i)] = d.bot(top(i));
    d.match_[d.bot(top(i))] = d.top(i);
  }
  for (int j = 1; j <= t; ++j) {
    d.match_[d.top_bar(j)] = d.bot_bar(bar(j));
    d.match_[d.bot_bar(bar(j))] = d.top_bar(j);
  }
  return d;
}

WalledDiagram WalledDiagram::generator(int r, int t, const Gen& g) {
  switch (g.kind) {
    case GenKind::S:
      if (g.idx < 1 || g.idx >= r) throw std::out_of_range("diagram: s index");
      return from_perms(Perm::s(r, g.idx), Perm::identity(t));
    case GenKind::SB:
      if (g.idx < 1 || g.idx >= t) throw std::out_of_range("diagram: sb index");
      return from_perms(Perm::identity(r), Perm::s(t, g.idx));
    case GenKind::E: {
      if (r < 1 || t < 1) throw std::out_of_range("diagram: e1 needs r,t >= 1");
      WalledDiagram d = identity(r, t);
      d.match_[d.top(1)] = d.top_bar(1);
      d.match_[d.top_bar(1)] = d.top(1);
      d.match_[d.bot(1)] = d.bot_bar(1);
      d.match_[d.bot_bar(1)] = d.bot(1);
      return d;
    }
    default: throw std::invalid_argument("diagram: x generators have no diagram");
  }
}

std::string WalledDiagram::vertex_name(int v) const {
  int N = size();
  std::string row = v < N ? "T" : "B";
  int p = v % N;
  if (p < r_) return row + std::to_string(r_ - p);
  return row + "b" + std::to_string(p - r_ + 1);
}

int WalledDiagram::horizontal_count() const {
  int c = 0;
  for (int i = 1; i <= r_; ++i)
    if (is_top(match_[top(i)])) ++c;
  return c;
}

ConcatResult diagram_concat(const WalledDiagram& a, const WalledDiagram& b) {
  if (a.r() != b.r() || a.t() != b.t()) throw std::invalid_argument("diagram_concat: size mismatch");
  int N = a.size();
  const auto& A = a.match();
  const auto& B = b.match();
  std::vector<int> m(2 * N, -1);
  std::vector<bool> mid_seen(N, false);
  // Follow a path starting in layer `side` (0 = a, 1 = b) at vertex x of that
  // layer; returns the outer endpoint in composite numbering.
  auto follow = [&](int side, int x) {
    for (;;) {
      if (side == 0) {
        int y = A[x];
        if (y < N) return y;
        mid_seen[y - N] = true;
        side = 1;
        x = y - N;
      } else {
        int z = B[x];
        if (z >= N) return z;
        mid_seen[z] = true;
        side = 0;
        x = z + N;
      }
    }
  };
  for (int v = 0; v < N; ++v)
    if (m[v] < 0) {
      int w = follow(0, v);
      m[v] = w;
      m[w] = v;
    }
  for (int v = N; v < 2 * N; ++v)
    if (m[v] < 0) {
      int w = follow(1, v);
      m[v] = w;
      m[w] = v;
    }
  int circles = 0;
  for (int k = 0; k < N; ++k) {
    if (mid_seen[k]) continue;
    ++circles;
    int x = k;
    do {
      mid_seen[x] = true;
      int z = B[x];  // middle -> middle through b
      mid_seen[z] = true;
      x = A[z + N] - N;  // back through a
    } while (!mid_seen[x]);
  }
  return {circles, WalledDiagram(a.r(), a.t(), std::move(m))};
}

ConcatResult diagram_from_word(int r, int t, const Word& w) {
  ConcatResult acc{0, WalledDiagram::identity(r, t)};
  for (const auto& g : w) {
    auto step = diagram_concat(acc.diagram, WalledDiagram::generator(r, t, g));
    acc.circles += step.circles;
    acc.diagram = std::move(step.diagram);
  }
  return acc;
}

std::vector<WalledDiagram> all_diagrams(int r, int t) {
  std::vector<WalledDiagram> out;
  for (const auto& fz : factorization_table(r, t)) out.push_back(diagram_from_word(r, t, word_factorization(fz)).diagram);
  return out;
}

Word word_e_ij(int i, int j) {
  Word w = word_sb(s_range_word(j, 1));
  Word a = word_s(s_range_word(i, 1));
  w.insert(w.end(), a.begin(), a.end());
  w.push_back(gen_e());
  Word b = word_s(s_range_word(1, i));
  Word c = word_sb(s_range_word(1, j));
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

Word word_e_head(int f) {
  Word w;
  for (int i = 1; i <= f; ++i) {
    Word e = word_e_ij(i, i);
    w.insert(w.end(), e.begin(), e.end());
  }
  return w;
}

Word word_e_tail(int r, int t, int f) {
  Word w;
  for (int k = 0; k < f; ++k) {
    Word e = word_e_ij(r - k, t - k);
    w.insert(w.end(), e.begin(), e.end());
  }
  return w;
}

Word word_perm(const Perm& top, const Perm& bar) {
  Word w = word_s(perm_word(top));
  Word b = word_sb(perm_word(bar));
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word word_coset(const CosetDatum& c) {
  Word w = word_s(c.word_top);
  Word b = word_sb(c.word_bar);
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word word_coset_inverse(const CosetDatum& c) { return reversed(word_coset(c)); }

Word word_factorization(const Factorization& fz) {
  Word w = word_coset_inverse(fz.c);
  Word e = word_e_head(fz.f);
  Word m = word_perm(fz.w_top, fz.w_bar);
  Word d = word_coset(fz.d);
  for (const Word* p : {&e, &m, &d}) w.insert(w.end(), p->begin(), p->end());
  return w;
}

namespace {

struct Tables {
  std::vector<Factorization> facts;
  std::map<WalledDiagram, int> index;
};

std::mutex g_mu;
std::map<std::pair<int, int>, Tables> g_tables;

const Tables& tables(int r, int t) {
  std::lock_guard<std::mutex> lock(g_mu);
  auto it = g_tables.find({r, t});
  if (it != g_tables.end()) return it->second;
  Tables tb;
  for (int f = 0; f <= std::min(r, t); ++f) {
    auto cs = coset_elements(r, t, f, CosetFlavor::Head);
    // permutations of letters f+1..r and f+1..t
    std::vector<Perm> tops, bars;
    {
      std::vector<int> a(r - f);
      for (int i = 0; i < r - f; ++i) a[i] = f + i + 1;
      do {
        Perm p = Perm::identity(r);
        for (int i = 0; i < r - f; ++i) p.img[f + i] = a[i];
        tops.push_back(p);
      } while (std::next_permutation(a.begin(), a.end()));
      std::vector<int> b(t - f);
      for (int i = 0; i < t - f; ++i) b[i] = f + i + 1;
      do {
        Perm p = Perm::identity(t);
        for (int i = 0; i < t - f; ++i) p.img[f + i] = b[i];
        bars.push_back(p);
      } while (std::next_permutation(b.begin(), b.end()));
    }
    for (const auto& c : cs)
      for (const auto& wt : tops)
        for (const auto& wb : bars)
          for (const auto& d : cs) {
            Factorization fz{c, f, wt, wb, d};
            auto res = diagram_from_word(r, t, word_factorization(fz));
            if (res.circles != 0) throw std::logic_error("factorization word produced a circle");
            if (!tb.index.emplace(res.diagram, static_cast<int>(tb.facts.size())).second)
              throw std::logic_error("factorization is not injective");
            tb.facts.push_back(std::move(fz));
          }
  }
  return g_tables.emplace(std::make_pair(r, t), std::move(tb)).first->second;
}

}  // namespace

const std::vector<Factorization>& factorization_table(int r, int t) { return tables(r, t).facts; }
const std::map<WalledDiagram, int>& diagram_index(int r, int t) { return tables(r, t).index; }

Factorization diagram_factorize(const WalledDiagram& d) {
  const auto& tb = tables(d.r(), d.t());
  auto it = tb.index.find(d);
  if (it == tb.index.end()) throw std::logic_error("diagram_factorize: diagram not covered");
  return tb.facts[it->second];
}

}  // namespace wbr
