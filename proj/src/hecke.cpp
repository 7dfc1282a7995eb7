#include "wbr/hecke.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wbr {

std::string to_string(HeckeCellKind k) {
  switch (k) {
    case HeckeCellKind::S1: return "S1";
    case HeckeCellKind::S2: return "S2";
    case HeckeCellKind::S3: return "S3";
    case HeckeCellKind::S4: return "S4";
  }
  return "?";
}

void he_axpy(HeckeElement& acc, const Q& c, const HeckeElement& x) {
  if (c == 0) return;
  for (const auto& [m, v] : x) {
    auto& slot = acc[m];
    slot += c * v;
    if (slot == 0) acc.erase(m);
  }
}

namespace {

void add_term(HeckeElement& h, const HeckeMonomial& m, const Q& c) {
  if (c == 0) return;
  auto& slot = h[m];
  slot += c;
  if (slot == 0) h.erase(m);
}

void all_perms(int n, std::vector<Perm>& out) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  do out.emplace_back(a);
  while (std::next_permutation(a.begin(), a.end()));
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(int r, const Q& u1, const Q& u2) : r_(r), u1_(u1), u2_(u2) {
  if (r < 0) throw std::invalid_argument("HeckeAlgebra: r must be nonnegative");
  std::vector<Perm> perms;
  all_perms(r, perms);
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> eps(r);
    for (int i = 0; i < r; ++i) eps[i] = (mask >> (r - 1 - i)) & 1;
    for (const auto& w : perms) basis_.push_back({eps, w});
  }
  for (int i = 0; i < dim(); ++i) index_[basis_[i]] = i;
}

HeckeElement HeckeAlgebra::one() const { return scalar(1); }

HeckeElement HeckeAlgebra::scalar(const Q& c) const {
  HeckeElement h;
  add_term(h, {std::vector<int>(r_, 0), Perm::identity(r_)}, c);
  return h;
}

HeckeElement HeckeAlgebra::y(int i) const {
  if (i < 1 || i > r_) throw std::out_of_range("y index");
  std::vector<int> e(r_, 0);
  e[i - 1] = 1;
  return {{{e, Perm::identity(r_)}, Q(1)}};
}

HeckeElement HeckeAlgebra::s(int i) const {
  if (i < 1 || i >= r_) throw std::out_of_range("s index");
  return perm(Perm::s(r_, i));
}

HeckeElement HeckeAlgebra::perm(const Perm& w) const { return {{{std::vector<int>(r_, 0), w}, Q(1)}}; }

HeckeElement HeckeAlgebra::group(const GroupAlgebraElement& g) const {
  HeckeElement h;
  for (const auto& [w, c] : g) add_term(h, {std::vector<int>(r_, 0), w}, c);
  return h;
}

HeckeElement HeckeAlgebra::pi(int a, const Q& u) const {
  HeckeElement h = one();
  for (int i = 1; i <= a; ++i) {
    HeckeElement f = y(i);
    he_axpy(f, -u, one());
    h = multiply(h, f);
  }
  return h;
}

// s_i y^g = (y^g with i, i+1 swapped) s_i plus lower terms; exponents stay 0/1.
HeckeElement HeckeAlgebra::lmul_s(int i, const HeckeElement& h) const {
  HeckeElement out;
  Perm si = Perm::s(r_, i);
  for (const auto& [m, c] : h) {
    int a = m.eps[i - 1], b = m.eps[i];
    std::vector<int> sw = m.eps;
    std::swap(sw[i - 1], sw[i]);
    add_term(out, {sw, si * m.w}, c);
    if (a != b) {
      std::vector<int> rest = m.eps;
      rest[i - 1] = rest[i] = 0;
      // s y_i = y_{i+1} s - 1 and s y_{i+1} = y_i s + 1
      add_term(out, {rest, m.w}, a ? -c : c);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::rmul_perm(const HeckeElement& h, const Perm& w) const {
  HeckeElement out;
  for (const auto& [m, c] : h) add_term(out, {m.eps, m.w * w}, c);
  return out;
}

const HeckeElement& HeckeAlgebra::y_square(int k) const {
  auto it = ysq_.find(k);
  if (it != ysq_.end()) return it->second;
  HeckeElement sq;
  if (k == 1) {
    sq = y(1);
    for (auto& [m, c] : sq) c = u1_ + u2_;
    he_axpy(sq, -u1_ * u2_, one());
  } else {
    // y_k = s y_{k-1} s + s, so y_k^2 = s y_{k-1}^2 s + s y_{k-1} + y_{k-1} s + 1.
    int i = k - 1;
    Perm si = Perm::s(r_, i);
    sq = lmul_s(i, rmul_perm(y_square(k - 1), si));
    he_axpy(sq, 1, lmul_s(i, y(k - 1)));
    he_axpy(sq, 1, rmul_perm(y(k - 1), si));
    he_axpy(sq, 1, one());
  }
  return ysq_.emplace(k, std::move(sq)).first->second;
}

HeckeElement HeckeAlgebra::lmul_y(int k, const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [m, c] : h) {
    if (!m.eps[k - 1]) {
      std::vector<int> e = m.eps;
      e[k - 1] = 1;
      add_term(out, {e, m.w}, c);
      continue;
    }
    std::vector<int> rest = m.eps;
    rest[k - 1] = 0;
    HeckeElement acc = y_square(k);
    for (int j = 1; j <= r_; ++j)
      if (rest[j - 1]) acc = lmul_y(j, acc);
    he_axpy(out, c, rmul_perm(acc, m.w));
  }
  return out;
}

HeckeElement HeckeAlgebra::rmul_y(const HeckeElement& h, int j) const {
  HeckeElement out;
  for (const auto& [m, c] : h) {
    HeckeElement wy = y(j);
    auto word = perm_word(m.w);
    for (auto it = word.rbegin(); it != word.rend(); ++it) wy = lmul_s(*it, wy);
    std::vector<int> eps = m.eps;
    for (const auto& [t, d] : wy) {
      HeckeElement term{{{std::vector<int>(r_, 0), t.w}, Q(1)}};
      for (int k = 1; k <= r_; ++k)
        if (t.eps[k - 1]) term = lmul_y(k, term);
      for (int k = 1; k <= r_; ++k)
        if (eps[k - 1]) term = lmul_y(k, term);
      he_axpy(out, c * d, term);
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [m, c] : b) {
    HeckeElement cur = a;
    for (int j = 1; j <= r_; ++j)
      if (m.eps[j - 1]) cur = rmul_y(cur, j);
    he_axpy(out, c, rmul_perm(cur, m.w));
  }
  return out;
}

SparseVec HeckeAlgebra::coords(const HeckeElement& h) const {
  std::map<int, Q> m;
  for (const auto& [mono, c] : h) m[index_.at(mono)] = c;
  return sv_from_map(m);
}

HeckeElement HeckeAlgebra::from_coords(const SparseVec& v) const {
  HeckeElement h;
  for (const auto& [i, c] : v) add_term(h, basis_[i], c);
  return h;
}

std::string HeckeAlgebra::to_string(const HeckeElement& h) const {
  if (h.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [m, c] : h) {
    o << (first ? "" : " + ") << qstr(c);
    for (int i = 0; i < r_; ++i)
      if (m.eps[i]) o << "*y" << i + 1;
    if (!m.w.is_identity()) {
      o << "*[";
      for (size_t i = 0; i < m.w.img.size(); ++i) o << (i ? "," : "") << m.w.img[i];
      o << "]";
    }
    first = false;
  }
  return o.str();
}

HeckeElement HeckeAlgebra::cell_middle(HeckeCellKind kind, const Bipartition& lambda) const {
  if (lambda.size() != r_) throw std::invalid_argument("cell_middle: bipartition size must equal r");
  int a = psize(lambda.first);
  bool tilde = kind == HeckeCellKind::S2 || kind == HeckeCellKind::S4;
  bool barred = kind == HeckeCellKind::S3 || kind == HeckeCellKind::S4;
  HeckeElement h = pi(a, tilde ? u1_ : u2_);
  auto y1 = young_elements(lambda.first, 0, r_);
  auto y2 = young_elements(lambda.second, a, r_);
  h = multiply(h, group(barred ? y1.y : y1.x));
  h = multiply(h, group(barred ? y2.x : y2.y));
  return h;
}

HeckeElement HeckeAlgebra::cell_element(HeckeCellKind kind, const Bipartition& lambda, const BiTableau& s,
                                        const BiTableau& t) const {
  HeckeElement h = multiply(perm(tableau_perm(s).inverse()), cell_middle(kind, lambda));
  return rmul_perm(h, tableau_perm(t));
}

std::vector<std::pair<HeckeCellDatum, HeckeElement>> HeckeAlgebra::cellular_basis(HeckeCellKind kind) const {
  std::vector<std::pair<HeckeCellDatum, HeckeElement>> out;
  for (const auto& lam : enumerate_bipartitions(r_)) {
    HeckeElement mid = cell_middle(kind, lam);
    auto tabs = standard_tableaux(lam);
    for (const auto& s : tabs) {
      HeckeElement left = multiply(perm(tableau_perm(s).inverse()), mid);
      for (const auto& t : tabs) out.push_back({{kind, lam, s, t}, rmul_perm(left, tableau_perm(t))});
    }
  }
  return out;
}

HeckeCellModule HeckeAlgebra::cell_module(HeckeCellKind kind, const Bipartition& lambda) const {
  auto cb = cellular_basis(kind);
  EchelonBasis eb(true);
  for (const auto& [d, h] : cb)
    if (!eb.insert(coords(h))) throw std::runtime_error("cell_module: cellular elements are dependent");
  if (eb.rank() != dim()) throw std::runtime_error("cell_module: cellular elements do not span");

  HeckeCellModule mod;
  mod.lambda = lambda;
  mod.basis = standard_tableaux(lambda);
  const int d = static_cast<int>(mod.basis.size());
  std::map<BiTableau, int> pos;
  for (int i = 0; i < d; ++i) pos[mod.basis[i]] = i;
  const BiTableau& s0 = mod.basis.front();
  std::vector<int> cell_of_index;  // position in cb -> which local column or -1
  int first_idx = -1;
  for (size_t i = 0; i < cb.size(); ++i)
    if (cb[i].first.lambda == lambda && cb[i].first.s == s0 && first_idx < 0) first_idx = static_cast<int>(i);

  // Express h in the cellular basis and read off the row for left tableau s0.
  auto read_row = [&](const HeckeElement& h, std::vector<Q>& row) {
    row.assign(d, 0);
    auto co = eb.coordinates(coords(h));
    for (const auto& [i, c] : *co) {
      const auto& dat = cb[i].first;
      if (dat.lambda == lambda && dat.s == s0) {
        row[pos.at(dat.t)] = c;
      } else if (!dominance_lt(lambda, dat.lambda)) {
        mod.filtration_ok = false;
      }
    }
  };
  auto act_matrix = [&](const HeckeElement& g) {
    Mat M(d, d);
    std::vector<Q> row;
    for (int i = 0; i < d; ++i) {
      read_row(multiply(cb[first_idx + i].second, g), row);
      for (int j = 0; j < d; ++j) M(i, j) = row[j];
    }
    return M;
  };
  for (int i = 1; i < r_; ++i) mod.s_action.push_back(act_matrix(s(i)));
  for (int i = 1; i <= r_; ++i) mod.y_action.push_back(act_matrix(y(i)));

  // C_{s0 a} C_{b s0} = phi(a,b) C_{s0 s0} modulo higher cells.
  mod.gram = Mat(d, d);
  std::vector<Q> row;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      HeckeElement left = cb[first_idx + a].second;
      HeckeElement right = cell_element(kind, lambda, mod.basis[b], s0);
      read_row(multiply(left, right), row);
      for (int j = 1; j < d; ++j)
        if (row[j] != 0) mod.filtration_ok = false;
      mod.gram(a, b) = row[0];
    }
  mod.gram_rank = mat_rank(mod.gram);
  return mod;
}

Parameters walled_parameters_for_hecke(const Q& u1, const Q& u2) {
  Parameters p;
  p.k = 2;
  p.u = {-u1, -u2};
  // With t = 0 the omega data and the barred roots never enter.
  p.omega_seed = {Q(0), Q(0)};
  return p;
}

AlgebraElement hecke_to_walled(const HeckeAlgebra& H, const HeckeElement& h, const CyclotomicAlgebra& B) {
  if (B.r() != H.r() || B.t() != 0) throw std::invalid_argument("hecke_to_walled: need B_{2,r,0}");
  SparseVec out;
  for (const auto& [m, c] : h) {
    SparseVec v = sv_unit(0);
    int deg = 0;
    for (int i = 1; i <= H.r(); ++i)
      if (m.eps[i - 1]) {
        v = B.act_x(v, i);
        ++deg;
      }
    v = B.act_word(v, word_s(perm_word(m.w)));
    out = sv_axpy(out, deg % 2 ? -c : c, v);
  }
  return B.from_vec(std::move(out));
}

VanishingReport vanishing_checks(const HeckeAlgebra& H, int a, int b) {
  VanishingReport rep;
  const int r = H.r();
  if (a > r || b > r) throw std::invalid_argument("vanishing_checks: a, b must be at most r");
  HeckeElement L = H.pi(a, H.u2()), R = H.pi(b, H.u1());
  EchelonBasis eb;
  for (const auto& m : H.basis()) {
    HeckeElement prod = H.multiply(H.multiply(L, HeckeElement{{m, Q(1)}}), R);
    if (!prod.empty()) rep.vanishes = false;
    eb.insert(H.coords(prod));
  }
  rep.span_dim = eb.rank();
  if (a + b == r) {
    EchelonBasis e2;
    HeckeElement mid = H.multiply(H.multiply(L, H.perm(w_a_perm(r, a))), R);
    for (const auto& w : young_subgroup({r - a, a}, 0, r)) e2.insert(H.coords(H.multiply(mid, H.perm(w))));
    rep.expected_span_dim = e2.rank();
  }
  return rep;
}

}  // namespace wbr
