#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "enumerator.hpp"
#include "wbr/algebra.hpp"

namespace wbr {

SparseVec sm_apply(const SparseVec& v, const SparseMat& M) {
  std::map<int, Q> acc;
  for (const auto& [i, c] : v)
    for (const auto& [j, d] : M[i]) acc[j] += c * d;
  return sv_from_map(acc);
}

SparseMat sm_mul(const SparseMat& A, const SparseMat& B) {
  SparseMat C(A.size());
  for (size_t i = 0; i < A.size(); ++i) C[i] = sm_apply(A[i], B);
  return C;
}

static SparseMat sm_sub(const SparseMat& A, const SparseMat& B) {
  SparseMat C(A.size());
  for (size_t i = 0; i < A.size(); ++i) C[i] = sv_axpy(A[i], -1, B[i]);
  return C;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) { return {a.ctx, sv_axpy(a.v, 1, b.v)}; }
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return {a.ctx, sv_axpy(a.v, -1, b.v)}; }
AlgebraElement operator*(const Q& c, const AlgebraElement& a) { return {a.ctx, sv_scale(a.v, c)}; }

std::string params_key(const Parameters& p, int r, int t) { return p.describe() + " r=" + std::to_string(r) + " t=" + std::to_string(t); }

namespace {

std::mutex g_cache_mu;
std::map<std::string, AlgebraPtr> g_cache;

// Fill in ubar from g when it has rational roots; check consistency otherwise.
void complete_ubar(Parameters& p) {
  auto g = p.g_coeffs();
  if (!p.ubar.empty()) {
    if (static_cast<int>(p.ubar.size()) != p.k) throw std::invalid_argument("ubar must have length k");
    std::vector<Q> c{Q(1)};
    for (const auto& r : p.ubar) {
      std::vector<Q> n(c.size() + 1);
      for (size_t i = 0; i < c.size(); ++i) {
        n[i + 1] += c[i];
        n[i] -= r * c[i];
      }
      c = std::move(n);
    }
    if (c != g) throw std::invalid_argument("ubar inconsistent with u and omega seeds (e1 f(x1) = (-1)^k e1 g(xb1) fails)");
    return;
  }
  if (p.k == 1) {
    p.ubar = {-g[0]};
  } else if (p.k == 2) {
    Q disc = g[1] * g[1] - 4 * g[0];
    if (disc < 0) return;
    mpz_class num = disc.get_num(), den = disc.get_den();
    mpz_class sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return;
    Q s(sn, sd);
    s.canonicalize();
    p.ubar = {(-g[1] + s) / 2, (-g[1] - s) / 2};
  }
}

std::vector<int> exps_from_index(long idx, int len, int k) {
  std::vector<int> e(len);
  for (int i = len - 1; i >= 0; --i) {
    e[i] = static_cast<int>(idx % k);
    idx /= k;
  }
  return e;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::vector<RegularMonomial> basis(const Parameters& p, int r, int t) { return CyclotomicAlgebra::build(p, r, t)->basis(); }

AlgebraPtr CyclotomicAlgebra::build(const Parameters& p0, int r, int t) {
  if (r < 0 || t < 0) throw std::invalid_argument("r, t must be nonnegative");
  if (p0.k < 1 || static_cast<int>(p0.u.size()) != p0.k || static_cast<int>(p0.omega_seed.size()) != p0.k)
    throw std::invalid_argument("parameters need k >= 1 with k roots u and k omega seeds");
  if (auto l = p0.admissibility_failure())
    throw std::invalid_argument("parameters are not admissible: omega recursion fails at l=" + std::to_string(*l));
  Parameters p = p0;
  p.omega_explicit.clear();
  complete_ubar(p);
  std::string key = params_key(p, r, t);
  {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  std::shared_ptr<CyclotomicAlgebra> a(new CyclotomicAlgebra(p, r, t));
  a->construct();
  std::lock_guard<std::mutex> lock(g_cache_mu);
  return g_cache.emplace(key, a).first->second;
}

int CyclotomicAlgebra::gen_index(const Gen& g) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == g) return static_cast<int>(i);
  throw std::out_of_range("generator " + to_string(g) + " not available for r=" + std::to_string(r_) + ", t=" + std::to_string(t_));
}

void CyclotomicAlgebra::construct() {
  gens_ = generators(r_, t_);
  const int G = static_cast<int>(gens_.size());
  auto rels = defining_relations(params_, r_, t_);
  std::vector<detail::IndexPoly> irels;
  for (const auto& rel : rels) {
    detail::IndexPoly ip;
    for (const auto& [w, c] : rel.poly) {
      detail::IndexWord iw;
      for (const auto& g : w) iw.push_back(gen_index(g));
      ip.emplace_back(std::move(iw), c);
    }
    irels.push_back(std::move(ip));
  }
  auto maxlen = [](const detail::IndexPoly& p) {
    size_t m = 0;
    for (const auto& [w, c] : p) m = std::max(m, w.size());
    return m;
  };
  std::stable_sort(irels.begin(), irels.end(), [&](const auto& a, const auto& b) { return maxlen(a) < maxlen(b); });

  auto en = detail::enumerate_regular_module(G, irels, 20'000'000);
  stats_.vectors_defined = en.defined;
  stats_.enumerated_dim = en.dim;
  const int D = en.dim;
  const auto& E = en.mats;

  // Every relation must annihilate every basis vector of the enumerated module.
  for (int i = 0; i < D; ++i)
    for (const auto& rel : irels) {
      SparseVec tot;
      for (const auto& [w, c] : rel) {
        SparseVec x = sv_unit(i);
        for (int g : w) x = sm_apply(x, E[g]);
        tot = sv_axpy(tot, c, x);
      }
      if (!tot.empty()) throw std::runtime_error("vector enumeration produced a module violating a relation");
    }
  stats_.relations_verified = true;

  auto gi = [&](const Gen& g) { return gen_index(g); };
  auto x_mats = [&](const std::vector<SparseMat>& M, bool barred) {
    std::vector<SparseMat> X;
    int n = barred ? t_ : r_;
    if (n == 0) return X;
    X.push_back(M[gi(barred ? gen_xb() : gen_x())]);
    for (int i = 1; i < n; ++i) {
      const SparseMat& S = M[gi(barred ? gen_sb(i) : gen_s(i))];
      X.push_back(sm_sub(sm_mul(sm_mul(S, X.back()), S), S));
    }
    return X;
  };
  auto EX = x_mats(E, false);
  auto EXB = x_mats(E, true);

  // regular monomials
  const int k = params_.k;
  const auto& facts = factorization_table(r_, t_);
  long na = ipow(k, r_), nb = ipow(k, t_);
  for (long ia = 0; ia < na; ++ia)
    for (int d = 0; d < static_cast<int>(facts.size()); ++d)
      for (long ib = 0; ib < nb; ++ib) basis_.push_back({exps_from_index(ia, r_, k), d, exps_from_index(ib, t_, k)});
  const int N = static_cast<int>(basis_.size());

  auto apply_monomial = [&](SparseVec v, const RegularMonomial& m, const std::vector<SparseMat>& M,
                            const std::vector<SparseMat>& X, const std::vector<SparseMat>& XB) {
    for (int i = 0; i < r_; ++i)
      for (int e = 0; e < m.alpha[i]; ++e) v = sm_apply(v, X[i]);
    for (const auto& g : word_factorization(facts[m.diagram])) v = sm_apply(v, M[gi(g)]);
    for (int j = 0; j < t_; ++j)
      for (int e = 0; e < m.beta[j]; ++e) v = sm_apply(v, XB[j]);
    return v;
  };

  EchelonBasis eb(true);
  SparseMat T(N);
  for (int m = 0; m < N; ++m) {
    T[m] = apply_monomial(sv_unit(0), basis_[m], E, EX, EXB);
    eb.insert(T[m]);
  }
  stats_.spanning_rank = eb.rank();
  if (D != N || eb.rank() != N) {
    std::ostringstream o;
    o << "regular monomials do not form a basis: enumerated dimension " << D << ", spanning rank " << eb.rank()
      << ", expected " << N;
    throw std::runtime_error(o.str());
  }
  SparseMat Tinv(D);
  for (int j = 0; j < D; ++j) Tinv[j] = *eb.coordinates(sv_unit(j));

  mats_.resize(G);
  for (int g = 0; g < G; ++g) {
    mats_[g].resize(N);
    for (int m = 0; m < N; ++m) mats_[g][m] = sm_apply(sm_apply(T[m], E[g]), Tinv);
  }
  xmats_ = x_mats(mats_, false);
  xbmats_ = x_mats(mats_, true);
}

std::string CyclotomicAlgebra::monomial_string(int idx) const {
  const auto& m = basis_[idx];
  std::ostringstream o;
  bool any = false;
  for (int i = 0; i < r_; ++i)
    if (m.alpha[i]) {
      o << (any ? " " : "") << "x" << i + 1 << (m.alpha[i] > 1 ? "^" + std::to_string(m.alpha[i]) : "");
      any = true;
    }
  Word w = word_factorization(factorization_table(r_, t_)[m.diagram]);
  if (!w.empty()) {
    o << (any ? " " : "") << "[" << to_string(w) << "]";
    any = true;
  }
  for (int j = 0; j < t_; ++j)
    if (m.beta[j]) {
      o << (any ? " " : "") << "xb" << j + 1 << (m.beta[j] > 1 ? "^" + std::to_string(m.beta[j]) : "");
      any = true;
    }
  return any ? o.str() : "1";
}

Poly CyclotomicAlgebra::monomial_poly(int idx) const {
  const auto& m = basis_[idx];
  Poly p = poly_one();
  for (int i = 0; i < r_; ++i) p = poly_mul(p, poly_pow(poly_x(i + 1), m.alpha[i]));
  p = poly_mul(p, poly_word(word_factorization(factorization_table(r_, t_)[m.diagram])));
  for (int j = 0; j < t_; ++j) p = poly_mul(p, poly_pow(poly_xb(j + 1), m.beta[j]));
  return p;
}

AlgebraElement CyclotomicAlgebra::zero() const { return {shared_from_this(), {}}; }
AlgebraElement CyclotomicAlgebra::one() const { return element(0); }
AlgebraElement CyclotomicAlgebra::element(int idx, const Q& c) const {
  if (idx < 0 || idx >= dim()) throw std::out_of_range("monomial index");
  return {shared_from_this(), sv_unit(idx, c)};
}
AlgebraElement CyclotomicAlgebra::from_vec(SparseVec v) const { return {shared_from_this(), std::move(v)}; }

SparseVec CyclotomicAlgebra::act(const SparseVec& v, const Gen& g) const { return sm_apply(v, mats_[gen_index(g)]); }

SparseVec CyclotomicAlgebra::act_word(const SparseVec& v0, const Word& w) const {
  SparseVec v = v0;
  for (const auto& g : w) v = act(v, g);
  return v;
}

SparseVec CyclotomicAlgebra::act_poly(const SparseVec& v, const Poly& p) const {
  SparseVec out;
  for (const auto& [w, c] : p) out = sv_axpy(out, c, act_word(v, w));
  return out;
}

SparseVec CyclotomicAlgebra::act_x(const SparseVec& v, int i) const {
  if (i < 1 || i > r_) throw std::out_of_range("x index");
  return sm_apply(v, xmats_[i - 1]);
}

SparseVec CyclotomicAlgebra::act_xb(const SparseVec& v, int j) const {
  if (j < 1 || j > t_) throw std::out_of_range("xb index");
  return sm_apply(v, xbmats_[j - 1]);
}

SparseVec CyclotomicAlgebra::act_monomial(const SparseVec& v0, int idx) const {
  const auto& m = basis_[idx];
  SparseVec v = v0;
  for (int i = 0; i < r_; ++i)
    for (int e = 0; e < m.alpha[i]; ++e) v = sm_apply(v, xmats_[i]);
  v = act_word(v, word_factorization(factorization_table(r_, t_)[m.diagram]));
  for (int j = 0; j < t_; ++j)
    for (int e = 0; e < m.beta[j]; ++e) v = sm_apply(v, xbmats_[j]);
  return v;
}

AlgebraElement CyclotomicAlgebra::normalize(const Word& w, const Q& c) const {
  return from_vec(sv_scale(act_word(sv_unit(0), w), c));
}

AlgebraElement CyclotomicAlgebra::normalize(const Poly& p) const { return from_vec(act_poly(sv_unit(0), p)); }

AlgebraElement CyclotomicAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
  if (a.ctx.get() != this || b.ctx.get() != this) throw std::invalid_argument("multiply: context mismatch");
  SparseVec out;
  for (const auto& [j, c] : b.v) out = sv_axpy(out, c, act_monomial(a.v, j));
  return from_vec(std::move(out));
}

AlgebraElement CyclotomicAlgebra::sigma(const AlgebraElement& a) const {
  if (a.ctx.get() != this) throw std::invalid_argument("sigma: context mismatch");
  SparseVec out;
  const auto& facts = factorization_table(r_, t_);
  for (const auto& [idx, c] : a.v) {
    const auto& m = basis_[idx];
    SparseVec v = sv_unit(0);
    for (int j = 0; j < t_; ++j)
      for (int e = 0; e < m.beta[j]; ++e) v = sm_apply(v, xbmats_[j]);
    v = act_word(v, reversed(word_factorization(facts[m.diagram])));
    for (int i = 0; i < r_; ++i)
      for (int e = 0; e < m.alpha[i]; ++e) v = sm_apply(v, xmats_[i]);
    out = sv_axpy(out, c, v);
  }
  return from_vec(std::move(out));
}

PresentationReport verify_presentation(const CyclotomicAlgebra& alg, const Parameters& rhs, unsigned seed) {
  PresentationReport rep;
  const int r = alg.r(), t = alg.t();
  for (const auto& rel : defining_relations(rhs, r, t)) {
    ++rep.checked;
    if (!alg.normalize(rel.poly).is_zero()) {
      rep.ok = false;
      rep.failures.push_back(rel.name);
    }
  }
  // Conjugation of f(x'_i) by random permutations, x'_i = x_i + L_i.
  std::mt19937 rng(seed);
  auto xprime = [&](int i, bool barred) {
    Poly p = barred ? poly_xb(i) : poly_x(i);
    for (int j = 1; j < i; ++j) {
      int n = barred ? t : r;
      Perm tr = Perm::identity(n);
      std::swap(tr.img[j - 1], tr.img[i - 1]);
      p = poly_add(p, poly_word(barred ? word_sb(perm_word(tr)) : word_s(perm_word(tr))));
    }
    return p;
  };
  auto fpoly = [&](const Poly& z, const std::vector<Q>& roots) {
    Poly out = poly_one();
    for (const auto& u : roots) out = poly_mul(out, poly_add(z, poly_scalar(u), -1));
    return out;
  };
  for (int side = 0; side < 2; ++side) {
    int n = side == 0 ? r : t;
    if (n < 2) continue;
    const auto& roots = side == 0 ? rhs.u : alg.params().ubar;
    if (static_cast<int>(roots.size()) != rhs.k) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> a(n);
      for (int i = 0; i < n; ++i) a[i] = i + 1;
      std::shuffle(a.begin(), a.end(), rng);
      Perm w(a);
      int i = 1 + static_cast<int>(rng() % n);
      bool barred = side == 1;
      Word ww = barred ? word_sb(perm_word(w)) : word_s(perm_word(w));
      Word wi = barred ? word_sb(perm_word(w.inverse())) : word_s(perm_word(w.inverse()));
      Poly lhs = poly_mul(poly_mul(poly_word(ww), fpoly(xprime(i, barred), roots)), poly_word(wi));
      Poly rhsP = fpoly(xprime(w.inverse()(i), barred), roots);
      ++rep.checked;
      if (!alg.normalize(poly_add(lhs, rhsP, -1)).is_zero()) {
        rep.ok = false;
        rep.failures.push_back(std::string("conjugation of f(x'_") + std::to_string(i) + (barred ? ") barred" : ")"));
      }
    }
  }
  return rep;
}

}  // namespace wbr
