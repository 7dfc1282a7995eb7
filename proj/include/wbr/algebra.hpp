#pragma once
// Cyclotomic walled Brauer algebras B_{k,r,t} with exact rational parameters.
//
// The algebra is realized as its own right regular module: a linear vector
// enumeration over the defining presentation produces matrices for the
// generators, which are then re-expressed on the regular monomials
// x^alpha c^{-1} e^f w d xb^beta.  Products, normal forms and the
// anti-involution are matrix applications in that basis.
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wbr/diagrams.hpp"
#include "wbr/linalg.hpp"

namespace wbr {

// ---------------------------------------------------------------- polys

// Noncommutative polynomial in the generators.
using Poly = std::map<Word, Q>;

Poly poly_one();
Poly poly_scalar(const Q& c);
Poly poly_word(const Word& w, const Q& c = 1);
Poly poly_gen(const Gen& g);
Poly poly_add(const Poly& a, const Poly& b, const Q& c = 1);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int e);
Poly poly_reverse(const Poly& a);
// x_i via x_{i+1} = s_i x_i s_i - s_i; likewise for xb_j.
Poly poly_x(int i);
Poly poly_xb(int j);
Poly poly_perm(const Perm& top, const Perm& bar);
// prod_{c} (z - c) evaluated at z = x_i (barred: xb_j), in the order given.
Poly poly_linear_product(const std::vector<int>& strands, bool barred, const Q& root);
std::string to_string(const Poly& p);

// ----------------------------------------------------------- parameters

struct Parameters {
  int k = 1;
  std::vector<Q> u;           // roots of f
  std::vector<Q> ubar;        // roots of g, when known
  std::vector<Q> omega_seed;  // omega_0 .. omega_{k-1}
  // Optional explicit omega list extending past the seeds; used to model
  // (possibly non-admissible) user input.
  std::vector<Q> omega_explicit;

  // f(x) = x^k + sum_i a_i x^{k-i}; returns a_1..a_k.
  std::vector<Q> f_coeffs() const;
  // g coefficients in ascending order g_0..g_k (g_k = 1).
  std::vector<Q> g_coeffs() const;
  // First l >= k violating the recursion within the explicit list, if any.
  std::optional<int> admissibility_failure() const;
  std::string describe() const;

  static Parameters schur_weyl(const Q& m, const Q& n, const Q& p, const Q& q);
  // Level-two parameters determined by the four roots.
  static Parameters from_roots2(const Q& u1, const Q& u2, const Q& ub1, const Q& ub2);
  static Parameters level1(const Q& u1, const Q& omega0);
};

std::vector<Q> omega_sequence(const Parameters& p, int lmax);
std::vector<Q> bar_omega_sequence(const Parameters& p, int lmax);
// Polynomials P_a with xb_1^a e_1 = P_a(x_1) e_1 (coefficient vectors).
std::vector<std::vector<Q>> bar_transfer_polys(const Parameters& p, int amax);

// -------------------------------------------------------- presentation

struct Relation {
  std::string name;
  Poly poly;  // the relation says poly = 0
};

std::vector<Relation> defining_relations(const Parameters& p, int r, int t);
std::vector<Gen> generators(int r, int t);

// -------------------------------------------------------------- algebra

struct RegularMonomial {
  std::vector<int> alpha;
  int diagram = 0;  // index into factorization_table(r,t)
  std::vector<int> beta;
  auto operator<=>(const RegularMonomial&) const = default;
};

using SparseMat = std::vector<SparseVec>;  // row i = image of basis vector i
SparseVec sm_apply(const SparseVec& v, const SparseMat& M);
SparseMat sm_mul(const SparseMat& A, const SparseMat& B);

class CyclotomicAlgebra;
using AlgebraPtr = std::shared_ptr<const CyclotomicAlgebra>;

struct AlgebraElement {
  AlgebraPtr ctx;
  SparseVec v;  // coordinates on regular monomials
  bool is_zero() const { return v.empty(); }
  bool operator==(const AlgebraElement& o) const { return v == o.v; }
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Q& c, const AlgebraElement& a);

struct EnumerationStats {
  long vectors_defined = 0;
  int enumerated_dim = 0;
  bool relations_verified = false;
  int spanning_rank = 0;
};

class CyclotomicAlgebra : public std::enable_shared_from_this<CyclotomicAlgebra> {
 public:
  // Builds (or fetches from the per-process cache) the algebra.  Throws
  // std::invalid_argument on non-admissible parameters and std::runtime_error
  // if the regular monomials fail to form a basis.
  static AlgebraPtr build(const Parameters& p, int r, int t);

  const Parameters& params() const { return params_; }
  int k() const { return params_.k; }
  int r() const { return r_; }
  int t() const { return t_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<RegularMonomial>& basis() const { return basis_; }
  const EnumerationStats& stats() const { return stats_; }
  std::string monomial_string(int idx) const;
  Poly monomial_poly(int idx) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement element(int monomial_idx, const Q& c = 1) const;
  AlgebraElement from_vec(SparseVec v) const;

  // Right action of generators and words on coordinate vectors.
  SparseVec act(const SparseVec& v, const Gen& g) const;
  SparseVec act_word(const SparseVec& v, const Word& w) const;
  SparseVec act_poly(const SparseVec& v, const Poly& p) const;
  SparseVec act_monomial(const SparseVec& v, int idx) const;
  SparseVec act_x(const SparseVec& v, int i) const;
  SparseVec act_xb(const SparseVec& v, int j) const;

  AlgebraElement normalize(const Word& w, const Q& c = 1) const;
  AlgebraElement normalize(const Poly& p) const;
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sigma(const AlgebraElement& a) const;

 private:
  CyclotomicAlgebra(const Parameters& p, int r, int t) : params_(p), r_(r), t_(t) {}
  void construct();
  int gen_index(const Gen& g) const;

  Parameters params_;
  int r_, t_;
  std::vector<Gen> gens_;
  std::vector<SparseMat> mats_;   // per generator, monomial coordinates
  std::vector<SparseMat> xmats_;  // x_1..x_r
  std::vector<SparseMat> xbmats_; // xb_1..xb_t
  std::vector<RegularMonomial> basis_;
  EnumerationStats stats_;
};

struct PresentationReport {
  bool ok = true;
  std::vector<std::string> failures;  // names of relations with nonzero residual
  int checked = 0;
};

// Evaluates every defining relation for `rhs` inside `alg` (normally the same
// parameters) plus conjugation spot checks.
PresentationReport verify_presentation(const CyclotomicAlgebra& alg, const Parameters& rhs, unsigned seed = 1);

std::vector<RegularMonomial> basis(const Parameters& p, int r, int t);

std::string params_key(const Parameters& p, int r, int t);

}  // namespace wbr
