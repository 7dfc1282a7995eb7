#pragma once
// Level-two degenerate cyclotomic Hecke algebra H_{2,r} with parameters
// u1, u2, stored in the normal form y^eps * w with eps in {0,1}^r.
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/combinatorics.hpp"

namespace wbr {

struct HeckeMonomial {
  std::vector<int> eps;
  Perm w;
  auto operator<=>(const HeckeMonomial&) const = default;
};

using HeckeElement = std::map<HeckeMonomial, Q>;

enum class HeckeCellKind { S1, S2, S3, S4 };
std::string to_string(HeckeCellKind k);

struct HeckeCellDatum {
  HeckeCellKind kind;
  Bipartition lambda;
  BiTableau s, t;
};

struct HeckeCellModule {
  Bipartition lambda;
  std::vector<BiTableau> basis;
  // Right action: row i is the image of basis vector i.
  std::vector<Mat> s_action;  // s_1..s_{r-1}
  std::vector<Mat> y_action;  // y_1..y_r
  Mat gram;
  int gram_rank = 0;
  bool filtration_ok = true;  // remainders always landed in strictly higher cells
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(int r, const Q& u1, const Q& u2);

  int r() const { return r_; }
  const Q& u1() const { return u1_; }
  const Q& u2() const { return u2_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<HeckeMonomial>& basis() const { return basis_; }

  HeckeElement one() const;
  HeckeElement scalar(const Q& c) const;
  HeckeElement y(int i) const;
  HeckeElement s(int i) const;
  HeckeElement perm(const Perm& w) const;
  HeckeElement group(const GroupAlgebraElement& g) const;
  // pi_a(u) = prod_{i<=a} (y_i - u)
  HeckeElement pi(int a, const Q& u) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

  SparseVec coords(const HeckeElement& h) const;
  HeckeElement from_coords(const SparseVec& v) const;
  std::string to_string(const HeckeElement& h) const;

  // d(s)^{-1} * middle(lambda) * d(t)
  HeckeElement cell_element(HeckeCellKind kind, const Bipartition& lambda, const BiTableau& s,
                            const BiTableau& t) const;
  HeckeElement cell_middle(HeckeCellKind kind, const Bipartition& lambda) const;
  std::vector<std::pair<HeckeCellDatum, HeckeElement>> cellular_basis(HeckeCellKind kind) const;

  // Cell module read off from the cellular basis, with the two-sided ideal of
  // cells strictly above lambda in dominance order quotiented out.
  HeckeCellModule cell_module(HeckeCellKind kind, const Bipartition& lambda) const;

 private:
  HeckeElement lmul_s(int i, const HeckeElement& h) const;
  HeckeElement rmul_perm(const HeckeElement& h, const Perm& w) const;
  HeckeElement lmul_y(int k, const HeckeElement& h) const;
  HeckeElement rmul_y(const HeckeElement& h, int j) const;
  const HeckeElement& y_square(int k) const;

  int r_;
  Q u1_, u2_;
  std::vector<HeckeMonomial> basis_;
  std::map<HeckeMonomial, int> index_;
  mutable std::map<int, HeckeElement> ysq_;
};

void he_axpy(HeckeElement& acc, const Q& c, const HeckeElement& x);

// B_{2,r,0} parameters matching H_{2,r}(u1,u2) under x_1 = -y_1.
Parameters walled_parameters_for_hecke(const Q& u1, const Q& u2);
// Image of a Hecke element in B_{2,r,0}: y_i -> -x_i, permutations unchanged.
AlgebraElement hecke_to_walled(const HeckeAlgebra& H, const HeckeElement& h, const CyclotomicAlgebra& B);

struct VanishingReport {
  bool vanishes = true;   // pi_a(u2) h pi_b(u1) == 0 for all monomials h
  int span_dim = 0;       // dimension of pi_a(u2) H pi_b(u1)
  int expected_span_dim = -1;  // when a + b = r: dim of pi_a(u2) w_a pi_{r-a}(u1) C S_{r-a,a}
};
VanishingReport vanishing_checks(const HeckeAlgebra& H, int a, int b);

}  // namespace wbr
