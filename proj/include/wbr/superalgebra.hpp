#pragma once
// Exact sparse model of gl(m|n) on M = V^{(x)r} (x) K(lambda_pq) (x) W^{(x)t},
// W the dual of V, together with the walled Brauer operators obtained from the
// Casimir element.  Operators are stored in row form: row i is the image of
// basis vector i, so composition A then B is sm_mul(A, B).
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/cellular.hpp"
#include "wbr/program.hpp"

namespace wbr {

using SuperWeight = std::vector<Q>;  // m + n coordinates
std::string to_string(const SuperWeight& w);

bool is_typical_pq(int m, int n, const Q& p, const Q& q);

struct SuperBasisVector {
  std::vector<int> i;  // i_1..i_r (i_1 next to the Kac factor), values 1..m+n
  int sigma = 0;       // bit (i-1)*m + (j-1) marks the odd factor E_{m+i,j}
  std::vector<int> j;  // j_1..j_t
};

class SuperModule : public RightActor {
 public:
  // Throws std::invalid_argument when lambda_pq is not typical.
  SuperModule(int m, int n, const Q& p, const Q& q, int r, int t);

  int m() const { return m_; }
  int n() const { return n_; }
  int r() const { return r_; }
  int t() const { return t_; }
  const Q& p() const { return p_; }
  const Q& q() const { return q_; }
  int dim() const { return dim_; }
  Parameters parameters() const { return Parameters::schur_weyl(Q(m_), Q(n_), p_, q_); }

  int index(const SuperBasisVector& b) const;
  SuperBasisVector decode(int idx) const;
  int parity(int idx) const;
  SuperWeight weight(int idx) const;
  std::string basis_string(int idx) const;

  // Left action of E_ab (1-based a, b in 1..m+n).
  const SparseMat& E(int a, int b) const;
  // Action of E_ab on the Kac module basis b^sigma, as a vector over sigma.
  SparseVec kac_action(int a, int b, int sigma) const;

  // Walled Brauer generators as right operators.
  const SparseMat& op(const Gen& g) const;
  const SparseMat& x_op(int i) const { return xs_.at(i - 1); }
  const SparseMat& xb_op(int j) const { return xbs_.at(j - 1); }
  SparseVec act(const SparseVec& v, const Gen& g) const override { return sm_apply(v, op(g)); }
  SparseVec act_x(const SparseVec& v, int i) const override { return sm_apply(v, x_op(i)); }
  SparseVec act_xb(const SparseVec& v, int j) const override { return sm_apply(v, xb_op(j)); }
  // Operator of a regular monomial of B_{2,r,t}.
  SparseMat monomial_operator(const CyclotomicAlgebra& B, int idx) const;
  SparseMat element_operator(const CyclotomicAlgebra& B, const SparseVec& coords) const;

  // Indices of basis vectors of the given weight.
  std::vector<int> weight_space(const SuperWeight& w) const;
  std::vector<SuperWeight> weights() const;

 private:
  SparseMat casimir(int pa, int pb) const;  // pi_{ab}(Omega) with tensor positions pa < pb
  int factor_parity(const SuperBasisVector& b, int pos) const;

  int m_, n_, r_, t_;
  Q p_, q_;
  int dim_;
  int kac_dim_;
  mutable std::map<std::pair<int, int>, SparseMat> emats_;
  mutable std::map<std::tuple<int, int, int>, SparseVec> kac_memo_;
  std::vector<Gen> gens_;
  std::vector<SparseMat> gen_ops_;
  std::vector<SparseMat> xs_, xbs_;
};

SparseMat sm_identity(int d);
SparseMat sm_add(const SparseMat& A, const SparseMat& B, const Q& c = 1);
bool sm_is_zero(const SparseMat& A);

// Relation audit: every defining relation of B_{2,r,t} with Schur-Weyl
// parameters evaluated on the operators.
struct OperatorRelationReport {
  bool ok = true;
  std::vector<std::string> failures;
  int checked = 0;
};
OperatorRelationReport audit_relations(const SuperModule& M);

// If A = c * B for a scalar c, returns c.
std::optional<Q> operator_ratio(const SparseMat& A, const SparseMat& B);

struct PhiRank {
  int rank = 0;
  int dim = 0;
  std::vector<SparseVec> kernel;  // certified: each maps to the zero operator
};
PhiRank phi_rank(const SuperModule& M, unsigned seed = 1);

// dim { X : X commutes with all Chevalley generators }, solved per weight block.
long commutant_dim(const SuperModule& M, long max_unknowns = 2'000'000);

// Basis of the joint kernel of the raising operators on a weight space.
std::vector<SparseVec> hwv_kernel_basis(const SuperModule& M, const SuperWeight& w);
// Dimension of the joint kernel of the raising operators E_{a,a+1} on a weight space.
int hwv_kernel_oracle(const SuperModule& M, const SuperWeight& w);

// lambda_pq + mu - hat(nu)
SuperWeight triple_weight(int m, int n, const Q& p, const Q& q, const CellIndex& idx);

// Seed vector v_lambda.
SparseVec hwv_seed(const SuperModule& M, const CellIndex& idx);
// Labels of the constructed vectors: those of the cell index (f, mu', (nu^o)').
CellIndex hwv_cell_index(const CellIndex& idx);
Program hwv_program(const SuperModule& M, const CellIndex& idx, const CellLabel& lab);

struct HwvResult {
  std::vector<SparseVec> vectors;
  std::vector<CellLabel> labels;
  bool all_killed = true;
  bool all_nonzero = true;
  bool independent = true;
  bool weight_ok = true;
};
HwvResult hwv_construct(const SuperModule& M, const CellIndex& idx);

// The Hom space is read off as the space of highest weight vectors of weight
// lambda-bar, taken from the exact kernel rather than from hwv_construct.
struct HomKacResult {
  int dim = 0;             // dim of the highest weight space
  int constructed = 0;     // number of vectors hwv_construct produces
  int cell_dim = 0;
  bool closed = true;      // the space is stable under the Brauer operators
  bool action_match = false;  // an invertible intertwiner was found
  Mat intertwiner;
};
HomKacResult hom_kac_dim(const SuperModule& M, const CellularBasis& cb, const CellIndex& idx, unsigned seed = 1);

}  // namespace wbr
