#pragma once
// The poset Lambda_{2,r,t}, the weakly cellular basis C of B_{2,r,t}, its cell
// modules C(f, mu, nu) with Gram matrices, and the simplicity criterion.
#include <memory>
#include <string>
#include <vector>

#include "wbr/algebra.hpp"
#include "wbr/combinatorics.hpp"
#include "wbr/program.hpp"

namespace wbr {

struct CellIndex {
  int f = 0;
  Bipartition mu, nu;
  auto operator<=>(const CellIndex&) const = default;
};
std::string to_string(const CellIndex& c);

// Ordered by f descending, then bipartition enumeration order.
std::vector<CellIndex> lambda_poset(int r, int t);
// a >= b in the poset: a.f > b.f, or equal f with b.mu <= a.mu and b.nu <= a.nu.
bool poset_geq(const CellIndex& a, const CellIndex& b);
bool poset_gt(const CellIndex& a, const CellIndex& b);

// (t, c, kappa_c): a pair of tableaux and a tail coset datum with its kappa.
struct CellLabel {
  BiTableau t1, t2;
  CosetDatum c;
};
std::string to_string(const CellLabel& l);
std::vector<CellLabel> delta(const CellIndex& idx, int r, int t);

class AlgebraActor : public RightActor {
 public:
  explicit AlgebraActor(const CyclotomicAlgebra& a) : a_(a) {}
  SparseVec act(const SparseVec& v, const Gen& g) const override { return a_.act(v, g); }
  SparseVec act_x(const SparseVec& v, int i) const override { return a_.act_x(v, i); }
  SparseVec act_xb(const SparseVec& v, int j) const override { return a_.act_xb(v, j); }

 private:
  const CyclotomicAlgebra& a_;
};

// n_{st} = y_{s1 t1} yb_{s2 t2} on the first r-f (resp. t-f) strands, with the
// Hecke parameters replaced by the algebra's u_1, ubar_1.
Program prog_n(const Parameters& p, const CellIndex& idx, const CellLabel& S, const CellLabel& T);
// x^{kappa_d} d^{-1} e^f n_{st} c x^{kappa_c}
Program prog_cellular(const Parameters& p, int r, int t, const CellIndex& idx, const CellLabel& S, const CellLabel& T);

struct CellularEntry {
  CellIndex index;
  int left, right;  // positions in delta(index)
};

class CellularBasis {
 public:
  explicit CellularBasis(AlgebraPtr alg);
  const CyclotomicAlgebra& algebra() const { return *alg_; }
  const std::vector<CellularEntry>& entries() const { return entries_; }
  const std::vector<SparseVec>& elements() const { return elems_; }
  const std::vector<CellLabel>& labels(const CellIndex& idx) const { return labels_.at(idx); }
  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }
  bool is_basis() const { return rank_ == alg_->dim() && size() == alg_->dim(); }
  // Coordinates in the cellular basis (requires is_basis()).
  SparseVec coordinates(const SparseVec& v) const;
  int entry_position(const CellIndex& idx, int left, int right) const;
  Program program(int entry) const;

 private:
  AlgebraPtr alg_;
  std::vector<CellularEntry> entries_;
  std::vector<SparseVec> elems_;
  std::map<CellIndex, std::vector<CellLabel>> labels_;
  std::map<CellIndex, int> first_entry_;
  EchelonBasis eb_{true};
  int rank_ = 0;
};

struct CellModule {
  CellIndex index;
  std::vector<CellLabel> basis;
  std::vector<Gen> gens;
  std::vector<Mat> action;  // right action, row i = image of basis vector i
  Mat gram;
  int gram_rank = 0;
  bool filtration_ok = true;        // remainders stayed in strictly higher cells
  bool gram_independent = true;     // the form did not depend on the chosen (x, y)
  const Mat& action_of(const Gen& g) const;
};

CellModule cell_module_C(const CellularBasis& cb, const CellIndex& idx);

struct SimplicityReport {
  int dim = 0;
  int rank = 0;
  int radical_dim = 0;
  bool simple_nonzero = false;
  bool predicted_nonzero = false;  // Hecke heads nonzero and the omega_0 = omega_1 = 0 exclusion
};
SimplicityReport gram_and_simplicity(const CellularBasis& cb, const CellIndex& idx);

// dim C(f,mu,nu) from the index set alone.
long cell_dimension(const CellIndex& idx, int r, int t);

}  // namespace wbr
