#pragma once
// Straight-line programs for right multiplication by structured elements
// (words, Jucys-Murphy shifts, Young symmetrizers).  The same program runs on
// the regular representation of the algebra and on the tensor-space model.
#include <variant>
#include <vector>

#include "wbr/combinatorics.hpp"
#include "wbr/diagrams.hpp"
#include "wbr/linalg.hpp"

namespace wbr {

class RightActor {
 public:
  virtual ~RightActor() = default;
  virtual SparseVec act(const SparseVec& v, const Gen& g) const = 0;
  virtual SparseVec act_x(const SparseVec& v, int i) const = 0;
  virtual SparseVec act_xb(const SparseVec& v, int j) const = 0;
  SparseVec act_word(const SparseVec& v, const Word& w) const;
};

struct OpWord {
  Word w;
};
// v -> v (x_i - u), or the barred version.
struct OpShift {
  bool barred;
  int i;
  Q u;
};
// v -> v * g for g in the group algebra of S_n (barred: of the barred group).
struct OpGroup {
  bool barred;
  GroupAlgebraElement g;
};
using Op = std::variant<OpWord, OpShift, OpGroup>;
using Program = std::vector<Op>;

SparseVec run_program(const RightActor& a, SparseVec v, const Program& p);
void append(Program& p, const Program& q);
Program prog_word(const Word& w);
Program prog_perm(const Perm& w, bool barred);

// y-type cellular middle on letters 1..n: prod_{i<=a}(z_i - u) x_{l1} y_{l2}
// (unbarred) or prod_{i<=a}(z_i - u) y_{l1} x_{l2} (barred), a = |l1|.
Program prog_cell_middle(const Bipartition& l, bool barred, const Q& u);
// d(s)^{-1} middle d(t)
Program prog_cell_y(const Bipartition& l, const BiTableau& s, const BiTableau& t, bool barred, const Q& u);

}  // namespace wbr
