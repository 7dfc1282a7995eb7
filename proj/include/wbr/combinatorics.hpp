#pragma once
// Partitions, bipartitions, tableaux and permutations.
//
// Permutations act on the right: img[i-1] = (i)w, and the product vw means
// "first v, then w", so (i)(vw) = ((i)v)w.
#include <map>
#include <string>
#include <vector>

#include "wbr/linalg.hpp"

namespace wbr {

struct Perm {
  std::vector<int> img;  // 1-based values

  Perm() = default;
  explicit Perm(std::vector<int> v);
  static Perm identity(int n);
  static Perm s(int n, int i);  // simple transposition (i, i+1)
  int n() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i - 1]; }
  Perm inverse() const;
  int length() const;  // number of inversions
  int sign() const { return length() % 2 ? -1 : 1; }
  bool is_identity() const;
  auto operator<=>(const Perm&) const = default;
};

Perm operator*(const Perm& v, const Perm& w);
// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}.
std::vector<int> perm_word(const Perm& w);
Perm perm_from_word(int n, const std::vector<int>& word);
// s_{i,j}: s_i...s_{j-1} if i<j, 1 if i=j, s_{i-1}...s_j if i>j.
std::vector<int> s_range_word(int i, int j);
Perm s_range(int n, int i, int j);
// Block rotation w_a: i -> r-a+i for i <= a, a+j -> j.
Perm w_a_perm(int r, int a);
// Embed a permutation of {1..m} into S_n acting on letters offset+1..offset+m.
Perm perm_shift(const Perm& w, int offset, int n);

using Partition = std::vector<int>;

int psize(const Partition& p);
Partition conjugate(const Partition& p);
std::vector<Partition> enumerate_partitions(int n);  // reverse lexicographic

struct Bipartition {
  Partition first, second;
  int size() const { return psize(first) + psize(second); }
  auto operator<=>(const Bipartition&) const = default;
};

std::vector<Bipartition> enumerate_bipartitions(int n);
bool dominance_leq(const Bipartition& l, const Bipartition& m);
bool dominance_lt(const Bipartition& l, const Bipartition& m);
// Componentwise conjugate.
Bipartition conjugate(const Bipartition& l);
// nu^o = (nu2, nu1).
Bipartition swap_components(const Bipartition& l);
// The conjugate that appears in the Hecke-side formulas: ((l2)', (l1)').
Bipartition hecke_conjugate(const Bipartition& l);
std::string to_string(const Partition& p);
std::string to_string(const Bipartition& l);

using Tableau = std::vector<std::vector<int>>;

struct BiTableau {
  Tableau first, second;
  auto operator<=>(const BiTableau&) const = default;
};

Bipartition shape(const BiTableau& t);
bool is_standard(const BiTableau& t);
std::vector<int> reading_word(const BiTableau& t);
BiTableau t_upper(const Bipartition& l);  // row filling, first component first
BiTableau t_lower(const Bipartition& l);  // column filling, second component first
std::vector<BiTableau> standard_tableaux(const Bipartition& l);
long count_standard(const Bipartition& l);
// Replace every entry e by (e)w.
BiTableau act(const BiTableau& t, const Perm& w);
// d(t) with t_upper(shape) * d(t) = t.  Throws on non-standard input.
Perm tableau_perm(const BiTableau& t);
Perm w_lambda(const Bipartition& l);

using GroupAlgebraElement = std::map<Perm, Q>;

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b, const Q& c = 1);
GroupAlgebraElement ga_single(const Perm& w, const Q& c = 1);
// Young subgroup of a composition placed on letters offset+1..offset+|comp|.
std::vector<Perm> young_subgroup(const std::vector<int>& comp, int offset, int n);
struct YoungElements {
  GroupAlgebraElement x, y;
};
YoungElements young_elements(const std::vector<int>& comp, int offset = 0, int n = -1);
// L_i = sum_{j<i} (j,i) in the group algebra of S_n.
GroupAlgebraElement jucys_murphy(int n, int i);

bool kleshchev(const Bipartition& l, const Q& u1, const Q& u2);

enum class CosetFlavor { Head, Tail };

struct CosetDatum {
  Perm top;                 // in S_r
  Perm bar;                 // in S_t (barred letters)
  std::vector<int> moved;   // the i-sequence of the defining product
  std::vector<int> kappa;   // length r, entries in {0,1}
  std::vector<int> word_top;  // generator word for top
  std::vector<int> word_bar;  // generator word for bar
};

// Coset elements with their full kappa-choice sets (Tail); Head data carry
// kappa = 0 only.
std::vector<CosetDatum> coset_reps(int r, int t, int f, CosetFlavor flavor);
// Coset elements only (one entry per element, kappa = 0).
std::vector<CosetDatum> coset_elements(int r, int t, int f, CosetFlavor flavor);

}  // namespace wbr
