#pragma once
// Walled Brauer diagrams.
//
// Vertices live in one flat array of size 2(r+t): the top row in the order
// r..1, 1b..tb, then the bottom row in the same order.  Unbarred i on the top
// row is vertex r-i, barred j is vertex r+j-1; bottom vertices add r+t.
// In a product D1 D2 the diagram D1 sits above D2.
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wbr/combinatorics.hpp"

namespace wbr {

enum class GenKind : int { E = 0, S = 1, SB = 2, X = 3, XB = 4 };

struct Gen {
  GenKind kind;
  int idx;  // 1 for E, X, XB
  auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;

inline Gen gen_e() { return {GenKind::E, 1}; }
inline Gen gen_s(int i) { return {GenKind::S, i}; }
inline Gen gen_sb(int j) { return {GenKind::SB, j}; }
inline Gen gen_x() { return {GenKind::X, 1}; }
inline Gen gen_xb() { return {GenKind::XB, 1}; }
std::string to_string(const Gen& g);
std::string to_string(const Word& w);
Word parse_word(const std::string& s);  // tokens like "e1 s1 sb2 x1 xb1"

Word word_s(const std::vector<int>& idx);
Word word_sb(const std::vector<int>& idx);
Word reversed(const Word& w);

class WalledDiagram {
 public:
  WalledDiagram() = default;
  WalledDiagram(int r, int t, std::vector<int> match);  // validates
  static WalledDiagram identity(int r, int t);
  static WalledDiagram generator(int r, int t, const Gen& g);
  static WalledDiagram from_perms(const Perm& top, const Perm& bar);

  int r() const { return r_; }
  int t() const { return t_; }
  int size() const { return r_ + t_; }
  const std::vector<int>& match() const { return match_; }

  int top(int i) const { return r_ - i; }
  int top_bar(int j) const { return r_ + j - 1; }
  int bot(int i) const { return size() + r_ - i; }
  int bot_bar(int j) const { return size() + r_ + j - 1; }
  bool is_top(int v) const { return v < size(); }
  bool is_barred(int v) const { return (v % size()) >= r_; }
  std::string vertex_name(int v) const;

  // Number of horizontal edges in the top row.
  int horizontal_count() const;

  auto operator<=>(const WalledDiagram&) const = default;

 private:
  int r_ = 0, t_ = 0;
  std::vector<int> match_;
};

struct ConcatResult {
  int circles;
  WalledDiagram diagram;
};

ConcatResult diagram_concat(const WalledDiagram& a, const WalledDiagram& b);
ConcatResult diagram_from_word(int r, int t, const Word& w);
std::vector<WalledDiagram> all_diagrams(int r, int t);

struct Factorization {
  CosetDatum c;  // head flavor
  int f = 0;
  Perm w_top, w_bar;  // supported on letters f+1..r and f+1..t
  CosetDatum d;  // head flavor
};

// Generator word for e_{i,j} = sb_{j,1} s_{i,1} e1 s_{1,i} sb_{1,j}.
Word word_e_ij(int i, int j);
// e^f = e_1 ... e_f.
Word word_e_head(int f);
// The e-part of cellular basis elements: e_{r,t} e_{r-1,t-1} ... (f factors).
Word word_e_tail(int r, int t, int f);
Word word_perm(const Perm& top, const Perm& bar);
Word word_coset(const CosetDatum& c);
Word word_coset_inverse(const CosetDatum& c);
Word word_factorization(const Factorization& fz);

Factorization diagram_factorize(const WalledDiagram& d);
// All factorizations for (r,t), in a deterministic order; the order defines
// the diagram index used by regular monomials.
const std::vector<Factorization>& factorization_table(int r, int t);
const std::map<WalledDiagram, int>& diagram_index(int r, int t);

}  // namespace wbr
