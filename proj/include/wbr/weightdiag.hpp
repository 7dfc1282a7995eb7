#pragma once
// Weight diagrams of integral dominant gl(m|n) weights, the lambda^top move,
// the tilting-summand criterion and the triple <-> weight bijection.
#include <map>
#include <string>

#include "wbr/cellular.hpp"
#include "wbr/superalgebra.hpp"

namespace wbr {

enum class Symbol : char { Empty = 'o', Left = '<', Right = '>', Cross = 'x' };

struct WeightDiagram {
  std::map<long, Symbol> symbols;  // non-empty vertices only
  long lo = 0, hi = 0;             // rendering window
  Symbol at(long i) const;
  long count(Symbol s) const;      // Empty counted inside [lo, hi]
  bool operator==(const WeightDiagram& o) const { return symbols == o.symbols; }
};

// rho = (0,-1,...,1-m | m-1,...,m-n)
SuperWeight rho(int m, int n);
bool is_integral_dominant(const SuperWeight& w, int m);
// Throws std::invalid_argument on non-integral or non-dominant weights.
WeightDiagram weight_diagram(const SuperWeight& w, int m, int n);
WeightDiagram diagram_from_symbols(const std::map<long, Symbol>& s, long lo, long hi);
// Inverse of weight_diagram.
SuperWeight diagram_weight(const WeightDiagram& d, int m, int n);

// Crosses are processed from the rightmost one; each goes to the nearest vertex
// to its right that was empty in the input and is not yet a destination.
WeightDiagram lambda_top(const WeightDiagram& d);

std::string render(const WeightDiagram& d);
std::string to_json_string(const WeightDiagram& d);

// I^+_pq = {p-m+1, ..., q-m+n}
std::pair<long, long> i_plus(int m, int n, long p, long q);

struct TiltingVerdict {
  bool in_window = false;  // S(lambda) inside I^+_pq
  bool from_lambda = false;  // counting condition on lambda (>= j form)
  bool from_top = false;     // counting condition on lambda^top (<= j form)
  bool consistent() const { return from_lambda == from_top; }
};
// lambda in Lambda_2^+(r), integral p, q with p - q <= -m.
TiltingVerdict tilting_criterion(const Bipartition& lambda, int m, int n, long p, long q);
// S(mu) inside I^+_pq and #empty_{<=j}(mu) >= #cross_{<=j}(mu) for all j in I^+_pq.
bool kleshchev_diagram_condition(const Bipartition& mu, int m, int n, long p, long q);
// mu^L_i >= mu^R_i - k for all i, where p = q - m - k.
bool kleshchev_rows(const Bipartition& mu, int k);

// lambda_pq + mu - hat(nu) (same as triple_weight).
SuperWeight triple_to_weight(const CellIndex& idx, int m, int n, const Q& p, const Q& q);
// Throws std::invalid_argument when w is not the weight of an index of Lambda_{2,r,t}.
CellIndex weight_to_triple(const SuperWeight& w, int m, int n, const Q& p, const Q& q, int r, int t);

}  // namespace wbr
