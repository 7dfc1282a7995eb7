#pragma once
// Linear vector enumeration of the right regular module of a finitely
// presented algebra.
#include <utility>
#include <vector>

#include "wbr/algebra.hpp"

namespace wbr::detail {

using IndexWord = std::vector<int>;
using IndexPoly = std::vector<std::pair<IndexWord, Q>>;

struct EnumResult {
  int dim = 0;
  std::vector<SparseMat> mats;  // per generator, on the compact basis
  long defined = 0;
};

EnumResult enumerate_regular_module(int num_gens, const std::vector<IndexPoly>& relations, long max_vectors);

}  // namespace wbr::detail
