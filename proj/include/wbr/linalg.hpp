#pragma once
// Exact rational linear algebra: sparse vectors, dense matrices, and an
// incremental semi-echelon basis used for rank, membership and coordinates.
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wbr {

using Q = mpq_class;

std::string qstr(const Q& q);
Q qparse(const std::string& s);

// Sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Q>>;

SparseVec sv_unit(int i, const Q& c = 1);
// y + a*x
SparseVec sv_axpy(const SparseVec& y, const Q& a, const SparseVec& x);
SparseVec sv_scale(const SparseVec& x, const Q& a);
SparseVec sv_from_map(const std::map<int, Q>& m);
bool sv_is_zero(const SparseVec& x);
Q sv_get(const SparseVec& x, int i);

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Q> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Q& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Q& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static Mat identity(int n);
  bool is_zero() const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_sub(const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Mat& A);
int mat_rank(Mat A);
Q mat_det(Mat A);
std::optional<Mat> mat_inverse(const Mat& A);
// Basis of {x : A x = 0}.
std::vector<std::vector<Q>> nullspace(const Mat& A);

// Incremental semi-echelon form over sparse vectors. Each stored row has a
// distinct leading index. When tracking is enabled every row also records its
// expression as a combination of the inserted vectors (by insertion id).
class EchelonBasis {
 public:
  explicit EchelonBasis(bool track = false) : track_(track) {}
  // Returns true when v was independent of the rows so far.
  bool insert(const SparseVec& v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }
  // Remainder after reduction (empty iff v is in the span).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Coordinates of v with respect to the inserted vectors (tracking only).
  // Fails when v is outside the span.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  // Combination of inserted vectors that reduced to zero on the last
  // dependent insert (tracking only); a kernel witness.
  const SparseVec& last_dependency() const { return last_dep_; }

 private:
  struct Row {
    SparseVec v;
    SparseVec combo;
  };
  bool track_;
  int inserted_ = 0;
  std::map<int, Row> rows_;  // keyed by leading index
  SparseVec last_dep_;
};

}  // namespace wbr
