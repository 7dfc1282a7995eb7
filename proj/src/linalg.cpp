#include "wbr/linalg.hpp"

#include <stdexcept>

namespace wbr {

std::string qstr(const Q& q) { return q.get_str(); }

Q qparse(const std::string& s) {
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

SparseVec sv_unit(int i, const Q& c) {
  if (c == 0) return {};
  return {{i, c}};
}

SparseVec sv_axpy(const SparseVec& y, const Q& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return y;
  SparseVec out;
  out.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(y[i++]);
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      Q s = y[i].second + a * x[j].second;
      if (s != 0) out.emplace_back(y[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sv_scale(const SparseVec& x, const Q& a) {
  if (a == 0) return {};
  SparseVec out = x;
  for (auto& [i, c] : out) c *= a;
  return out;
}

SparseVec sv_from_map(const std::map<int, Q>& m) {
  SparseVec out;
  for (const auto& [i, c] : m)
    if (c != 0) out.emplace_back(i, c);
  return out;
}

bool sv_is_zero(const SparseVec& x) { return x.empty(); }

Q sv_get(const SparseVec& x, int i) {
  for (const auto& [j, c] : x)
    if (j == i) return c;
  return 0;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Q& x = A(i, k);
      if (x == 0) continue;
      for (int j = 0; j < B.cols; ++j)
        if (B(k, j) != 0) C(i, j) += x * B(k, j);
    }
  return C;
}

Mat mat_sub(const Mat& A, const Mat& B) {
  Mat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

Mat mat_transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

std::vector<int> rref(Mat& A) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int p = -1;
    for (int i = r; i < A.rows; ++i)
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A(p, j), A(r, j));
    Q inv = 1 / A(r, c);
    for (int j = c; j < A.cols; ++j) A(r, j) *= inv;
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Q f = A(i, c);
      for (int j = c; j < A.cols; ++j)
        if (A(r, j) != 0) A(i, j) -= f * A(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int mat_rank(Mat A) { return static_cast<int>(rref(A).size()); }

Q mat_det(Mat A) {
  if (A.rows != A.cols) throw std::invalid_argument("det: not square");
  int n = A.rows;
  Q det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (A(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(A(p, j), A(c, j));
      det = -det;
    }
    det *= A(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (A(i, c) == 0) continue;
      Q f = A(i, c) / A(c, c);
      for (int j = c; j < n; ++j) A(i, j) -= f * A(c, j);
    }
  }
  return det;
}

std::optional<Mat> mat_inverse(const Mat& A) {
  if (A.rows != A.cols) return std::nullopt;
  int n = A.rows;
  Mat W(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) W(i, j) = A(i, j);
    W(i, n + i) = 1;
  }
  auto piv = rref(W);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = W(i, n + j);
  return inv;
}

std::vector<std::vector<Q>> nullspace(const Mat& A) {
  Mat R = A;
  auto piv = rref(R);
  std::vector<bool> is_piv(A.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Q>> out;
  for (int fc = 0; fc < A.cols; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<Q> x(A.cols);
    x[fc] = 1;
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -R(static_cast<int>(i), fc);
    out.push_back(std::move(x));
  }
  return out;
}

bool EchelonBasis::insert(const SparseVec& v0) {
  SparseVec v = v0;
  SparseVec combo;
  if (track_) combo = sv_unit(inserted_, 1);
  ++inserted_;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) break;
    Q c = v.front().second;  // row leads are normalized to 1
    v = sv_axpy(v, -c, it->second.v);
    if (track_) combo = sv_axpy(combo, -c, it->second.combo);
  }
  if (v.empty()) {
    last_dep_ = combo;
    return false;
  }
  Q inv = 1 / v.front().second;
  int lead = v.front().first;
  Row row{sv_scale(v, inv), track_ ? sv_scale(combo, inv) : SparseVec{}};
  rows_.emplace(lead, std::move(row));
  return true;
}

SparseVec EchelonBasis::reduce(const SparseVec& v0) const {
  SparseVec v = v0;
  SparseVec rest;
  // Leading-term reduction; non-pivot leads are moved aside.
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) {
      rest.push_back(v.front());
      v.erase(v.begin());
      continue;
    }
    Q c = v.front().second;
    v = sv_axpy(v, -c, it->second.v);
  }
  return rest;
}

std::optional<SparseVec> EchelonBasis::coordinates(const SparseVec& v0) const {
  if (!track_) throw std::logic_error("coordinates: tracking disabled");
  SparseVec v = v0;
  SparseVec coords;
  while (!v.empty()) {
    auto it = rows_.find(v.front().first);
    if (it == rows_.end()) return std::nullopt;
    Q c = v.front().second;
    v = sv_axpy(v, -c, it->second.v);
    coords = sv_axpy(coords, c, it->second.combo);
  }
  return coords;
}

}  // namespace wbr
