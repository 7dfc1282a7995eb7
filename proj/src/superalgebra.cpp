#include "wbr/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wbr {

std::string to_string(const SuperWeight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + qstr(w[i]);
  return s + ")";
}

bool is_typical_pq(int m, int n, const Q& p, const Q& q) {
  Q d = p - q;
  if (d.get_den() != 1) return true;
  return d <= -m || d >= n;
}

SparseMat sm_identity(int d) {
  SparseMat I(d);
  for (int i = 0; i < d; ++i) I[i] = sv_unit(i);
  return I;
}

SparseMat sm_add(const SparseMat& A, const SparseMat& B, const Q& c) {
  SparseMat C(A.size());
  for (size_t i = 0; i < A.size(); ++i) C[i] = sv_axpy(A[i], c, B[i]);
  return C;
}

bool sm_is_zero(const SparseMat& A) {
  return std::all_of(A.begin(), A.end(), [](const SparseVec& v) { return v.empty(); });
}

std::optional<Q> operator_ratio(const SparseMat& A, const SparseMat& B) {
  std::optional<Q> c;
  for (size_t i = 0; i < A.size(); ++i) {
    if (B[i].empty()) {
      if (!A[i].empty()) return std::nullopt;
      continue;
    }
    if (!c) c = sv_get(A[i], B[i].front().first) / B[i].front().second;
    if (sv_axpy(A[i], -*c, B[i]).size()) return std::nullopt;
  }
  return c ? c : std::optional<Q>(Q(0));
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

SuperModule::SuperModule(int m, int n, const Q& p, const Q& q, int r, int t)
    : m_(m), n_(n), r_(r), t_(t), p_(p), q_(q) {
  if (m < 1 || n < 1 || r < 0 || t < 0) throw std::invalid_argument("need m,n >= 1 and r,t >= 0");
  if (m * n > 16) throw std::invalid_argument("m*n too large for the Kac module model");
  if (!is_typical_pq(m, n, p, q))
    throw std::invalid_argument("lambda_pq is not typical: need p-q not an integer, p-q <= -m or p-q >= n");
  kac_dim_ = 1 << (m * n);
  long d = static_cast<long>(ipow(m + n, r + t)) * kac_dim_;
  if (d > 400'000) throw std::invalid_argument("tensor space too large");
  dim_ = static_cast<int>(d);

  for (int i = 1; i < r; ++i) {
    gens_.push_back(gen_s(i));
    gen_ops_.push_back(casimir(r - i - 1, r - i));
  }
  for (int j = 1; j < t; ++j) {
    gens_.push_back(gen_sb(j));
    gen_ops_.push_back(casimir(r + j, r + j + 1));
  }
  auto neg = [](SparseMat M) {
    for (auto& row : M)
      for (auto& [k, c] : row) c = -c;
    return M;
  };
  if (r >= 1 && t >= 1) {
    gens_.push_back(gen_e());
    gen_ops_.push_back(neg(casimir(r - 1, r + 1)));
  }
  if (r >= 1) {
    gens_.push_back(gen_x());
    gen_ops_.push_back(neg(casimir(r - 1, r)));
    xs_.push_back(gen_ops_.back());
    for (int i = 1; i < r; ++i) {
      const SparseMat& S = op(gen_s(i));
      xs_.push_back(sm_add(sm_mul(sm_mul(S, xs_.back()), S), S, -1));
    }
  }
  if (t >= 1) {
    gens_.push_back(gen_xb());
    gen_ops_.push_back(neg(casimir(r, r + 1)));
    xbs_.push_back(gen_ops_.back());
    for (int j = 1; j < t; ++j) {
      const SparseMat& S = op(gen_sb(j));
      xbs_.push_back(sm_add(sm_mul(sm_mul(S, xbs_.back()), S), S, -1));
    }
  }
}

int SuperModule::index(const SuperBasisVector& b) const {
  int idx = 0;
  for (int k = r_; k >= 1; --k) idx = idx * (m_ + n_) + (b.i[k - 1] - 1);
  idx = idx * kac_dim_ + b.sigma;
  for (int j = 1; j <= t_; ++j) idx = idx * (m_ + n_) + (b.j[j - 1] - 1);
  return idx;
}

SuperBasisVector SuperModule::decode(int idx) const {
  SuperBasisVector b;
  b.i.assign(r_, 0);
  b.j.assign(t_, 0);
  for (int j = t_; j >= 1; --j) {
    b.j[j - 1] = idx % (m_ + n_) + 1;
    idx /= (m_ + n_);
  }
  b.sigma = idx % kac_dim_;
  idx /= kac_dim_;
  for (int k = 1; k <= r_; ++k) {
    b.i[k - 1] = idx % (m_ + n_) + 1;
    idx /= (m_ + n_);
  }
  return b;
}

int SuperModule::factor_parity(const SuperBasisVector& b, int pos) const {
  if (pos < r_) return b.i[r_ - pos - 1] > m_;
  if (pos == r_) return std::popcount(static_cast<unsigned>(b.sigma)) & 1;
  return b.j[pos - r_ - 1] > m_;
}

int SuperModule::parity(int idx) const {
  auto b = decode(idx);
  int s = 0;
  for (int pos = 0; pos <= r_ + t_; ++pos) s ^= factor_parity(b, pos);
  return s;
}

SuperWeight SuperModule::weight(int idx) const {
  auto b = decode(idx);
  SuperWeight w(m_ + n_);
  for (int a = 0; a < m_; ++a) w[a] = p_;
  for (int a = m_; a < m_ + n_; ++a) w[a] = -q_;
  for (int v : b.i) w[v - 1] += 1;
  for (int v : b.j) w[v - 1] -= 1;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= m_; ++j)
      if (b.sigma >> ((i - 1) * m_ + (j - 1)) & 1) {
        w[m_ + i - 1] += 1;
        w[j - 1] -= 1;
      }
  return w;
}

std::string SuperModule::basis_string(int idx) const {
  auto b = decode(idx);
  std::ostringstream os;
  for (int k = r_; k >= 1; --k) os << "v" << b.i[k - 1] << " (x) ";
  os << "b[";
  for (int k = 0; k < m_ * n_; ++k) os << (b.sigma >> k & 1);
  os << "]";
  for (int j = 1; j <= t_; ++j) os << " (x) w" << b.j[j - 1];
  return os.str();
}

// b^sigma = F_{k1} F_{k2} ... v_pq with k1 < k2 < ..., F_k = E_{m+i,j}, k = (i-1)m + (j-1).
SparseVec SuperModule::kac_action(int a, int b, int sigma) const {
  auto key = std::make_tuple(a, b, sigma);
  if (auto it = kac_memo_.find(key); it != kac_memo_.end()) return it->second;
  auto par = [&](int c) { return c > m_ ? 1 : 0; };
  const int pab = par(a) ^ par(b);
  auto insert = [&](int k, const SparseVec& v) {
    SparseVec out;
    for (const auto& [s, c] : v) {
      if (s >> k & 1) continue;
      int sign = std::popcount(static_cast<unsigned>(s & ((1 << k) - 1))) & 1;
      out.emplace_back(s | (1 << k), sign ? Q(-c) : c);
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
  };
  SparseVec res;
  if (sigma == 0) {
    if (a == b) {
      Q lam = a <= m_ ? p_ : Q(-q_);
      if (lam != 0) res = sv_unit(0, lam);
    } else if (a > m_ && b <= m_) {
      res = sv_unit(1 << ((a - m_ - 1) * m_ + (b - 1)));
    }
  } else {
    int k = std::countr_zero(static_cast<unsigned>(sigma));
    int rest = sigma & ~(1 << k);
    int i = k / m_ + 1, j = k % m_ + 1;
    // [E_ab, E_{m+i,j}] = d_{b,m+i} E_aj - (-1)^{|ab|} d_{ja} E_{m+i,b}
    if (b == m_ + i) res = sv_axpy(res, 1, kac_action(a, j, rest));
    if (j == a) res = sv_axpy(res, pab ? Q(1) : Q(-1), kac_action(m_ + i, b, rest));
    res = sv_axpy(res, pab ? Q(-1) : Q(1), insert(k, kac_action(a, b, rest)));
  }
  kac_memo_[key] = res;
  return res;
}

namespace {

struct FactorResult {
  int state;
  Q c;
};

}  // namespace

const SparseMat& SuperModule::E(int a, int b) const {
  auto key = std::make_pair(a, b);
  if (auto it = emats_.find(key); it != emats_.end()) return it->second;
  if (a < 1 || b < 1 || a > m_ + n_ || b > m_ + n_) throw std::out_of_range("E_ab index");
  const int pab = (a > m_) ^ (b > m_);
  SparseMat M(dim_);
  for (int idx = 0; idx < dim_; ++idx) {
    auto bv = decode(idx);
    std::map<int, Q> out;
    int before = 0;
    for (int pos = 0; pos <= r_ + t_; ++pos) {
      Q sign = (pab && (before & 1)) ? -1 : 1;
      auto nb = bv;
      if (pos < r_) {
        int& s = nb.i[r_ - pos - 1];
        if (s == b) {
          s = a;
          out[index(nb)] += sign;
        }
      } else if (pos == r_) {
        for (const auto& [s, c] : kac_action(a, b, bv.sigma)) {
          nb.sigma = s;
          out[index(nb)] += sign * c;
        }
      } else {
        int& s = nb.j[pos - r_ - 1];
        if (s == a) {
          s = b;
          int e = (a > m_) * ((a > m_) + (b > m_));
          out[index(nb)] += (e & 1) ? sign : Q(-sign);
        }
      }
      before += factor_parity(bv, pos);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    M[idx] = sv_from_map(out);
  }
  return emats_[key] = std::move(M);
}

// Omega = sum_{i,j} (-1)^{[j]} E_ij (x) E_ji placed at positions pa < pb.
SparseMat SuperModule::casimir(int pa, int pb) const {
  const int N = m_ + n_;
  auto par = [&](int c) { return c > m_ ? 1 : 0; };
  // Single-factor action on the state at a position.
  auto factor_act = [&](int pos, int a, int b, const SuperBasisVector& bv) {
    std::vector<std::pair<SuperBasisVector, Q>> out;
    auto nb = bv;
    if (pos < r_) {
      int& s = nb.i[r_ - pos - 1];
      if (s == b) {
        s = a;
        out.emplace_back(nb, 1);
      }
    } else if (pos == r_) {
      for (const auto& [s, c] : kac_action(a, b, bv.sigma)) {
        nb.sigma = s;
        out.emplace_back(nb, c);
      }
    } else {
      int& s = nb.j[pos - r_ - 1];
      if (s == a) {
        s = b;
        int e = par(a) * (par(a) + par(b));
        out.emplace_back(nb, (e & 1) ? Q(1) : Q(-1));
      }
    }
    return out;
  };
  SparseMat M(dim_);
  for (int idx = 0; idx < dim_; ++idx) {
    auto bv = decode(idx);
    int before_a = 0, before_b = 0;
    for (int pos = 0; pos < pb; ++pos) {
      if (pos < pa) before_a += factor_parity(bv, pos);
      before_b += factor_parity(bv, pos);
    }
    std::map<int, Q> out;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        const int pe = par(i) ^ par(j);
        Q base = par(j) ? -1 : 1;
        if (pe && (before_b & 1)) base = -base;
        if (pe && (before_a & 1)) base = -base;
        for (const auto& [v1, c1] : factor_act(pb, j, i, bv))
          for (const auto& [v2, c2] : factor_act(pa, i, j, v1)) out[index(v2)] += base * c1 * c2;
      }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    M[idx] = sv_from_map(out);
  }
  return M;
}

const SparseMat& SuperModule::op(const Gen& g) const {
  if (g.kind == GenKind::X && g.idx > 1) return x_op(g.idx);
  if (g.kind == GenKind::XB && g.idx > 1) return xb_op(g.idx);
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i] == g) return gen_ops_[i];
  throw std::out_of_range("generator not available on this tensor space");
}

SparseMat SuperModule::monomial_operator(const CyclotomicAlgebra& B, int idx) const {
  SparseMat M(dim_);
  for (int i = 0; i < dim_; ++i) {
    SparseVec v = sv_unit(i);
    for (const auto& [w, c] : B.monomial_poly(idx)) M[i] = sv_axpy(M[i], c, act_word(v, w));
  }
  return M;
}

SparseMat SuperModule::element_operator(const CyclotomicAlgebra& B, const SparseVec& coords) const {
  SparseMat M(dim_);
  for (const auto& [k, c] : coords) M = sm_add(M, monomial_operator(B, k), c);
  return M;
}

std::vector<int> SuperModule::weight_space(const SuperWeight& w) const {
  std::vector<int> out;
  for (int i = 0; i < dim_; ++i)
    if (weight(i) == w) out.push_back(i);
  return out;
}

std::vector<SuperWeight> SuperModule::weights() const {
  std::set<SuperWeight> s;
  for (int i = 0; i < dim_; ++i) s.insert(weight(i));
  return {s.begin(), s.end()};
}

// ------------------------------------------------------------ audits

OperatorRelationReport audit_relations(const SuperModule& M) {
  OperatorRelationReport rep;
  auto P = M.parameters();
  auto B = CyclotomicAlgebra::build(P, M.r(), M.t());
  for (const auto& rel : defining_relations(B->params(), M.r(), M.t())) {
    SparseMat R(M.dim());
    for (const auto& [w, c] : rel.poly)
      for (int i = 0; i < M.dim(); ++i) R[i] = sv_axpy(R[i], c, M.act_word(sv_unit(i), w));
    ++rep.checked;
    if (!sm_is_zero(R)) {
      rep.ok = false;
      rep.failures.push_back(rel.name);
    }
  }
  return rep;
}

PhiRank phi_rank(const SuperModule& M, unsigned seed) {
  (void)seed;
  PhiRank out;
  if (M.r() == 0 && M.t() == 0) {
    out.rank = out.dim = 1;
    return out;
  }
  auto B = CyclotomicAlgebra::build(M.parameters(), M.r(), M.t());
  out.dim = B->dim();
  EchelonBasis eb(true);
  std::vector<SparseMat> ops;
  const long D = M.dim();
  for (int k = 0; k < B->dim(); ++k) {
    ops.push_back(M.monomial_operator(*B, k));
    SparseVec flat;
    for (long i = 0; i < D; ++i)
      for (const auto& [j, c] : ops.back()[i]) flat.emplace_back(static_cast<int>(i * D + j), c);
    if (!eb.insert(flat)) {
      // Certify: the recorded dependency must map to the zero operator.
      const SparseVec& dep = eb.last_dependency();
      SparseMat Z(M.dim());
      for (const auto& [j, c] : dep) Z = sm_add(Z, ops[j], c);
      if (!sm_is_zero(Z)) throw std::runtime_error("phi_rank: kernel certificate failed");
      out.kernel.push_back(dep);
    }
  }
  out.rank = eb.rank();
  return out;
}

long commutant_dim(const SuperModule& M, long max_unknowns) {
  std::map<SuperWeight, std::vector<int>> blocks;
  for (int i = 0; i < M.dim(); ++i) blocks[M.weight(i)].push_back(i);
  std::vector<int> block_of(M.dim()), local(M.dim());
  std::vector<long> offset;
  std::vector<int> bsize;
  long unknowns = 0;
  int bi = 0;
  for (auto& [w, idxs] : blocks) {
    offset.push_back(unknowns);
    bsize.push_back(static_cast<int>(idxs.size()));
    for (size_t l = 0; l < idxs.size(); ++l) {
      block_of[idxs[l]] = bi;
      local[idxs[l]] = static_cast<int>(l);
    }
    unknowns += static_cast<long>(idxs.size()) * idxs.size();
    ++bi;
  }
  if (unknowns > max_unknowns) throw std::invalid_argument("commutant system exceeds the size guard");
  auto var = [&](int a, int b) {  // X[a][b], a and b in the same block
    return offset[block_of[a]] + static_cast<long>(local[a]) * bsize[block_of[a]] + local[b];
  };
  EchelonBasis eb;
  const int N = M.m() + M.n();
  std::vector<std::pair<int, int>> chev;
  for (int a = 1; a < N; ++a) {
    chev.emplace_back(a, a + 1);
    chev.emplace_back(a + 1, a);
  }
  for (const auto& [ea, eb_] : chev) {
    const SparseMat& Em = M.E(ea, eb_);
    for (auto& [w, idxs] : blocks) {
      // Equation rows for source a in this block: (X then E)[a][c] = (E then X)[a][c].
      for (int a : idxs) {
        std::map<int, std::map<long, Q>> eqs;  // by target c
        for (int b : idxs)
          for (const auto& [c, e] : Em[b]) eqs[c][var(a, b)] += e;
        for (const auto& [bp, e] : Em[a]) {
          const auto& tgt = blocks.at(M.weight(bp));
          for (int c : tgt) eqs[c][var(bp, c)] -= e;
        }
        for (auto& [c, row] : eqs) {
          std::map<int, Q> r;
          for (auto& [v, q] : row)
            if (q != 0) r[static_cast<int>(v)] = q;
          if (!r.empty()) eb.insert(sv_from_map(r));
        }
      }
    }
  }
  return unknowns - eb.rank();
}

std::vector<SparseVec> hwv_kernel_basis(const SuperModule& M, const SuperWeight& w) {
  auto W = M.weight_space(w);
  std::vector<SparseVec> out;
  if (W.empty()) return out;
  const int N = M.m() + M.n();
  std::map<int, int> col;
  std::vector<std::vector<std::pair<int, Q>>> rows(W.size());
  for (int a = 1; a < N; ++a) {
    const SparseMat& E = M.E(a, a + 1);
    for (size_t r = 0; r < W.size(); ++r)
      for (const auto& [c, q] : E[W[r]]) {
        int key = (a - 1) * M.dim() + c;
        auto it = col.emplace(key, static_cast<int>(col.size())).first;
        rows[r].emplace_back(it->second, q);
      }
  }
  Mat A(std::max<int>(1, static_cast<int>(col.size())), static_cast<int>(W.size()));
  for (size_t r = 0; r < W.size(); ++r)
    for (const auto& [c, q] : rows[r]) A(c, static_cast<int>(r)) += q;
  for (const auto& v : nullspace(A)) {
    std::map<int, Q> m;
    for (size_t r = 0; r < W.size(); ++r)
      if (v[r] != 0) m[W[r]] = v[r];
    out.push_back(sv_from_map(m));
  }
  return out;
}

int hwv_kernel_oracle(const SuperModule& M, const SuperWeight& w) {
  return static_cast<int>(hwv_kernel_basis(M, w).size());
}

// ------------------------------------------------------------ HWVs

SuperWeight triple_weight(int m, int n, const Q& p, const Q& q, const CellIndex& idx) {
  SuperWeight w(m + n);
  for (int a = 0; a < m; ++a) w[a] = p;
  for (int a = m; a < m + n; ++a) w[a] = -q;
  auto part = [](const Partition& l, int i) { return i < static_cast<int>(l.size()) ? l[i] : 0; };
  for (int a = 0; a < m; ++a) w[a] += part(idx.mu.first, a) - part(idx.nu.first, m - 1 - a);
  for (int b = 0; b < n; ++b) w[m + b] += part(idx.mu.second, b) - part(idx.nu.second, n - 1 - b);
  return w;
}

CellIndex hwv_cell_index(const CellIndex& idx) {
  return {idx.f, hecke_conjugate(idx.mu), hecke_conjugate(swap_components(idx.nu))};
}

SparseVec hwv_seed(const SuperModule& M, const CellIndex& idx) {
  const int m = M.m(), n = M.n();
  SuperBasisVector b;
  auto fill = [](std::vector<int>& out, const Partition& l, auto letter) {
    for (size_t k = 0; k < l.size(); ++k)
      for (int c = 0; c < l[k]; ++c) out.push_back(letter(static_cast<int>(k) + 1));
  };
  fill(b.i, idx.mu.first, [](int k) { return k; });
  fill(b.i, idx.mu.second, [m](int k) { return m + k; });
  for (int c = 0; c < idx.f; ++c) b.i.push_back(1);
  fill(b.j, idx.nu.second, [m, n](int k) { return m + n - k + 1; });
  fill(b.j, idx.nu.first, [m](int k) { return m - k + 1; });
  for (int c = 0; c < idx.f; ++c) b.j.push_back(1);
  b.sigma = 0;
  for (int v : b.i)
    if (v > m + n) throw std::invalid_argument("index does not fit gl(m|n)");
  for (int v : b.j)
    if (v < 1 || v > m + n) throw std::invalid_argument("index does not fit gl(m|n)");
  if (static_cast<int>(b.i.size()) != M.r() || static_cast<int>(b.j.size()) != M.t())
    throw std::invalid_argument("index sizes do not match (r,t)");
  return sv_unit(M.index(b));
}

Program hwv_program(const SuperModule& M, const CellIndex& idx, const CellLabel& lab) {
  const int r = M.r(), t = M.t();
  auto P = M.parameters();
  CellIndex c = hwv_cell_index(idx);
  Program prog = prog_word(word_e_tail(r, t, idx.f));
  append(prog, prog_perm(w_lambda(idx.mu), false));
  append(prog, prog_perm(w_lambda(swap_components(idx.nu)), true));
  append(prog, prog_cell_middle(c.mu, false, P.u[0]));
  append(prog, prog_cell_middle(c.nu, true, P.ubar[0]));
  append(prog, prog_perm(tableau_perm(lab.t1), false));
  append(prog, prog_perm(tableau_perm(lab.t2), true));
  append(prog, prog_word(word_coset(lab.c)));
  for (int i = 1; i <= r; ++i)
    if (lab.c.kappa[i - 1]) prog.push_back(OpShift{false, i, 0});
  return prog;
}

HwvResult hwv_construct(const SuperModule& M, const CellIndex& idx) {
  HwvResult res;
  CellIndex c = hwv_cell_index(idx);
  res.labels = delta(c, M.r(), M.t());
  SparseVec seed = hwv_seed(M, idx);
  SuperWeight w = triple_weight(M.m(), M.n(), M.p(), M.q(), idx);
  EchelonBasis eb;
  const int N = M.m() + M.n();
  for (const auto& lab : res.labels) {
    SparseVec v = run_program(M, seed, hwv_program(M, idx, lab));
    if (v.empty()) res.all_nonzero = false;
    for (const auto& [k, q] : v)
      if (M.weight(k) != w) res.weight_ok = false;
    for (int a = 1; a < N; ++a)
      if (!sm_apply(v, M.E(a, a + 1)).empty()) res.all_killed = false;
    if (!eb.insert(v)) res.independent = false;
    res.vectors.push_back(std::move(v));
  }
  return res;
}

HomKacResult hom_kac_dim(const SuperModule& M, const CellularBasis& cb, const CellIndex& idx, unsigned seed) {
  HomKacResult out;
  out.constructed = static_cast<int>(hwv_construct(M, idx).vectors.size());
  auto V = hwv_kernel_basis(M, triple_weight(M.m(), M.n(), M.p(), M.q(), idx));
  out.dim = static_cast<int>(V.size());
  CellModule C = cell_module_C(cb, hwv_cell_index(idx));
  const int d = out.dim;
  out.cell_dim = static_cast<int>(C.basis.size());
  if (out.cell_dim != d || d == 0) return out;
  EchelonBasis eb(true);
  for (const auto& v : V) eb.insert(v);
  // A_g[i] = coordinates of v_i * g.
  std::vector<Mat> A;
  for (const auto& g : C.gens) {
    Mat Ag(d, d);
    for (int i = 0; i < d; ++i) {
      auto co = eb.coordinates(sm_apply(V[i], M.op(g)));
      if (!co) {
        out.closed = false;
        return out;
      }
      for (const auto& [j, c] : *co) Ag(i, j) = c;
    }
    A.push_back(std::move(Ag));
  }
  // Unknown X (d x d) with A_g X = X B_g for every generator.
  const int nv = d * d;
  Mat S(static_cast<int>(A.size()) * nv, nv);
  for (size_t g = 0; g < A.size(); ++g) {
    const Mat& Bg = C.action[g];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int row = static_cast<int>(g) * nv + i * d + j;
        for (int k = 0; k < d; ++k) {
          S(row, k * d + j) += A[g](i, k);
          S(row, i * d + k) -= Bg(k, j);
        }
      }
  }
  auto ns = nullspace(S);
  if (ns.empty()) return out;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int attempt = 0; attempt < 20 && !out.action_match; ++attempt) {
    Mat X(d, d);
    for (const auto& vec : ns) {
      Q c = attempt == 0 && ns.size() == 1 ? Q(1) : Q(dist(rng));
      for (int k = 0; k < nv; ++k) X(k / d, k % d) += c * vec[k];
    }
    if (mat_det(X) != 0) {
      out.action_match = true;
      out.intertwiner = X;
    }
  }
  return out;
}

}  // namespace wbr
