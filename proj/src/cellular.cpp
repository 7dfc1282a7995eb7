#include "wbr/cellular.hpp"

#include <sstream>
#include <stdexcept>

#include "wbr/hecke.hpp"

namespace wbr {

std::string to_string(const CellIndex& c) {
  return "(" + std::to_string(c.f) + ", " + to_string(c.mu) + ", " + to_string(c.nu) + ")";
}

std::vector<CellIndex> lambda_poset(int r, int t) {
  std::vector<CellIndex> out;
  for (int f = std::min(r, t); f >= 0; --f)
    for (const auto& mu : enumerate_bipartitions(r - f))
      for (const auto& nu : enumerate_bipartitions(t - f)) out.push_back({f, mu, nu});
  return out;
}

bool poset_geq(const CellIndex& a, const CellIndex& b) {
  if (a.f != b.f) return a.f > b.f;
  return dominance_leq(b.mu, a.mu) && dominance_leq(b.nu, a.nu);
}

bool poset_gt(const CellIndex& a, const CellIndex& b) { return a != b && poset_geq(a, b); }

namespace {
std::string tab_string(const Tableau& t) {
  std::ostringstream o;
  o << "[";
  for (size_t i = 0; i < t.size(); ++i) {
    o << (i ? "," : "") << "[";
    for (size_t j = 0; j < t[i].size(); ++j) o << (j ? "," : "") << t[i][j];
    o << "]";
  }
  o << "]";
  return o.str();
}
std::string bitab_string(const BiTableau& t) { return "(" + tab_string(t.first) + "," + tab_string(t.second) + ")"; }
}  // namespace

std::string to_string(const CellLabel& l) {
  std::ostringstream o;
  o << bitab_string(l.t1) << "x" << bitab_string(l.t2) << " c=" << to_string(word_coset(l.c)) << " k=";
  for (int k : l.c.kappa) o << k;
  return o.str();
}

std::vector<CellLabel> delta(const CellIndex& idx, int r, int t) {
  std::vector<CellLabel> out;
  auto cs = coset_reps(r, t, idx.f, CosetFlavor::Tail);
  for (const auto& t1 : standard_tableaux(idx.mu))
    for (const auto& t2 : standard_tableaux(idx.nu))
      for (const auto& c : cs) out.push_back({t1, t2, c});
  return out;
}

long cell_dimension(const CellIndex& idx, int r, int t) {
  return count_standard(idx.mu) * count_standard(idx.nu) * static_cast<long>(coset_reps(r, t, idx.f, CosetFlavor::Tail).size());
}

Program prog_n(const Parameters& p, const CellIndex& idx, const CellLabel& S, const CellLabel& T) {
  if (p.k != 2 || p.u.size() != 2 || p.ubar.size() != 2)
    throw std::invalid_argument("cellular basis needs level two parameters with known u and ubar");
  Program prog = prog_cell_y(idx.mu, S.t1, T.t1, false, p.u[0]);
  append(prog, prog_cell_y(idx.nu, S.t2, T.t2, true, p.ubar[0]));
  return prog;
}

Program prog_cellular(const Parameters& p, int r, int t, const CellIndex& idx, const CellLabel& S, const CellLabel& T) {
  Program prog;
  for (int i = 1; i <= r; ++i)
    if (S.c.kappa[i - 1]) prog.push_back(OpShift{false, i, 0});
  append(prog, prog_word(word_coset_inverse(S.c)));
  append(prog, prog_word(word_e_tail(r, t, idx.f)));
  append(prog, prog_n(p, idx, S, T));
  append(prog, prog_word(word_coset(T.c)));
  for (int i = 1; i <= r; ++i)
    if (T.c.kappa[i - 1]) prog.push_back(OpShift{false, i, 0});
  return prog;
}

CellularBasis::CellularBasis(AlgebraPtr alg) : alg_(std::move(alg)) {
  const int r = alg_->r(), t = alg_->t();
  AlgebraActor actor(*alg_);
  for (const auto& idx : lambda_poset(r, t)) {
    auto labs = delta(idx, r, t);
    first_entry_[idx] = static_cast<int>(entries_.size());
    const int d = static_cast<int>(labs.size());
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        entries_.push_back({idx, a, b});
        elems_.push_back(run_program(actor, sv_unit(0), prog_cellular(alg_->params(), r, t, idx, labs[a], labs[b])));
        eb_.insert(elems_.back());
      }
    labels_[idx] = std::move(labs);
  }
  rank_ = eb_.rank();
}

SparseVec CellularBasis::coordinates(const SparseVec& v) const {
  if (!is_basis()) throw std::runtime_error("cellular elements do not form a basis");
  return *eb_.coordinates(v);
}

int CellularBasis::entry_position(const CellIndex& idx, int left, int right) const {
  int d = static_cast<int>(labels_.at(idx).size());
  return first_entry_.at(idx) + left * d + right;
}

Program CellularBasis::program(int entry) const {
  const auto& e = entries_[entry];
  const auto& labs = labels_.at(e.index);
  return prog_cellular(alg_->params(), alg_->r(), alg_->t(), e.index, labs[e.left], labs[e.right]);
}

const Mat& CellModule::action_of(const Gen& g) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == g) return action[i];
  throw std::out_of_range("cell module: generator not available");
}

CellModule cell_module_C(const CellularBasis& cb, const CellIndex& idx) {
  const auto& A = cb.algebra();
  CellModule mod;
  mod.index = idx;
  mod.basis = cb.labels(idx);
  mod.gens = generators(A.r(), A.t());
  const int d = static_cast<int>(mod.basis.size());

  // Coefficients of C_{x, *} in v; anything else must sit in a strictly higher cell.
  auto read_row = [&](const SparseVec& v, int x, std::vector<Q>& row) {
    row.assign(d, 0);
    for (const auto& [pos, c] : cb.coordinates(v)) {
      const auto& e = cb.entries()[pos];
      if (e.index == idx && e.left == x)
        row[e.right] = c;
      else if (!poset_gt(e.index, idx))
        mod.filtration_ok = false;
    }
  };

  std::vector<Q> row;
  for (const auto& g : mod.gens) {
    Mat M(d, d);
    for (int i = 0; i < d; ++i) {
      read_row(A.act(cb.elements()[cb.entry_position(idx, 0, i)], g), 0, row);
      for (int j = 0; j < d; ++j) M(i, j) = row[j];
    }
    mod.action.push_back(std::move(M));
  }

  AlgebraActor actor(A);
  auto gram_with = [&](int x, int y) {
    Mat G(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        SparseVec prod = run_program(actor, cb.elements()[cb.entry_position(idx, x, a)], cb.program(cb.entry_position(idx, b, y)));
        read_row(prod, x, row);
        for (int j = 0; j < d; ++j)
          if (j != y && row[j] != 0) mod.filtration_ok = false;
        G(a, b) = row[y];
      }
    return G;
  };
  mod.gram = gram_with(0, 0);
  if (d > 1) {
    Mat G2 = gram_with(d - 1, d > 2 ? 1 : 0);
    if (!mat_sub(G2, mod.gram).is_zero()) mod.gram_independent = false;
  }
  mod.gram_rank = mat_rank(mod.gram);
  return mod;
}

SimplicityReport gram_and_simplicity(const CellularBasis& cb, const CellIndex& idx) {
  const auto& A = cb.algebra();
  const auto& p = A.params();
  auto mod = cell_module_C(cb, idx);
  SimplicityReport rep;
  rep.dim = static_cast<int>(mod.basis.size());
  rep.rank = mod.gram_rank;
  rep.radical_dim = rep.dim - rep.rank;
  rep.simple_nonzero = rep.rank > 0;

  auto head_nonzero = [](int n, const Q& u1, const Q& u2, HeckeCellKind kind, const Bipartition& l) {
    if (n == 0) return true;
    HeckeAlgebra H(n, u1, u2);
    return H.cell_module(kind, l).gram_rank > 0;
  };
  bool heads = head_nonzero(A.r() - idx.f, -p.u[0], -p.u[1], HeckeCellKind::S2, idx.mu) &&
               head_nonzero(A.t() - idx.f, -p.ubar[0], -p.ubar[1], HeckeCellKind::S4, idx.nu);
  auto om = omega_sequence(p, 1);
  bool excluded = A.r() == A.t() && idx.f == A.r() && om[0] == 0 && om[1] == 0;
  rep.predicted_nonzero = heads && !excluded;
  return rep;
}

}  // namespace wbr
