#include "wbr/program.hpp"

namespace wbr {

SparseVec RightActor::act_word(const SparseVec& v0, const Word& w) const {
  SparseVec v = v0;
  for (const auto& g : w) v = act(v, g);
  return v;
}

namespace {
struct Runner {
  const RightActor& a;
  SparseVec& v;
  void operator()(const OpWord& o) const { v = a.act_word(v, o.w); }
  void operator()(const OpShift& o) const {
    SparseVec z = o.barred ? a.act_xb(v, o.i) : a.act_x(v, o.i);
    v = sv_axpy(z, -o.u, v);
  }
  void operator()(const OpGroup& o) const {
    SparseVec out;
    for (const auto& [w, c] : o.g) {
      auto word = perm_word(w);
      out = sv_axpy(out, c, a.act_word(v, o.barred ? word_sb(word) : word_s(word)));
    }
    v = std::move(out);
  }
};
}  // namespace

SparseVec run_program(const RightActor& a, SparseVec v, const Program& p) {
  for (const auto& op : p) {
    if (v.empty()) break;
    std::visit(Runner{a, v}, op);
  }
  return v;
}

void append(Program& p, const Program& q) { p.insert(p.end(), q.begin(), q.end()); }

Program prog_word(const Word& w) {
  if (w.empty()) return {};
  return {OpWord{w}};
}

Program prog_perm(const Perm& w, bool barred) {
  auto word = perm_word(w);
  return prog_word(barred ? word_sb(word) : word_s(word));
}

Program prog_cell_middle(const Bipartition& l, bool barred, const Q& u) {
  Program p;
  int a = psize(l.first), n = l.size();
  for (int i = 1; i <= a; ++i) p.push_back(OpShift{barred, i, u});
  auto y1 = young_elements(l.first, 0, n);
  auto y2 = young_elements(l.second, a, n);
  p.push_back(OpGroup{barred, barred ? y1.y : y1.x});
  p.push_back(OpGroup{barred, barred ? y2.x : y2.y});
  return p;
}

Program prog_cell_y(const Bipartition& l, const BiTableau& s, const BiTableau& t, bool barred, const Q& u) {
  Program p = prog_perm(tableau_perm(s).inverse(), barred);
  append(p, prog_cell_middle(l, barred, u));
  append(p, prog_perm(tableau_perm(t), barred));
  return p;
}

}  // namespace wbr
