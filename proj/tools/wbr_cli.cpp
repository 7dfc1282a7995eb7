// wbr: batch verification and tables for cyclotomic walled Brauer algebras.
//
// Exit codes: 0 success, 2 a verification failed, 3 bad parameters.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wbr/cellular.hpp"
#include "wbr/superalgebra.hpp"
#include "wbr/weightdiag.hpp"

using namespace wbr;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 2, kBadParams = 3;

struct BadParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int k = 2, r = 0, t = 0;
  std::optional<int> m, n;
  std::optional<std::string> p, q;
  std::string params_file, format = "text", out;
  unsigned seed = 1;
  int samples = 50;
  // weightdiag inputs
  std::string weight, diagram, mu, nu;
  int f = 0;
  long lo = 0;
  bool skip_commutant = false;
};

Q parse_q(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos && Q(s.substr(slash + 1)) == 0) throw BadParams("zero denominator: " + s);
  try {
    return qparse(s);
  } catch (const std::invalid_argument&) {
    throw BadParams("bad rational: " + s);
  }
}

std::vector<Q> parse_q_list(const std::string& s) {
  std::vector<Q> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(parse_q(tok));
  return out;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  for (const auto& q : parse_q_list(s)) {
    if (q.get_den() != 1 || q <= 0) throw BadParams("partition parts must be positive integers: " + s);
    p.push_back(static_cast<int>(q.get_num().get_si()));
  }
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] > p[i - 1]) throw BadParams("partition must be non-increasing: " + s);
  return p;
}

// "2,1|1" -> ((2,1),(1)); "|" and "" are empty.
Bipartition parse_bipartition(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) return {parse_partition(s), {}};
  return {parse_partition(s.substr(0, bar)), parse_partition(s.substr(bar + 1))};
}

json q_vec_json(const std::vector<Q>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(qstr(x));
  return a;
}

std::vector<Q> json_q_list(const json& j, const char* key) {
  std::vector<Q> out;
  if (!j.contains(key)) return out;
  for (const auto& x : j.at(key)) out.push_back(x.is_string() ? parse_q(x.get<std::string>()) : Q(x.get<long>()));
  return out;
}

Parameters default_params(int k) {
  if (k == 1) return Parameters::level1(Q(2), Q(7, 3));
  if (k == 2) return Parameters::from_roots2(Q(1, 3), Q(-2, 7), Q(5, 11), Q(13, 17));
  Parameters P;
  P.k = k;
  for (int i = 1; i <= k; ++i) {
    P.u.push_back(Q(i) / (k + 1));
    P.omega_seed.push_back(Q(i + 1));
  }
  return P;
}

Parameters resolve_params(const Config& c) {
  if (c.k < 1) throw BadParams("k must be positive");
  if (!c.params_file.empty()) {
    std::ifstream in(c.params_file);
    if (!in) throw BadParams("cannot read " + c.params_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw BadParams(std::string("params file: ") + e.what());
    }
    Parameters P;
    P.k = j.value("k", c.k);
    P.u = json_q_list(j, "u");
    P.ubar = json_q_list(j, "ubar");
    P.omega_seed = json_q_list(j, "omega");
    P.omega_explicit = json_q_list(j, "omega_explicit");
    if (static_cast<int>(P.u.size()) != P.k || static_cast<int>(P.omega_seed.size()) != P.k)
      throw BadParams("params file needs k entries in u and omega");
    return P;
  }
  if (c.m && c.n && c.p && c.q) {
    if (c.k != 2) throw BadParams("Schur-Weyl parameters are level two");
    return Parameters::schur_weyl(Q(*c.m), Q(*c.n), parse_q(*c.p), parse_q(*c.q));
  }
  return default_params(c.k);
}

void require_rt(const Config& c) {
  if (c.r < 0 || c.t < 0) throw BadParams("r and t must be non-negative");
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

struct Report {
  json j;
  std::ostringstream text;
  bool verified = true;
  void fail(const std::string& what) {
    verified = false;
    j["failures"].push_back(what);
    text << "FAILED: " << what << "\n";
  }
};

// ---------------------------------------------------------------- dim

void cmd_dim(const Config& c, Report& rep) {
  require_rt(c);
  Parameters P = resolve_params(c);
  rep.j["schema"] = "wbr.dim/1";
  rep.j["params"] = P.describe();
  rep.text << "params " << P.describe() << "\n";
  if (auto bad = P.admissibility_failure()) {
    rep.j["admissible"] = false;
    rep.j["failing_l"] = *bad;
    throw BadParams("non-admissible parameters: recursion fails at l=" + std::to_string(*bad));
  }
  auto A = CyclotomicAlgebra::build(P, c.r, c.t);
  long expected = factorial(c.r + c.t);
  for (int i = 0; i < c.r + c.t; ++i) expected *= P.k;
  rep.j["admissible"] = true;
  rep.j["dim"] = A->dim();
  rep.j["expected"] = expected;
  rep.text << "B_{" << P.k << "," << c.r << "," << c.t << "} basis count " << A->dim() << " (expected " << expected
           << ")\n";
  if (A->dim() != expected) rep.fail("basis count");

  std::mt19937 rng(c.seed);
  int assoc_bad = 0, closure_bad = 0;
  for (int s = 0; s < c.samples; ++s) {
    auto a = A->element(rng() % A->dim()), b = A->element(rng() % A->dim()), d = A->element(rng() % A->dim());
    if (A->multiply(A->multiply(a, b), d) != A->multiply(a, A->multiply(b, d))) ++assoc_bad;
    int i = rng() % A->dim(), j = rng() % A->dim();
    if (A->normalize(poly_mul(A->monomial_poly(i), A->monomial_poly(j))) != A->multiply(A->element(i), A->element(j)))
      ++closure_bad;
  }
  rep.j["samples"] = c.samples;
  rep.j["associativity_failures"] = assoc_bad;
  rep.j["closure_failures"] = closure_bad;
  rep.text << "associativity " << c.samples - assoc_bad << "/" << c.samples << ", closure " << c.samples - closure_bad
           << "/" << c.samples << "\n";
  if (assoc_bad) rep.fail("associativity");
  if (closure_bad) rep.fail("closure");
}

// ----------------------------------------------------------- cellular

void cmd_cellular(const Config& c, Report& rep) {
  require_rt(c);
  if (c.k != 2) throw BadParams("the cellular structure is implemented for k = 2");
  Parameters P = resolve_params(c);
  if (auto bad = P.admissibility_failure())
    throw BadParams("non-admissible parameters: recursion fails at l=" + std::to_string(*bad));
  rep.j["schema"] = "wbr.cellular/1";
  rep.j["params"] = P.describe();
  rep.text << "params " << P.describe() << "\n";
  CellularBasis cb(CyclotomicAlgebra::build(P, c.r, c.t));
  rep.j["is_basis"] = cb.is_basis();
  if (!cb.is_basis()) rep.fail("cellular elements are not a basis");
  long total = 0;
  json cells = json::array();
  rep.text << "f  mu  nu  dim  gram_rank  radical  simple  predicted\n";
  for (const auto& idx : lambda_poset(c.r, c.t)) {
    auto mod = cell_module_C(cb, idx);
    auto s = gram_and_simplicity(cb, idx);
    total += static_cast<long>(s.dim) * s.dim;
    cells.push_back({{"f", idx.f}, {"mu", to_string(idx.mu)}, {"nu", to_string(idx.nu)}, {"dim", s.dim},
                     {"gram_rank", s.rank}, {"radical_dim", s.radical_dim}, {"simple_nonzero", s.simple_nonzero},
                     {"predicted_nonzero", s.predicted_nonzero}});
    rep.text << idx.f << "  " << to_string(idx.mu) << "  " << to_string(idx.nu) << "  " << s.dim << "  " << s.rank
             << "  " << s.radical_dim << "  " << s.simple_nonzero << "  " << s.predicted_nonzero << "\n";
    if (s.dim != cell_dimension(idx, c.r, c.t)) rep.fail("cell dimension " + to_string(idx));
    if (!mod.filtration_ok) rep.fail("filtration " + to_string(idx));
    if (!mod.gram_independent) rep.fail("Gram form depends on the chosen pair " + to_string(idx));
    if (s.simple_nonzero != s.predicted_nonzero) rep.fail("simplicity prediction " + to_string(idx));
  }
  long expected = (1L << (c.r + c.t)) * factorial(c.r + c.t);
  rep.j["cells"] = cells;
  rep.j["square_sum"] = total;
  rep.j["expected"] = expected;
  rep.text << "cells " << cells.size() << ", sum dim^2 = " << total << " (expected " << expected << ")\n";
  if (total != expected) rep.fail("square sum");
}

// ---------------------------------------------------------- schurweyl

void cmd_schurweyl(const Config& c, Report& rep) {
  require_rt(c);
  if (!(c.m && c.n && c.p && c.q)) throw BadParams("schurweyl needs --m --n --p --q");
  const int m = *c.m, n = *c.n;
  const Q p = parse_q(*c.p), q = parse_q(*c.q);
  if (m < 1 || n < 1) throw BadParams("m and n must be positive");
  if (!is_typical_pq(m, n, p, q)) throw BadParams("lambda_pq is not typical");
  SuperModule M(m, n, p, q, c.r, c.t);
  rep.j["schema"] = "wbr.schurweyl/1";
  rep.j["header"] = {{"m", m}, {"n", n}, {"p", qstr(p)}, {"q", qstr(q)}, {"r", c.r}, {"t", c.t}};
  rep.j["module_dim"] = M.dim();
  rep.text << "M dim " << M.dim() << "\n";

  auto rel = audit_relations(M);
  rep.j["relations"] = {{"ok", rel.ok}, {"checked", rel.checked}, {"failures", rel.failures}};
  rep.text << "relations " << (rel.ok ? "ok" : "FAILED") << " (" << rel.checked << " checked)\n";
  if (!rel.ok) rep.fail("defining relations");

  const bool injective = c.r + c.t <= std::min(m, n);
  auto ph = phi_rank(M, c.seed);
  rep.j["phi_rank"] = {{"rank", ph.rank}, {"dim", ph.dim}, {"kernel_dim", ph.kernel.size()}};
  rep.text << "phi_rank " << ph.rank << " / " << ph.dim << "\n";
  if (injective != (ph.rank == ph.dim)) rep.fail("phi_rank vs injectivity range");
  if (!c.skip_commutant) {
    long cd = commutant_dim(M);
    rep.j["commutant_dim"] = cd;
    rep.text << "commutant_dim " << cd << "\n";
    if (cd != ph.rank) rep.fail("commutant_dim differs from phi_rank");
  }
  if (!injective) return;

  CellularBasis cb(CyclotomicAlgebra::build(M.parameters(), c.r, c.t));
  json rows = json::array();
  rep.text << "index  weight  constructed  oracle  killed  intertwiner\n";
  for (const auto& idx : lambda_poset(c.r, c.t)) {
    auto w = triple_weight(m, n, p, q, idx);
    auto H = hwv_construct(M, idx);
    int oracle = hwv_kernel_oracle(M, w);
    auto hk = hom_kac_dim(M, cb, idx, c.seed);
    rows.push_back({{"index", to_string(idx)}, {"weight", to_string(w)}, {"constructed", H.vectors.size()},
                    {"oracle", oracle}, {"all_killed", H.all_killed}, {"cell_dim", hk.cell_dim},
                    {"intertwiner", hk.action_match}});
    rep.text << to_string(idx) << "  " << to_string(w) << "  " << H.vectors.size() << "  " << oracle << "  "
             << H.all_killed << "  " << hk.action_match << "\n";
    if (static_cast<int>(H.vectors.size()) != oracle) rep.fail("HWV count " + to_string(idx));
    if (!H.all_killed) rep.fail("constructed vector not killed " + to_string(idx));
    if (!hk.action_match) rep.fail("no intertwiner " + to_string(idx));
  }
  rep.j["hwv"] = rows;
}

// --------------------------------------------------------- weightdiag

void cmd_weightdiag(const Config& c, Report& rep) {
  if (!(c.m && c.n)) throw BadParams("weightdiag needs --m --n");
  const int m = *c.m, n = *c.n;
  rep.j["schema"] = "wbr.weightdiag/1";
  WeightDiagram d;
  std::optional<CellIndex> idx;
  if (!c.diagram.empty()) {
    std::map<long, Symbol> s;
    long pos = c.lo;
    for (char ch : c.diagram) {
      if (ch == ' ') continue;
      if (ch == 'x' || ch == '<' || ch == '>') s[pos] = static_cast<Symbol>(ch);
      else if (ch != 'o') throw BadParams(std::string("unknown diagram symbol ") + ch);
      ++pos;
    }
    d = diagram_from_symbols(s, c.lo, pos - 1);
  } else {
    SuperWeight w;
    if (!c.weight.empty()) {
      w = parse_q_list(c.weight);
      if (static_cast<int>(w.size()) != m + n) throw BadParams("weight needs m+n coordinates");
    } else {
      if (!(c.p && c.q)) throw BadParams("weightdiag needs --weight, --diagram or --p --q with an index");
      idx = CellIndex{c.f, parse_bipartition(c.mu), parse_bipartition(c.nu)};
      w = triple_to_weight(*idx, m, n, parse_q(*c.p), parse_q(*c.q));
    }
    try {
      d = weight_diagram(w, m, n);
    } catch (const std::invalid_argument& e) {
      throw BadParams(e.what());
    }
    rep.j["weight"] = q_vec_json(w);
  }
  WeightDiagram top = lambda_top(d);
  top.lo = d.lo;
  top.hi = std::max(d.hi, top.symbols.empty() ? d.hi : top.symbols.rbegin()->first);
  rep.j["diagram"] = json::parse(to_json_string(d));
  rep.j["top"] = json::parse(to_json_string(top));
  rep.text << "D_lambda\n" << render(d) << "D_lambda^top\n" << render(top);
  if (idx && c.p && c.q) {
    const Q p = parse_q(*c.p), q = parse_q(*c.q);
    const int r = idx->f + idx->mu.size(), t = idx->f + idx->nu.size();
    auto back = weight_to_triple(triple_to_weight(*idx, m, n, p, q), m, n, p, q, r, t);
    rep.j["round_trip"] = back == *idx;
    if (back != *idx) rep.fail("triple/weight round trip");
    if (p.get_den() == 1 && q.get_den() == 1 && idx->f == 0 && idx->nu.size() == 0) {
      long pl = p.get_num().get_si(), ql = q.get_num().get_si();
      int k = static_cast<int>(ql - m - pl);
      if (k >= 0) {
        bool kle = kleshchev_rows(idx->mu, k);
        bool cond = kleshchev_diagram_condition(idx->mu, m, n, pl, ql);
        auto tv = tilting_criterion(idx->mu, m, n, pl, ql);
        rep.j["kleshchev"] = kle;
        rep.j["kleshchev_diagram_condition"] = cond;
        rep.j["tilting"] = {{"in_window", tv.in_window}, {"from_lambda", tv.from_lambda}, {"from_top", tv.from_top}};
        rep.text << "kleshchev " << kle << ", diagram condition " << cond << ", tilting " << tv.from_lambda << "/"
                 << tv.from_top << "\n";
        if (kle && !cond) rep.fail("Kleshchev bipartition violates the diagram condition");
        if (!tv.consistent()) rep.fail("tilting criteria disagree");
      }
    }
  }
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--k", c.k, "level");
  sub->add_option("--r", c.r, "unbarred strands");
  sub->add_option("--t", c.t, "barred strands");
  sub->add_option("--m", c.m);
  sub->add_option("--n", c.n);
  sub->add_option("--p", c.p, "rational, e.g. 1/2");
  sub->add_option("--q", c.q, "rational");
  sub->add_option("--params-file", c.params_file, "JSON with k, u, ubar, omega (rationals as strings)");
  sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--seed", c.seed);
  sub->add_option("--out", c.out, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic walled Brauer algebras: exact verification tables"};
  app.require_subcommand(1);
  Config c;
  std::function<void(const Config&, Report&)> run;

  auto* dim = app.add_subcommand("dim", "basis count, admissibility, product samples");
  add_common(dim, c);
  dim->add_option("--samples", c.samples);
  dim->callback([&] { run = cmd_dim; });

  auto* cell = app.add_subcommand("cellular", "poset, cell dimensions, Gram ranks, simplicity");
  add_common(cell, c);
  cell->callback([&] { run = cmd_cellular; });

  auto* sw = app.add_subcommand("schurweyl", "operators on the mixed tensor space");
  add_common(sw, c);
  sw->add_flag("--skip-commutant", c.skip_commutant);
  sw->callback([&] { run = cmd_schurweyl; });

  auto* wd = app.add_subcommand("weightdiag", "weight diagrams and lambda^top");
  add_common(wd, c);
  wd->add_option("--weight", c.weight, "comma separated m+n coordinates");
  wd->add_option("--diagram", c.diagram, "symbols o < > x starting at --lo");
  wd->add_option("--lo", c.lo);
  wd->add_option("--f", c.f);
  wd->add_option("--mu", c.mu, "bipartition, e.g. 2,1|1");
  wd->add_option("--nu", c.nu);
  wd->callback([&] { run = cmd_weightdiag; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParams;
  }

  Report rep;
  rep.j["failures"] = json::array();
  try {
    run(c, rep);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kBadParams;
  } catch (const std::out_of_range& e) {
    std::cerr << "bad parameters: " << e.what() << "\n";
    return kBadParams;
  }
  rep.j["verified"] = rep.verified;
  std::string body = c.format == "json" ? rep.j.dump(2) + "\n" : rep.text.str() + (rep.verified ? "verified\n" : "");
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream o(c.out);
    if (!o) {
      std::cerr << "cannot write " << c.out << "\n";
      return kBadParams;
    }
    o << body;
  }
  return rep.verified ? kOk : kVerifyFailed;
}
