#include <random>
#include <set>

#include "doctest.h"
#include "wbr/diagrams.hpp"

using namespace wbr;

namespace {

WalledDiagram D(int r, int t, const std::string& w) { return diagram_from_word(r, t, parse_word(w)).diagram; }
int circles(int r, int t, const std::string& w) { return diagram_from_word(r, t, parse_word(w)).circles; }

}  // namespace

TEST_CASE("generator products") {
  auto e = WalledDiagram::generator(2, 2, gen_e());
  auto ee = diagram_concat(e, e);
  CHECK(ee.circles == 1);
  CHECK(ee.diagram == e);
  auto s = WalledDiagram::generator(2, 2, gen_s(1));
  auto ss = diagram_concat(s, s);
  CHECK(ss.circles == 0);
  CHECK(ss.diagram == WalledDiagram::identity(2, 2));
  auto ese = diagram_from_word(2, 2, parse_word("e1 s1 e1"));
  CHECK(ese.circles == 0);
  CHECK(ese.diagram == e);
  auto empty = diagram_from_word(2, 2, {});
  CHECK(empty.circles == 0);
  CHECK(empty.diagram == WalledDiagram::identity(2, 2));
  CHECK_THROWS(diagram_concat(e, WalledDiagram::identity(1, 2)));
  CHECK_THROWS(WalledDiagram::generator(2, 2, gen_s(2)));
}

TEST_CASE("walled relations as diagram identities") {
  CHECK(D(2, 2, "e1 sb1 e1") == D(2, 2, "e1"));
  CHECK(circles(2, 2, "e1 sb1 e1") == 0);
  CHECK(D(3, 2, "s2 e1") == D(3, 2, "e1 s2"));
  CHECK(D(2, 2, "e1 s1 sb1 e1 s1") == D(2, 2, "e1 s1 sb1 e1 sb1"));
  CHECK(D(2, 2, "s1 e1 s1 sb1 e1") == D(2, 2, "sb1 e1 s1 sb1 e1"));
  CHECK(D(3, 3, "s1 s2 s1") == D(3, 3, "s2 s1 s2"));
}

TEST_CASE("e_{i,j} has horizontal edges [i, jb] on both rows") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j) {
      auto d = diagram_from_word(3, 2, word_e_ij(i, j));
      CHECK(d.circles == 0);
      const auto& m = d.diagram.match();
      CHECK(m[d.diagram.top(i)] == d.diagram.top_bar(j));
      CHECK(m[d.diagram.bot(i)] == d.diagram.bot_bar(j));
      CHECK(d.diagram.horizontal_count() == 1);
    }
}

TEST_CASE("e-tail word nests pairs at the wall-far ends") {
  auto d = diagram_from_word(3, 3, word_e_tail(3, 3, 2));
  CHECK(d.circles == 0);
  const auto& m = d.diagram.match();
  CHECK(m[d.diagram.top(3)] == d.diagram.top_bar(3));
  CHECK(m[d.diagram.top(2)] == d.diagram.top_bar(2));
  CHECK(m[d.diagram.bot(3)] == d.diagram.bot_bar(3));
  CHECK(m[d.diagram.bot(2)] == d.diagram.bot_bar(2));
  CHECK(m[d.diagram.top(1)] == d.diagram.bot(1));
}

TEST_CASE("diagram counts") {
  long fact[] = {1, 1, 2, 6, 24, 120};
  for (int r = 0; r <= 5; ++r)
    for (int t = 0; r + t <= 5; ++t) CHECK(static_cast<long>(all_diagrams(r, t).size()) == fact[r + t]);
}

TEST_CASE("factorization round trip and bijection") {
  auto id = diagram_factorize(WalledDiagram::identity(2, 2));
  CHECK(id.f == 0);
  CHECK(id.c.top.is_identity());
  CHECK(id.d.top.is_identity());
  CHECK(id.w_top.is_identity());
  auto e = diagram_factorize(WalledDiagram::generator(2, 2, gen_e()));
  CHECK(e.f == 1);
  CHECK(e.c.top.is_identity());
  CHECK(e.c.bar.is_identity());
  CHECK(e.w_top.is_identity());
  for (auto [r, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {1, 3}}) {
    std::set<std::string> seen;
    for (const auto& d : all_diagrams(r, t)) {
      auto fz = diagram_factorize(d);
      CHECK(fz.f == d.horizontal_count());
      auto back = diagram_from_word(r, t, word_factorization(fz));
      CHECK(back.circles == 0);
      CHECK(back.diagram == d);
      seen.insert(to_string(word_factorization(fz)));
    }
    CHECK(seen.size() == all_diagrams(r, t).size());
    CHECK(factorization_table(r, t).size() == all_diagrams(r, t).size());
  }
}

TEST_CASE("concatenation is associative with circle counts") {
  std::mt19937 rng(3);
  auto all = all_diagrams(2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    auto ab = diagram_concat(a, b);
    auto abc = diagram_concat(ab.diagram, c);
    auto bc = diagram_concat(b, c);
    auto a_bc = diagram_concat(a, bc.diagram);
    CHECK(abc.diagram == a_bc.diagram);
    CHECK(ab.circles + abc.circles == bc.circles + a_bc.circles);
  }
}

TEST_CASE("word parsing") {
  Word w = parse_word("e1 s2 sb1 x1 xb1");
  REQUIRE(w.size() == 5);
  CHECK(w[1] == gen_s(2));
  CHECK(w[2] == gen_sb(1));
  CHECK(to_string(w) == "e1 s2 sb1 x1 xb1");
  CHECK_THROWS(parse_word("q1"));
}
