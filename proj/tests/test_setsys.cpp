#include <doctest.h>

#include <queue>
#include <random>

#include "cfl/random_instances.hpp"
#include "cfl/setsys.hpp"
#include "fixtures.hpp"

using namespace cfl;
using fixtures::pat;
using fixtures::pats;
using fixtures::words_of;

namespace {

GraphSpec path4() {
  GraphSpec g;
  g.vertices = {"a", "b", "c", "d"};
  g.edges = {{0, 1, ""}, {1, 2, ""}, {2, 3, ""}};
  return g;
}

// Component of `seed` inside `within`, by plain BFS over an edge list.
Pattern reference_component(const GraphSpec& g, std::size_t seed, const Pattern& within) {
  Pattern seen(g.vertices.size());
  std::queue<std::size_t> q;
  seen.set(seed);
  q.push(seed);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (const auto& e : g.edges) {
      std::size_t w = e.u == u ? e.v : e.v == u ? e.u : g.vertices.size();
      if (w < g.vertices.size() && within.test(w) && !seen.test(w)) {
        seen.set(w);
        q.push(w);
      }
    }
  }
  return seen;
}

// Structural contract every family kind must meet, checked on its full member list.
void check_contract(const Family& fam, const std::vector<Pattern>& members, std::mt19937_64& rng) {
  const std::size_t n = fam.universe_size();
  for (const auto& m : fam.minimals()) {
    CHECK(fam.contains(m));
    for (const auto& o : fam.minimals()) CHECK((o == m || !o.is_subset_of(m)));
  }
  CHECK(std::is_sorted(fam.minimals().begin(), fam.minimals().end(), LexLess{}));
  for (const auto& p : members) {
    std::vector<std::size_t> scan;
    for (std::size_t e = 0; e < n; ++e)
      if (!p.test(e) && fam.contains(p.with(e))) scan.push_back(e);
    CHECK(fam.augmentations(p) == scan);
  }
  for (int k = 0; k < 40 && !members.empty(); ++k) {
    const auto& t = members[rng() % members.size()];
    const auto& x = members[rng() % members.size()];
    const auto& y = members[rng() % members.size()];
    if (t.is_subset_of(x) && t.is_subset_of(y)) CHECK(fam.contains(x | y));

    Pattern cover = t;
    for (std::size_t i = 0; i < n; ++i)
      if (rng() & 1U) cover.set(i);
    Pattern pr = fam.project(t, cover);
    CHECK(fam.contains(pr));
    CHECK(t.is_subset_of(pr));
    CHECK(pr.is_subset_of(cover));
    for (const auto& q : members)
      if (t.is_subset_of(q) && q.is_subset_of(cover)) CHECK(q.is_subset_of(pr));
  }
}

}  // namespace

TEST_CASE("connected vertex subsets of a path") {
  ConnectedVertexFamily fam(path4());
  CHECK_FALSE(fam.contains(pat(4, "ac")));
  CHECK(fam.contains(pat(4, "abc")));
  CHECK_FALSE(fam.contains(pat(4, "")));
  CHECK(fam.project(pat(4, "a"), pat(4, "abd")) == pat(4, "ab"));
  CHECK(words_of(fam.minimals()) == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(fam.local_top(pat(4, "d")) == pat(4, "abcd"));

  GraphSpec three = path4();
  three.vertices.pop_back();
  three.edges.pop_back();
  auto members = enumerate_members(ConnectedVertexFamily(three), 100);
  CHECK(words_of(members) == std::vector<std::string>{"a", "ab", "abc", "b", "bc", "c"});
}

TEST_CASE("connected vertex subsets with a size floor") {
  ConnectedVertexFamily fam(path4(), 2);
  CHECK(words_of(fam.minimals()) == std::vector<std::string>{"ab", "bc", "cd"});
  CHECK_FALSE(fam.contains(pat(4, "a")));
  CHECK(fam.project(pat(4, "bc"), pat(4, "abcd")) == pat(4, "abcd"));
  CHECK_THROWS_AS(ConnectedVertexFamily(path4(), 5), ValidationError);
}

TEST_CASE("connected edge subsets of the square") {
  ConnectedEdgeFamily fam(fixtures::square_graph());
  for (auto w : {"a", "b", "abc", "abd", "abcd", "c", "d"}) CHECK(fam.contains(pat(4, w)));
  CHECK_FALSE(fam.contains(pat(4, "ab")));
  CHECK_FALSE(fam.contains(pat(4, "")));
  CHECK(fam.project(pat(4, "a"), pat(4, "abcd")) == pat(4, "abcd"));
  CHECK(fam.project(pat(4, "a"), pat(4, "ab")) == pat(4, "a"));
  CHECK(words_of(fam.minimals()) == std::vector<std::string>{"a", "b", "c", "d"});
  // Every single edge is connected, so the full family has 13 members, not only the five listed in data/running.family.
  CHECK(enumerate_members(fam, 100).size() == 13);
}

TEST_CASE("bounded-gap position sets") {
  KGapWordFamily two(5, 2);
  CHECK(two.contains(Pattern(5, {0, 2, 3})));  // positions 1, 3, 4
  KGapWordFamily one(5, 1);
  CHECK_FALSE(one.contains(Pattern(5, {0, 2})));
  CHECK(one.project(Pattern(5, {2}), Pattern(5, {0, 2, 3, 4})) == Pattern(5, {2, 3, 4}));
  CHECK(two.project(Pattern(5, {0}), Pattern(5, {0, 2, 4})) == Pattern(5, {0, 2, 4}));
  CHECK(one.item_names()[0] == "1");
  CHECK(one.minimals().size() == 5);
  // k = 1 gives contiguous runs: n(n+1)/2 of them.
  CHECK(enumerate_members(one, 100).size() == 15);
}

TEST_CASE("explicit families") {
  ExplicitFamily f(pats(5, {"ab", "ac", "abc", "abd", "acd", "abcd"}), fixtures::letters(5));
  CHECK(words_of(f.minimals()) == std::vector<std::string>{"ab", "ac"});
  CHECK(f.strongly_accessible());
  CHECK(f.project(pat(5, "ab"), pat(5, "abde")) == pat(5, "abd"));
  CHECK(f.local_top(pat(5, "ac")) == pat(5, "abcd"));

  ExplicitFamily single(pats(3, {"b"}), fixtures::letters(3));
  CHECK(words_of(single.minimals()) == std::vector<std::string>{"b"});

  auto v = ExplicitFamily::check_subconfluence(pats(4, {"{}", "ab", "ac"}));
  REQUIRE_FALSE(v);
  CHECK(v.witness->t == pat(4, ""));
  CHECK((v.witness->x | v.witness->y) == pat(4, "abc"));
  CHECK_THROWS_AS(ExplicitFamily(pats(4, {"{}", "ab", "ac"}), fixtures::letters(4)), ValidationError);
  CHECK_THROWS_AS(ExplicitFamily({}, fixtures::letters(4)), ValidationError);
}

TEST_CASE("strong accessibility") {
  CHECK(is_strongly_accessible(pats(5, {"ab", "ac", "abc", "abd", "acd", "abcd"})));
  auto v = is_strongly_accessible(pats(3, {"a", "abc"}));
  REQUIRE_FALSE(v);
  CHECK(v.witness->from == pat(3, "a"));
  CHECK(v.witness->to == pat(3, "abc"));
  // The five-member family jumps from a to abc.
  CHECK_FALSE(fixtures::running_family().strongly_accessible());

  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    auto g = gen::random_graph(rng, 1 + round % 8, rng() % 12);
    auto members = enumerate_members(ConnectedVertexFamily(g), 4096);
    CHECK(is_strongly_accessible(members));
  }
}

TEST_CASE("budgeted enumeration") {
  ConnectedVertexFamily fam(path4());
  try {
    enumerate_members(fam, 5);
    FAIL("expected the budget to trip");
  } catch (const BudgetExceeded& e) {
    CHECK(e.found() > 5);
  }
}

TEST_CASE("family contracts on random graphs and explicit families") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    const std::size_t nv = 2 + round % 7;
    auto g = gen::random_graph(rng, nv, rng() % (nv * (nv - 1) / 2 + 1));

    ConnectedVertexFamily vf(g, round % 3 == 2 && !g.edges.empty() ? 2 : 1);
    auto vm = enumerate_members(vf, 4096);
    check_contract(vf, vm, rng);
    for (const auto& p : vm) CHECK(reference_component(g, p.first(), p) == p);
    for (std::size_t u = 0; u < nv; ++u) {
      Pattern within = Pattern::full(nv);
      within.reset((u + 1) % nv);
      within.set(u);
      CHECK(vf.component(Pattern(nv, {u}), within) == reference_component(g, u, within));
    }

    auto sparse = gen::random_graph(rng, nv, 1 + rng() % 8);
    if (!sparse.edges.empty()) {
      ConnectedEdgeFamily ef(sparse);
      check_contract(ef, enumerate_members(ef, 4096), rng);
    }

    KGapWordFamily kf(1 + round % 9, 1 + round % 3);
    check_contract(kf, enumerate_members(kf, 4096), rng);

    auto raw = gen::random_subconfluence(rng, 1 + round % 6, 1 + round % 5);
    ExplicitFamily xf(raw, gen::item_names(1 + round % 6));
    check_contract(xf, raw, rng);
  }
}
