#include <doctest.h>

#include <random>

#include "cfl/order.hpp"
#include "cfl/random_instances.hpp"
#include "fixtures.hpp"

using namespace cfl::order;

namespace {

// Element index in the powerset lattice is the bitmask of the letters.
Index mask(std::string_view word) {
  Index m = 0;
  for (char ch : word) m |= Index{1} << (ch - 'a');
  return m;
}

ElementSet subset(std::size_t n, std::initializer_list<std::string_view> words) {
  ElementSet s(std::size_t{1} << n);
  for (auto w : words) s.set(mask(w == "{}" ? "" : w));
  return s;
}

const FiniteLattice& b4() {
  static const FiniteLattice l = FiniteLattice::powerset(4);
  return l;
}

}  // namespace

TEST_CASE("poset from relation and covers") {
  // diamond: 0 < 1, 2 < 3
  auto p = FinitePoset::from_covers({{}, {0}, {0}, {1, 2}});
  CHECK(p.leq(0, 3));
  CHECK_FALSE(p.leq(1, 2));
  CHECK(p.minimals() == ElementSet(4, {0}));
  CHECK(p.maximals() == ElementSet(4, {3}));
  CHECK(p.up_set(1) == ElementSet(4, {1, 3}));
  CHECK(p.bottom_of(ElementSet(4, {1, 2, 3})) == std::nullopt);
  CHECK(p.top_of(ElementSet(4, {0, 1, 2})) == std::nullopt);
  CHECK(p.top_of(ElementSet(4, {0, 1})) == Index{1});

  CHECK_THROWS_AS(FinitePoset::from_covers({{1}, {0}}), cfl::ValidationError);
  CHECK_THROWS_AS(FinitePoset::from_relation(2, [](Index, Index) { return true; }), cfl::ValidationError);
  CHECK_THROWS_AS(FinitePoset::from_relation(2, [](Index x, Index y) { return x != y; }), cfl::ValidationError);
}

TEST_CASE("subposet keeps ids") {
  auto p = b4().poset().subposet(subset(4, {"a", "ab", "abcd"}));
  REQUIRE(p.size() == 3);
  CHECK(p.id(1) == mask("ab"));
  CHECK(p.index_of_id(mask("abcd")) == Index{2});
  CHECK(p.leq(0, 1));
}

TEST_CASE("lattice construction rejects non-lattices") {
  // two incomparable maxima
  auto v = FinitePoset::from_covers({{}, {0}, {0}});
  CHECK_THROWS_AS(FiniteLattice::from_poset(v), cfl::ValidationError);
  auto l = FiniteLattice::powerset(3);
  CHECK(l.meet(mask("ab"), mask("bc")) == mask("b"));
  CHECK(l.join(mask("a"), mask("c")) == mask("ac"));
  CHECK(l.top() == mask("abc"));
  CHECK(l.bottom() == 0);
}

TEST_CASE("identity and constant-to-top classify as closures") {
  auto id = OperatorMap::identity(b4().poset());
  auto c = classify_operator(id);
  CHECK(c.kind == OperatorKind::closure_and_interior);

  std::vector<Index> to_top(b4().size(), b4().top());
  auto top = classify_operator(OperatorMap(b4().poset(), to_top));
  CHECK(top.kind == OperatorKind::closure);
  CHECK_FALSE(top.intensive);
}

TEST_CASE("classification reports the first failing law") {
  // a ↦ b on a two-element chain 0 < 1 with 1 ↦ 0: not monotone.
  auto chain = FinitePoset::from_covers({{}, {0}});
  auto swap = classify_operator(OperatorMap(chain, {1, 0}));
  CHECK(swap.kind == OperatorKind::neither);
  REQUIRE(swap.witness);
  CHECK(swap.witness->law == Law::monotone);
  CHECK(swap.witness->x == 0);
  CHECK(swap.witness->y == Index{1});

  // constant bottom on the chain is an interior; not extensive, so not a closure.
  auto bottom = classify_operator(OperatorMap(chain, {0, 0}));
  CHECK(bottom.kind == OperatorKind::interior);
  CHECK_FALSE(bottom.witness);
}

TEST_CASE("closure generated by a meet-closed subset") {
  auto c = subset(4, {"a", "ab", "ac", "abcd"});
  auto f = closure_from_subset(b4().poset(), c);
  REQUIRE(f);
  CHECK(f.value()(mask("abc")) == mask("abcd"));
  CHECK(f.value()(mask("ab")) == mask("ab"));
  CHECK(f.value()(mask("")) == mask("a"));
  CHECK(classify_operator(f.value()).is_closure());
  CHECK(f.value().range() == c);

  auto top_only = closure_from_subset(b4().poset(), subset(4, {"abcd"}));
  REQUIRE(top_only);
  for (Index x = 0; x < b4().size(); ++x) CHECK(top_only.value()(x) == mask("abcd"));
}

TEST_CASE("subset without a least element above some x") {
  auto c = subset(4, {"ab", "ac"});
  auto f = closure_from_subset(b4().poset(), c);
  REQUIRE_FALSE(f);
  // The index-order scan stops at the empty set, whose upper bounds ab, ac are incomparable.
  CHECK(f.witness() == mask(""));
  // a is a counterexample for the same reason.
  ElementSet above_a = c & b4().poset().up_set(mask("a"));
  CHECK(above_a.count() == 2);
  CHECK_FALSE(b4().poset().bottom_of(above_a));
}

TEST_CASE("meet and join closure of subsets") {
  CHECK(is_meet_closed(b4(), subset(4, {"a", "ab", "ac", "abcd"})));
  auto not_join = is_join_closed(b4(), subset(4, {"a", "ab", "ac", "abcd"}));
  REQUIRE_FALSE(not_join);

  auto missing_top = is_meet_closed(b4(), subset(4, {"{}", "a", "c", "abc"}));
  REQUIRE_FALSE(missing_top);
  CHECK_FALSE(missing_top.witness->pair);

  auto missing_join = is_join_closed(b4(), subset(4, {"{}", "a", "c", "abc"}));
  REQUIRE_FALSE(missing_join);
  REQUIRE(missing_join.witness->pair);
  auto [x, y] = *missing_join.witness->pair;
  CHECK(b4().join(x, y) == mask("ac"));

  CHECK(is_join_closed(b4(), subset(4, {"{}", "ab", "ac", "abc"})));
  CHECK(is_join_closed(b4(), subset(4, {"{}"})));
  CHECK(is_meet_closed(b4(), b4().poset().all()));
}

TEST_CASE("interior from a join-closed subset") {
  auto a = subset(4, {"{}", "ab", "ac", "abc"});
  auto p = interior_from_subset(b4().poset(), a);
  REQUIRE(p);
  CHECK(p.value()(mask("abd")) == mask("ab"));
  CHECK(p.value()(mask("abcd")) == mask("abc"));
  CHECK(p.value()(mask("bc")) == mask(""));
  CHECK(classify_operator(p.value()).is_interior());

  CHECK_FALSE(interior_from_subset(b4().poset(), subset(4, {"a", "b"})));
}

TEST_CASE("composing an interior with a closure") {
  auto p = interior_from_subset(b4().poset(), subset(4, {"{}", "ab", "ac", "abc"})).value();
  auto f = closure_from_subset(b4().poset(), subset(4, {"a", "ab", "ac", "abcd"})).value();
  auto g = compose_interior_closure(p, f);
  REQUIRE(g.domain().size() == 4);
  CHECK(classify_operator(g).is_closure());
  // On A: ∅ ↦ p(a) = ∅, ab ↦ ab, ac ↦ ac, abc ↦ p(abcd) = abc.
  for (Index i = 0; i < 4; ++i) CHECK(g(i) == i);

  auto id = OperatorMap::identity(b4().poset());
  auto same_f = compose_interior_closure(id, f);
  for (Index x = 0; x < b4().size(); ++x) CHECK(same_f(x) == f(x));
  auto just_p = compose_interior_closure(p, id);
  for (Index i = 0; i < just_p.domain().size(); ++i) CHECK(just_p(i) == i);

  CHECK_THROWS_AS(compose_interior_closure(f, f), std::invalid_argument);
}

TEST_CASE("poset text format") {
  auto np = parse_poset_text(R"(# a diamond
top: covers l r
l: bot
r: bot
)");
  REQUIRE(np.poset.size() == 4);
  auto bot = np.find("bot"), top = np.find("top");
  REQUIRE(bot);
  REQUIRE(top);
  CHECK(np.poset.leq(*bot, *top));
  CHECK(FiniteLattice::from_poset(np.poset).top() == *top);

  CHECK_THROWS_AS(parse_poset_text("a: b\nb: a\n"), cfl::ValidationError);
  try {
    parse_poset_text("a b c\n");
    FAIL("expected a parse error");
  } catch (const cfl::ParseError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("closure systems generate closures and back") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + round % 4;
    auto sys = cfl::gen::random_closure_system(rng, n, 3);
    auto lat = FiniteLattice::powerset(n);
    ElementSet c(lat.size());
    for (auto m : sys) c.set(m);
    REQUIRE(is_meet_closed(lat, c));
    auto f = closure_from_subset(lat.poset(), c);
    REQUIRE(f);
    CHECK(classify_operator(f.value()).is_closure());
    CHECK(f.value().range() == c);
  }
}
