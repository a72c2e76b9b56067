#include <doctest.h>

#include "cfl/io.hpp"
#include "fixtures.hpp"

using namespace cfl;
using namespace cfl::io;

namespace {

std::size_t parse_error_line(void (*fn)()) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("graph files") {
  auto g = parse_graph(R"(# square
v 1
v 2
v 3
v 4
e 1 2 a
e 3 4 b
e 2 3 c
e 4 1 d
)");
  REQUIRE(g.vertices.size() == 4);
  REQUIRE(g.edges.size() == 4);
  CHECK(g.edges[3].u == 3);
  CHECK(g.edges[3].v == 0);
  CHECK(g.edges[3].label == "d");

  auto plain = parse_graph("v x\nv y\ne x y\n");
  CHECK(plain.edges[0].label == "x-y");

  CHECK(parse_error_line([] { parse_graph("v a\nv a\n"); }) == 2);
  CHECK(parse_error_line([] { parse_graph("v a\n\nq a\n"); }) == 3);
  CHECK(parse_error_line([] { parse_graph("v a\ne a b\n"); }) == 2);
  CHECK(parse_error_line([] { parse_graph("v a\nv b\ne a b x\ne b a x\n"); }) == 4);
  CHECK_THROWS_AS(parse_graph("v a\ne a a\n"), ValidationError);
}

TEST_CASE("family files") {
  auto rows = parse_family("a b\n{}\n  # comment\nc\n");
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].empty());
  CHECK(rows[2] == NameList{"c"});
  CHECK(parse_error_line([] { parse_family("a\nb:c\n"); }) == 2);
}

TEST_CASE("context files") {
  auto rows = parse_context("o1: a b\no2:\no3: a b c d\n");
  REQUIRE(rows.objects.size() == 3);
  CHECK(rows.items[1].empty());
  CHECK(parse_error_line([] { parse_context("o1: a\no2 a b\n"); }) == 2);
  CHECK(parse_error_line([] { parse_context("o1: a\no1: b\n"); }) == 2);

  NameTable items(fixtures::letters(4));
  auto ctx = build_context(rows, items);
  CHECK(ctx.ext(fixtures::pat(4, "c")) == fixtures::objs(3, {3}));
  NameTable short_items(fixtures::letters(2));
  CHECK_THROWS_AS(build_context(rows, short_items), ValidationError);
}

TEST_CASE("abstraction files") {
  auto gens = parse_abstraction("o1 o2\no1 o3 # second\n");
  REQUIRE(gens.size() == 2);
  auto ctx = fixtures::running_context();
  auto abs = build_abstraction(gens, ctx);
  CHECK(abs.apply(fixtures::objs(3, {2, 3})).none());
  CHECK(abs.apply(fixtures::objs(3, {1, 2, 3})) == fixtures::objs(3, {1, 2, 3}));
  CHECK_THROWS_AS(build_abstraction({{"o9"}}, ctx), ValidationError);
}

TEST_CASE("name tables") {
  NameTable t;
  CHECK(t.intern("x") == 0);
  CHECK(t.intern("y") == 1);
  CHECK(t.intern("x") == 0);
  CHECK(t.find("z") == std::nullopt);
  CHECK(resolve({"y"}, t) == Pattern(2, {1}));
  CHECK_THROWS_AS(resolve({"q"}, t), ValidationError);
  CHECK_THROWS_AS(read_file("/nonexistent/file"), IoError);
}
