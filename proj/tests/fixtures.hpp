#pragma once

// Small hand-checkable instances shared by the unit, property and acceptance tests.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cfl/bitset.hpp"
#include "cfl/galois.hpp"
#include "cfl/random_instances.hpp"
#include "cfl/setsys.hpp"

namespace fixtures {

using cfl::Pattern;

// "abd" over a universe of n letters; "" and "{}" give the empty pattern.
inline Pattern pat(std::size_t n, std::string_view word) {
  if (word == "{}") word = "";
  return cfl::from_letters(n, word);
}

inline std::vector<Pattern> pats(std::size_t n, std::initializer_list<std::string_view> words) {
  std::vector<Pattern> out;
  for (auto w : words) out.push_back(pat(n, w));
  return out;
}

inline std::vector<std::string> letters(std::size_t n) { return cfl::gen::item_names(n); }

inline std::vector<std::string> objects(std::size_t n) { return cfl::gen::object_names(n); }

inline cfl::ObjectContext context(std::size_t n, std::initializer_list<std::string_view> rows) {
  auto d = pats(n, rows);
  return cfl::ObjectContext(objects(d.size()), d, letters(n));
}

inline cfl::Extent objs(std::size_t count, std::initializer_list<std::size_t> ones_based) {
  cfl::Extent e(count);
  for (auto o : ones_based) e.set(o - 1);
  return e;
}

// The running example: items a..d, objects o1..o3 with d[O] = {ab, abc, abcd}.
inline cfl::ObjectContext running_context() { return context(4, {"ab", "abc", "abcd"}); }

inline cfl::ExplicitFamily running_family() { return cfl::ExplicitFamily(pats(4, {"a", "b", "abc", "abd", "abcd"}), letters(4)); }

// A 4-cycle 1-2-3-4 whose edges are named a=12, b=34, c=23, d=41.
inline cfl::GraphSpec square_graph() {
  cfl::GraphSpec g;
  g.vertices = {"1", "2", "3", "4"};
  g.edges = {{0, 1, "a"}, {2, 3, "b"}, {1, 2, "c"}, {3, 0, "d"}};
  return g;
}

// The pruning walkthrough: F over abcde, d[O] = {abde, abcd, acd}, frequency threshold 2.
inline cfl::ExplicitFamily pruning_family() {
  return cfl::ExplicitFamily(pats(5, {"ab", "ac", "abc", "abd", "acd", "abcd"}), letters(5));
}
inline cfl::ObjectContext pruning_context() { return context(5, {"abde", "abcd", "acd"}); }

inline std::vector<std::string> words_of(const std::vector<Pattern>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.none() ? "{}" : cfl::letters(p));
  return out;
}

}  // namespace fixtures
