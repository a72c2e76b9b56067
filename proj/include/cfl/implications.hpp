#pragma once

// Support-equivalence classes F(e) and the min-max implication basis on a
// confluence: generator → closed pattern within one class, internal when the
// two are comparable and external otherwise.

#include <span>
#include <vector>

#include "cfl/galois.hpp"

namespace cfl {

struct Implication {
  enum class Kind { internal, external };
  Pattern premise;
  Pattern conclusion;
  Kind kind;
};

struct EquivalenceClass {
  Extent extent;
  std::vector<Pattern> members;     // lex order
  std::vector<Pattern> generators;  // ⊆-minimal members
  std::vector<Pattern> closed;      // members fixed by the support closure
};

// `members` must list the family exactly. Classes are ordered by extent.
std::vector<EquivalenceClass> equivalence_classes(const ObjectContext& ctx, const Family& fam,
                                                  std::span<const Pattern> members);

// Sorted by (premise, conclusion) in lex order.
std::vector<Implication> minmax_basis(const ObjectContext& ctx, const Family& fam, std::span<const Pattern> members);

// p → q holds iff ext(p) ⊆ ext(q).
bool check_implication(const ObjectContext& ctx, const Implication& imp);

}  // namespace cfl
