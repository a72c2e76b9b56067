#pragma once

// Confluences: finite posets whose principal up-sets are lattices. Local
// meets and joins, subsets closed under local meet and their closures,
// subconfluences of a host lattice and the interior family {p_t}.

#include <optional>
#include <utility>
#include <vector>

#include "cfl/order.hpp"

namespace cfl::confluence {

using order::ElementSet;
using order::FiniteLattice;
using order::FinitePoset;
using order::Index;
using order::OperatorMap;

// F^minimal fails to be a lattice: `pair` lacks a meet in it, or (no pair)
// the up-set has no greatest element.
struct ConfluenceWitness {
  Index minimal;
  std::optional<std::pair<Index, Index>> pair;
};

// Checks only the up-sets of minimal elements; that suffices in the finite case.
Verdict<ConfluenceWitness> is_confluence(const FinitePoset& p);

class ExplicitConfluence {
 public:
  static Outcome<ExplicitConfluence, ConfluenceWitness> make(FinitePoset carrier);

  const FinitePoset& carrier() const { return carrier_; }
  const ElementSet& minimals() const { return minimals_; }
  std::size_t size() const { return carrier_.size(); }
  bool contains_up(Index t, Index x) const { return carrier_.leq(t, x); }
  // Greatest element of F^t.
  Index local_top(Index t) const { return tops_[t]; }

 private:
  FinitePoset carrier_;
  ElementSet minimals_;
  std::vector<Index> tops_;
};

// Greatest lower bound of x and y inside F^t. Throws std::invalid_argument
// unless both lie in F^t.
Index local_meet(const ExplicitConfluence& f, Index t, Index x, Index y);
// Least element of F^x ∩ F^y; none when that set is empty or has no least element.
std::optional<Index> local_join(const ExplicitConfluence& f, Index x, Index y);

// C ∩ F^t is not closed under ∧_t: `pair` has its local meet outside C, or
// (no pair) ⊤_t is missing from C.
struct LocalMeetWitness {
  Index t;
  std::optional<std::pair<Index, Index>> pair;
};

Verdict<LocalMeetWitness> is_closed_under_local_meet(const ExplicitConfluence& f, const ElementSet& c);
// f(t) = ∧_t (C ∩ F^t), defined when C is closed under local meet.
Outcome<OperatorMap, LocalMeetWitness> closure_from_local_meet_subset(const ExplicitConfluence& f, const ElementSet& c);

struct SubconfluenceWitness {
  Index t, x, y;  // x, y ≥ t in the family, x ∨ y outside it
};

Verdict<SubconfluenceWitness> is_subconfluence(const FiniteLattice& host, const ElementSet& fam);

// A subconfluence F of a host lattice together with its projections
// p_t(x) = greatest member of F^t below x.
class InteriorFamily {
 public:
  static Outcome<InteriorFamily, SubconfluenceWitness> make(FiniteLattice host, ElementSet family);

  const FiniteLattice& host() const { return host_; }
  const ElementSet& family() const { return family_; }
  const ElementSet& minimals() const { return minimals_; }
  // The induced order on F; its ids are host element ids.
  FinitePoset family_poset() const { return host_.poset().subposet(family_); }

 private:
  FiniteLattice host_;
  ElementSet family_;
  ElementSet minimals_;
  friend Index interior_project(const InteriorFamily&, Index, Index);
};

// p_t(x) for t ∈ F and x ≥ t, computed through the lowest-indexed minimal
// below t. Throws std::invalid_argument otherwise.
Index interior_project(const InteriorFamily& fam, Index t, Index x);

// f_F(t) = p_t(f(t)) for a closure f on the host; the result lives on
// family_poset() (indices follow ascending host indices of F).
OperatorMap lift_closure(const InteriorFamily& fam, const OperatorMap& f);

}  // namespace cfl::confluence
