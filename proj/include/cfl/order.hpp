#pragma once

// Explicit finite posets and lattices, and the closure / interior operators
// defined on them.
//
// Elements are dense indices 0..n-1. The order is stored as a reflexive,
// transitive reachability matrix so leq is O(1). Subsets of elements are
// Bitsets over the element indices.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfl/bitset.hpp"
#include "cfl/verdict.hpp"

namespace cfl::order {

using Index = std::size_t;
using ElementSet = Bitset;

class FinitePoset {
 public:
  FinitePoset() = default;

  // `leq` must describe a partial order; throws ValidationError otherwise.
  // `ids` are opaque labels carried through subposets (default 0..n-1).
  static FinitePoset from_relation(std::size_t n, const std::function<bool(Index, Index)>& leq,
                                   std::vector<std::size_t> ids = {});
  // lower_covers[x] lists the elements x covers. Throws ValidationError on cycles.
  static FinitePoset from_covers(const std::vector<std::vector<Index>>& lower_covers, std::vector<std::size_t> ids = {});

  std::size_t size() const { return n_; }
  bool leq(Index x, Index y) const { return (bits_[x * row_words_ + y / 64] >> (y % 64)) & 1U; }
  bool less(Index x, Index y) const { return x != y && leq(x, y); }
  std::size_t id(Index x) const { return ids_[x]; }
  std::span<const std::size_t> ids() const { return ids_; }
  // Index whose id is `id`, if any.
  std::optional<Index> index_of_id(std::size_t id) const;

  ElementSet all() const { return Bitset::full(n_); }
  ElementSet up_set(Index t) const;
  ElementSet down_set(Index t) const;
  ElementSet minimals() const;
  ElementSet maximals() const;

  // Least / greatest member of `s` under this order, if one exists.
  std::optional<Index> bottom_of(const ElementSet& s) const;
  std::optional<Index> top_of(const ElementSet& s) const;

  // The induced order on `elements` (ascending); ids are inherited.
  FinitePoset subposet(const ElementSet& elements) const;

 private:
  std::size_t n_ = 0;
  std::size_t row_words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> ids_;
};

class FiniteLattice {
 public:
  // Computes meet and join tables; throws ValidationError if some pair lacks
  // a greatest lower or least upper bound, or if the poset is empty.
  static FiniteLattice from_poset(FinitePoset poset);
  // 2^S for |S| = nitems; element index = id = bitmask.
  static FiniteLattice powerset(std::size_t nitems);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(Index x, Index y) const { return poset_.leq(x, y); }
  Index meet(Index x, Index y) const { return meet_[x * size() + y]; }
  Index join(Index x, Index y) const { return join_[x * size() + y]; }
  Index top() const { return top_; }
  Index bottom() const { return bottom_; }

 private:
  FinitePoset poset_;
  std::vector<Index> meet_, join_;
  Index top_ = 0, bottom_ = 0;
};

// A total self-map on a poset, before it is known to be a closure or interior.
class OperatorMap {
 public:
  OperatorMap(FinitePoset domain, std::vector<Index> table);
  static OperatorMap identity(FinitePoset domain);

  const FinitePoset& domain() const { return domain_; }
  Index operator()(Index x) const { return table_[x]; }
  std::span<const Index> table() const { return table_; }
  ElementSet range() const;

 private:
  FinitePoset domain_;
  std::vector<Index> table_;
};

enum class OperatorKind { closure, interior, closure_and_interior, neither };
enum class Law { monotone, idempotent, extensive, intensive };

struct LawViolation {
  Law law;
  Index x;
  std::optional<Index> y;  // second element for monotonicity violations
};

struct Classification {
  OperatorKind kind = OperatorKind::neither;
  bool monotone = false, idempotent = false, extensive = false, intensive = false;
  // Set only for `neither`: the first failing law in the order
  // monotone, idempotent, extensive, scanning elements by index.
  std::optional<LawViolation> witness;

  bool is_closure() const { return kind == OperatorKind::closure || kind == OperatorKind::closure_and_interior; }
  bool is_interior() const { return kind == OperatorKind::interior || kind == OperatorKind::closure_and_interior; }
};

Classification classify_operator(const OperatorMap& m);

// f(x) = least element of c above x; fails with the first x lacking one.
Outcome<OperatorMap, Index> closure_from_subset(const FinitePoset& p, const ElementSet& c);
// p(x) = greatest element of a below x; fails with the first x lacking one.
Outcome<OperatorMap, Index> interior_from_subset(const FinitePoset& p, const ElementSet& a);

// No pair means the empty meet (top) / empty join (bottom) is missing.
struct BinaryWitness {
  std::optional<std::pair<Index, Index>> pair;
};

Verdict<BinaryWitness> is_meet_closed(const FiniteLattice& l, const ElementSet& c);
Verdict<BinaryWitness> is_join_closed(const FiniteLattice& l, const ElementSet& c);

// p∘f restricted to p[E]. The result's domain is the subposet on p[E], whose
// ids are the ids of the original elements. Throws std::invalid_argument
// unless p is an interior and f a closure on the same poset.
OperatorMap compose_interior_closure(const OperatorMap& p, const OperatorMap& f);

// Text form: one element per line, `id: [covers] lower1 lower2 ...`, listing
// the elements `id` covers. '#' starts a comment. Elements mentioned only as
// covers are created implicitly.
struct NamedPoset {
  FinitePoset poset;
  std::vector<std::string> names;

  std::optional<Index> find(std::string_view name) const;
};

NamedPoset parse_poset_text(std::string_view text);

}  // namespace cfl::order
