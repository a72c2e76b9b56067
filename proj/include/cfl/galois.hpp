#pragma once

// The Galois connection (int, ext) between object sets and patterns, extensional
// abstractions, and the (abstract) support closure on a pattern family.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfl/bitset.hpp"
#include "cfl/kernels.hpp"
#include "cfl/setsys.hpp"
#include "cfl/verdict.hpp"

namespace cfl {

// Objects O with descriptions d(o) ⊆ S, stored as a row-major bit matrix.
class ObjectContext {
 public:
  ObjectContext(std::vector<std::string> object_names, std::vector<Pattern> descriptions,
                std::vector<std::string> item_names);

  std::size_t object_count() const { return descriptions_.size(); }
  std::size_t universe_size() const { return item_names_.size(); }
  std::span<const std::string> object_names() const { return object_names_; }
  std::span<const std::string> item_names() const { return item_names_; }
  const Pattern& description(std::size_t o) const { return descriptions_[o]; }
  std::span<const Pattern> descriptions() const { return descriptions_; }
  kernels::RowMatrix rows() const { return {rows_, descriptions_.size(), row_words_}; }

  // ext(t) = { o : t ⊆ d(o) }
  Extent ext(const Pattern& t) const;
  // int(e) = ∩_{o ∈ e} d(o); int(∅) = S.
  Pattern intent(const Extent& e) const;

 private:
  std::vector<std::string> object_names_;
  std::vector<std::string> item_names_;
  std::vector<Pattern> descriptions_;
  std::vector<kernels::Word> rows_;
  std::size_t row_words_ = 0;
};

// A union-closed family A ⊆ 2^O containing ∅, given by its interior operator p_A.
class ExtensionalAbstraction {
 public:
  enum class Kind { identity, generators, frequency };

  static ExtensionalAbstraction identity() { return ExtensionalAbstraction(Kind::identity); }
  // p_A(e) = e if |e| ≥ min_support, else ∅.
  static ExtensionalAbstraction frequency(std::size_t min_support);
  // A = unions of generators, plus ∅; p_A(e) = union of the generators inside e.
  static ExtensionalAbstraction generated_by(std::vector<Extent> generators);

  Kind kind() const { return kind_; }
  std::size_t min_support() const { return min_support_; }
  std::span<const Extent> generators() const { return generators_; }

  Extent apply(const Extent& e) const;
  // Every member of A over `object_count` objects (exponential; for checks only).
  std::vector<Extent> members(std::size_t object_count) const;

 private:
  explicit ExtensionalAbstraction(Kind k) : kind_(k) {}

  Kind kind_;
  std::size_t min_support_ = 0;
  std::vector<Extent> generators_;
};

inline Extent ext(const ObjectContext& ctx, const Pattern& t) { return ctx.ext(t); }
inline Pattern intent(const ObjectContext& ctx, const Extent& e) { return ctx.intent(e); }
inline Extent abstract_ext(const ObjectContext& ctx, const ExtensionalAbstraction& abs, const Pattern& t) {
  return abs.apply(ctx.ext(t));
}

// f(t) = p_m(int(ext(t))) with m the anchor minimal below t.
// Throws std::invalid_argument when t is not a family member.
Pattern support_closure(const ObjectContext& ctx, const Family& fam, const Pattern& t);
// f_A(t) = p_m(int(p_A(ext(t)))).
Pattern abstract_support_closure(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs,
                                 const Pattern& t);

struct Concept {
  Extent extent;    // p_A(ext(intent))
  Pattern intent;   // a fixpoint of the abstract support closure
  Pattern anchor;   // minimal element whose up-set certified the closure
  bool empty_support = false;
};

struct ConceptConfluence {
  std::vector<Concept> concepts;  // sorted by lex_less on intents

  const Concept* find(const Pattern& intent) const;
  std::vector<Pattern> intents() const;
};

Concept make_concept(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs, Pattern intent);

// All concepts. Strongly accessible families are mined; other explicit
// families are scanned member by member. Throws std::invalid_argument for
// implicit families that are not strongly accessible.
ConceptConfluence build_concept_confluence(const ObjectContext& ctx, const Family& fam,
                                           const ExtensionalAbstraction& abs);

struct ExtentDifference {
  std::vector<Extent> only_in_image;     // in e[F] but in no h_m range
  std::vector<Extent> only_in_closures;  // in some h_m range but not in e[F]
};

// Checks e[F] = ∪_{m ∈ min F} h_m[2^{ext(m)}] with h_m = ext ∘ p_m ∘ int.
// `members` must list F exactly.
Verdict<ExtentDifference> verify_extent_decomposition(const ObjectContext& ctx, const Family& fam,
                                                      std::span<const Pattern> members);

struct ExistenceReport {
  bool exists = true;
  // When the candidate is not a subconfluence:
  std::optional<PatternTriple> witness;
  std::optional<Pattern> counterexample_object;  // the single description x ∪ y
  std::vector<Pattern> competing_maxima;         // ≥ 2 maximal members above t sharing its support
};

// A support closure exists for every context iff the candidate is a
// subconfluence of 2^S. Otherwise builds the one-object context {x ∪ y} and
// lists the competing maxima above t.
ExistenceReport support_closure_existence_check(std::span<const Pattern> candidate);

}  // namespace cfl
