#pragma once

// Pattern families F ⊆ 2^S that are subconfluences of the powerset, exposed
// through one interface: membership, minimal elements, single-item
// augmentations and the projections p_m(X) = greatest member of F^m below X.
//
// Connected-subgraph and gapped-word families are implicit; they are never
// materialized.

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "cfl/bitset.hpp"
#include "cfl/verdict.hpp"

namespace cfl {

class Family {
 public:
  virtual ~Family() = default;

  virtual std::size_t universe_size() const = 0;
  virtual std::span<const std::string> item_names() const = 0;
  virtual bool contains(const Pattern& p) const = 0;
  // Pairwise incomparable, sorted by lex_less.
  virtual const std::vector<Pattern>& minimals() const = 0;
  // Items e ∉ p with p ∪ {e} ∈ F, ascending.
  virtual std::vector<std::size_t> augmentations(const Pattern& p) const;
  // p_m(x): greatest member containing m and contained in x. Requires m ∈ F, m ⊆ x.
  virtual Pattern project(const Pattern& m, const Pattern& x) const = 0;
  // ⊤_m: greatest member containing m.
  Pattern local_top(const Pattern& m) const { return project(m, Pattern::full(universe_size())); }
  // Lex-smallest minimal contained in t. Throws std::invalid_argument if none.
  virtual Pattern anchor_minimal(const Pattern& t) const;
  // All members in lex order when the family is stored explicitly.
  virtual const std::vector<Pattern>* explicit_members() const { return nullptr; }
  // Implicit kinds are strongly accessible by construction.
  virtual bool strongly_accessible() const { return true; }
  virtual std::string describe() const = 0;
};

struct GraphSpec {
  struct Edge {
    std::size_t u, v;
    std::string label;
  };
  std::vector<std::string> vertices;
  std::vector<Edge> edges;

  // Throws ValidationError on self-loops or endpoints out of range.
  void validate() const;
};

// Vertex subsets inducing a connected subgraph, of size at least min_size.
class ConnectedVertexFamily final : public Family {
 public:
  ConnectedVertexFamily(GraphSpec g, std::size_t min_size = 1);

  std::size_t universe_size() const override { return graph_.vertices.size(); }
  std::span<const std::string> item_names() const override { return graph_.vertices; }
  bool contains(const Pattern& p) const override;
  const std::vector<Pattern>& minimals() const override { return minimals_; }
  std::vector<std::size_t> augmentations(const Pattern& p) const override;
  Pattern project(const Pattern& m, const Pattern& x) const override;
  Pattern anchor_minimal(const Pattern& t) const override;
  std::string describe() const override;

  // Vertices reachable from `seed` inside the subgraph induced by `within`.
  Pattern component(const Pattern& seed, const Pattern& within) const;

 private:
  GraphSpec graph_;
  std::size_t min_size_;
  std::vector<Pattern> adjacency_;
  std::vector<Pattern> minimals_;
};

// Edge subsets whose edges form a connected subgraph.
class ConnectedEdgeFamily final : public Family {
 public:
  explicit ConnectedEdgeFamily(GraphSpec g);

  std::size_t universe_size() const override { return graph_.edges.size(); }
  std::span<const std::string> item_names() const override { return labels_; }
  bool contains(const Pattern& p) const override;
  const std::vector<Pattern>& minimals() const override { return minimals_; }
  std::vector<std::size_t> augmentations(const Pattern& p) const override;
  Pattern project(const Pattern& m, const Pattern& x) const override;
  Pattern anchor_minimal(const Pattern& t) const override;
  std::string describe() const override;

  Pattern component(const Pattern& seed, const Pattern& within) const;

 private:
  GraphSpec graph_;
  std::vector<std::string> labels_;
  std::vector<Pattern> touching_;  // edges sharing an endpoint, per edge
  std::vector<Pattern> minimals_;
};

// Position subsets of a length-n sequence whose consecutive chosen positions
// differ by at most max_gap. Items are positions 1..n (index i ↔ position i+1).
class KGapWordFamily final : public Family {
 public:
  KGapWordFamily(std::size_t n, std::size_t max_gap);

  std::size_t universe_size() const override { return n_; }
  std::span<const std::string> item_names() const override { return names_; }
  bool contains(const Pattern& p) const override;
  const std::vector<Pattern>& minimals() const override { return minimals_; }
  std::vector<std::size_t> augmentations(const Pattern& p) const override;
  Pattern project(const Pattern& m, const Pattern& x) const override;
  Pattern anchor_minimal(const Pattern& t) const override;
  std::string describe() const override;

 private:
  std::size_t n_, gap_;
  std::vector<std::string> names_;
  std::vector<Pattern> minimals_;
};

// x, y ⊇ t are members but x ∪ y is not.
struct PatternTriple {
  Pattern t, x, y;
};
// No single-item step from `from` towards `to` stays inside the family.
struct StuckPair {
  Pattern from, to;
};

// Hand-listed family, validated as a subconfluence of 2^S on construction.
class ExplicitFamily final : public Family {
 public:
  // Throws ValidationError naming the (t, x, y) witness when the list is not a
  // subconfluence, or when it is empty.
  ExplicitFamily(std::vector<Pattern> patterns, std::vector<std::string> names);

  static Verdict<PatternTriple> check_subconfluence(std::span<const Pattern> patterns);

  std::size_t universe_size() const override { return names_.size(); }
  std::span<const std::string> item_names() const override { return names_; }
  bool contains(const Pattern& p) const override { return index_.count(p) != 0; }
  const std::vector<Pattern>& minimals() const override { return minimals_; }
  Pattern project(const Pattern& m, const Pattern& x) const override;
  const std::vector<Pattern>* explicit_members() const override { return &members_; }
  bool strongly_accessible() const override { return strongly_accessible_; }
  std::string describe() const override;

 private:
  std::vector<std::string> names_;
  std::vector<Pattern> members_;
  std::unordered_set<Pattern, BitsetHash> index_;
  std::vector<Pattern> minimals_;
  bool strongly_accessible_ = false;
};

// Breadth-first enumeration from the minimals through single-item
// augmentations, returned in lex order. Complete for strongly accessible
// families. Throws BudgetExceeded once more than `budget` members are found.
std::vector<Pattern> enumerate_members(const Family& fam, std::size_t budget);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t budget, std::size_t found)
      : std::runtime_error("family exceeds the budget of " + std::to_string(budget) + " members (found " +
                           std::to_string(found) + " so far)"),
        found_(found) {}
  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

// Every t1 ⊆ t2 in F is joined by single-item augmentations inside F.
Verdict<StuckPair> is_strongly_accessible(std::span<const Pattern> members);
Verdict<StuckPair> is_strongly_accessible(const ExplicitFamily& fam);

}  // namespace cfl
