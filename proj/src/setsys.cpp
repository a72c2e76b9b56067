#include "cfl/setsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfl {

std::vector<std::size_t> Family::augmentations(const Pattern& p) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < universe_size(); ++e)
    if (!p.test(e) && contains(p.with(e))) out.push_back(e);
  return out;
}

Pattern Family::anchor_minimal(const Pattern& t) const {
  for (const auto& m : minimals())
    if (m.is_subset_of(t)) return m;
  throw std::invalid_argument("pattern lies above no minimal element of the family");
}

namespace {

// Shared by the singleton-minimal families: the lex-smallest singleton below t.
Pattern lowest_singleton(const Pattern& t) {
  std::size_t i = t.first();
  if (i == t.size()) throw std::invalid_argument("the empty pattern lies above no minimal element");
  Pattern m(t.size());
  m.set(i);
  return m;
}

std::vector<Pattern> singletons(std::size_t n) {
  std::vector<Pattern> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Pattern(n, {i}));
  return out;
}

void require_subset(const Pattern& m, const Pattern& x) {
  if (!m.is_subset_of(x)) throw std::invalid_argument("project: m must be contained in x");
}

// Breadth-first closure of `seed` under `neighbours`, staying inside `within`.
Pattern grow(const Pattern& seed, const Pattern& within, const std::vector<Pattern>& neighbours) {
  Pattern reached = seed;
  Pattern frontier = seed;
  while (frontier.any()) {
    Pattern next(seed.size());
    frontier.for_each([&](std::size_t v) { next |= neighbours[v]; });
    next &= within;
    next -= reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

}  // namespace

void GraphSpec::validate() const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= vertices.size() || e.v >= vertices.size())
      throw ValidationError("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.u == e.v) throw ValidationError("edge " + std::to_string(i) + " is a self-loop on " + vertices[e.u]);
  }
}

// ---- connected vertex subsets ----

ConnectedVertexFamily::ConnectedVertexFamily(GraphSpec g, std::size_t min_size) : graph_(std::move(g)), min_size_(min_size) {
  graph_.validate();
  const std::size_t n = graph_.vertices.size();
  if (min_size_ == 0) throw std::invalid_argument("min_size must be at least 1");
  if (min_size_ > n) throw ValidationError("min_size exceeds the vertex count: the family is empty");
  adjacency_.assign(n, Pattern(n));
  for (const auto& e : graph_.edges) {
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
  }

  // Minimal members are the connected sets of exactly min_size vertices.
  std::vector<Pattern> level = singletons(n);
  for (std::size_t s = 1; s < min_size_; ++s) {
    std::unordered_set<Pattern, BitsetHash> next;
    for (const auto& c : level) {
      Pattern nb(n);
      c.for_each([&](std::size_t v) { nb |= adjacency_[v]; });
      nb -= c;
      nb.for_each([&](std::size_t v) { next.insert(c.with(v)); });
    }
    level.assign(next.begin(), next.end());
  }
  if (level.empty()) throw ValidationError("no connected vertex set reaches min_size: the family is empty");
  std::sort(level.begin(), level.end(), LexLess{});
  minimals_ = std::move(level);
}

Pattern ConnectedVertexFamily::component(const Pattern& seed, const Pattern& within) const {
  return grow(seed, within, adjacency_);
}

bool ConnectedVertexFamily::contains(const Pattern& p) const {
  const std::size_t size = p.count();
  if (size == 0 || size < min_size_) return false;
  return component(Pattern(p.size(), {p.first()}), p) == p;
}

std::vector<std::size_t> ConnectedVertexFamily::augmentations(const Pattern& p) const {
  if (!contains(p)) return Family::augmentations(p);
  Pattern nb(p.size());
  p.for_each([&](std::size_t v) { nb |= adjacency_[v]; });
  nb -= p;
  return nb.indices();
}

Pattern ConnectedVertexFamily::project(const Pattern& m, const Pattern& x) const {
  require_subset(m, x);
  return component(m, x);
}

Pattern ConnectedVertexFamily::anchor_minimal(const Pattern& t) const {
  return min_size_ == 1 ? lowest_singleton(t) : Family::anchor_minimal(t);
}

std::string ConnectedVertexFamily::describe() const {
  return "connected vertex subsets (min size " + std::to_string(min_size_) + ") of a graph with " +
         std::to_string(graph_.vertices.size()) + " vertices, " + std::to_string(graph_.edges.size()) + " edges";
}

// ---- connected edge subsets ----

ConnectedEdgeFamily::ConnectedEdgeFamily(GraphSpec g) : graph_(std::move(g)) {
  graph_.validate();
  const std::size_t m = graph_.edges.size();
  if (m == 0) throw ValidationError("a connected edge family needs at least one edge");
  touching_.assign(m, Pattern(m));
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = graph_.edges[i];
    labels_.push_back(a.label.empty() ? graph_.vertices[a.u] + "-" + graph_.vertices[a.v] : a.label);
    for (std::size_t j = 0; j < m; ++j) {
      const auto& b = graph_.edges[j];
      if (i != j && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)) touching_[i].set(j);
    }
  }
  minimals_ = singletons(m);
}

Pattern ConnectedEdgeFamily::component(const Pattern& seed, const Pattern& within) const {
  return grow(seed, within, touching_);
}

bool ConnectedEdgeFamily::contains(const Pattern& p) const {
  if (p.none()) return false;
  return component(Pattern(p.size(), {p.first()}), p) == p;
}

std::vector<std::size_t> ConnectedEdgeFamily::augmentations(const Pattern& p) const {
  if (!contains(p)) return Family::augmentations(p);
  Pattern nb(p.size());
  p.for_each([&](std::size_t e) { nb |= touching_[e]; });
  nb -= p;
  return nb.indices();
}

Pattern ConnectedEdgeFamily::project(const Pattern& m, const Pattern& x) const {
  require_subset(m, x);
  return component(m, x);
}

Pattern ConnectedEdgeFamily::anchor_minimal(const Pattern& t) const { return lowest_singleton(t); }

std::string ConnectedEdgeFamily::describe() const {
  return "connected edge subsets of a graph with " + std::to_string(graph_.vertices.size()) + " vertices, " +
         std::to_string(graph_.edges.size()) + " edges";
}

// ---- k-bounded-gap words ----

KGapWordFamily::KGapWordFamily(std::size_t n, std::size_t max_gap) : n_(n), gap_(max_gap) {
  if (n_ == 0) throw std::invalid_argument("sequence length must be at least 1");
  if (gap_ == 0) throw std::invalid_argument("max gap must be at least 1");
  for (std::size_t i = 1; i <= n_; ++i) names_.push_back(std::to_string(i));
  minimals_ = singletons(n_);
}

bool KGapWordFamily::contains(const Pattern& p) const {
  std::size_t prev = p.first();
  if (prev == p.size()) return false;
  for (std::size_t i = p.next(prev + 1); i < p.size(); i = p.next(i + 1)) {
    if (i - prev > gap_) return false;
    prev = i;
  }
  return true;
}

std::vector<std::size_t> KGapWordFamily::augmentations(const Pattern& p) const {
  if (!contains(p)) return Family::augmentations(p);
  const std::size_t lo = p.first();
  std::size_t hi = lo;
  p.for_each([&](std::size_t i) { hi = i; });
  std::vector<std::size_t> out;
  const std::size_t from = lo >= gap_ ? lo - gap_ : 0;
  const std::size_t to = std::min(n_ - 1, hi + gap_);
  for (std::size_t e = from; e <= to; ++e)
    if (!p.test(e)) out.push_back(e);
  return out;
}

Pattern KGapWordFamily::project(const Pattern& m, const Pattern& x) const {
  require_subset(m, x);
  if (m.none()) throw std::invalid_argument("project: m must be a family member");
  std::size_t lo = m.first(), hi = lo;
  m.for_each([&](std::size_t i) { hi = i; });
  // Extend outward while the next chosen position of x is within the gap bound.
  while (true) {
    std::size_t step = 0;
    for (std::size_t d = 1; d <= gap_ && d <= lo; ++d)
      if (x.test(lo - d)) step = d;
    if (!step) break;
    lo -= step;
  }
  while (true) {
    std::size_t step = 0;
    for (std::size_t d = 1; d <= gap_ && hi + d < n_; ++d)
      if (x.test(hi + d)) step = d;
    if (!step) break;
    hi += step;
  }
  Pattern out(n_);
  for (std::size_t i = lo; i <= hi; ++i)
    if (x.test(i)) out.set(i);
  return out;
}

Pattern KGapWordFamily::anchor_minimal(const Pattern& t) const { return lowest_singleton(t); }

std::string KGapWordFamily::describe() const {
  return std::to_string(gap_) + "-bounded-gap words over " + std::to_string(n_) + " positions";
}

// ---- explicit families ----

Verdict<PatternTriple> ExplicitFamily::check_subconfluence(std::span<const Pattern> patterns) {
  std::unordered_set<Pattern, BitsetHash> index(patterns.begin(), patterns.end());
  for (const auto& t : patterns) {
    std::vector<const Pattern*> above;
    for (const auto& q : patterns)
      if (t.is_subset_of(q)) above.push_back(&q);
    for (std::size_t i = 0; i < above.size(); ++i)
      for (std::size_t j = i + 1; j < above.size(); ++j)
        if (!index.count(*above[i] | *above[j])) return Verdict<PatternTriple>::fail({t, *above[i], *above[j]});
  }
  return Verdict<PatternTriple>::pass();
}

ExplicitFamily::ExplicitFamily(std::vector<Pattern> patterns, std::vector<std::string> names) : names_(std::move(names)) {
  if (patterns.empty()) throw ValidationError("an explicit family needs at least one pattern");
  for (const auto& p : patterns)
    if (p.size() != names_.size()) throw std::invalid_argument("pattern width does not match the item universe");
  std::sort(patterns.begin(), patterns.end(), LexLess{});
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  if (auto v = check_subconfluence(patterns); !v) {
    const auto& w = *v.witness;
    auto show = [&](const Pattern& p) { return "{" + to_string(p, names_) + "}"; };
    throw ValidationError("not a subconfluence: " + show(w.x) + " and " + show(w.y) + " lie above " + show(w.t) +
                          " but their union " + show(w.x | w.y) + " is not in the family");
  }
  members_ = std::move(patterns);
  index_.insert(members_.begin(), members_.end());
  for (const auto& t : members_) {
    bool minimal = true;
    for (const auto& q : members_)
      if (q != t && q.is_subset_of(t)) {
        minimal = false;
        break;
      }
    if (minimal) minimals_.push_back(t);
  }
  strongly_accessible_ = is_strongly_accessible(std::span<const Pattern>(members_)).holds();
}

Pattern ExplicitFamily::project(const Pattern& m, const Pattern& x) const {
  require_subset(m, x);
  Pattern out = m;
  for (const auto& q : members_)
    if (m.is_subset_of(q) && q.is_subset_of(x)) out |= q;
  return out;
}

std::string ExplicitFamily::describe() const {
  return "explicit family of " + std::to_string(members_.size()) + " patterns over " + std::to_string(names_.size()) + " items";
}

Verdict<StuckPair> is_strongly_accessible(std::span<const Pattern> members) {
  std::unordered_set<Pattern, BitsetHash> index(members.begin(), members.end());
  for (const auto& lo : members)
    for (const auto& hi : members) {
      if (lo == hi || !lo.is_subset_of(hi)) continue;
      bool step = false;
      (hi - lo).for_each([&](std::size_t e) { step = step || index.count(lo.with(e)); });
      if (!step) return Verdict<StuckPair>::fail({lo, hi});
    }
  return Verdict<StuckPair>::pass();
}

Verdict<StuckPair> is_strongly_accessible(const ExplicitFamily& fam) {
  return is_strongly_accessible(std::span<const Pattern>(*fam.explicit_members()));
}

}  // namespace cfl

namespace cfl {

std::vector<Pattern> enumerate_members(const Family& fam, std::size_t budget) {
  if (const auto* members = fam.explicit_members()) {
    if (members->size() > budget) throw BudgetExceeded(budget, members->size());
    return *members;
  }
  std::unordered_set<Pattern, BitsetHash> seen;
  std::vector<Pattern> queue;
  auto visit = [&](const Pattern& p) {
    if (!seen.insert(p).second) return;
    if (seen.size() > budget) throw BudgetExceeded(budget, seen.size());
    queue.push_back(p);
  };
  for (const auto& m : fam.minimals()) visit(m);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Pattern p = queue[head];
    for (auto e : fam.augmentations(p)) visit(p.with(e));
  }
  std::sort(queue.begin(), queue.end(), LexLess{});
  return queue;
}

}  // namespace cfl
