#include "cfl/galois.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cfl/miner.hpp"

namespace cfl {

ObjectContext::ObjectContext(std::vector<std::string> object_names, std::vector<Pattern> descriptions,
                             std::vector<std::string> item_names)
    : object_names_(std::move(object_names)), item_names_(std::move(item_names)), descriptions_(std::move(descriptions)) {
  if (object_names_.size() != descriptions_.size())
    throw std::invalid_argument("object names and descriptions differ in count");
  row_words_ = Bitset::word_count(item_names_.size());
  rows_.reserve(descriptions_.size() * row_words_);
  for (const auto& d : descriptions_) {
    if (d.size() != item_names_.size()) throw std::invalid_argument("description width does not match the item universe");
    rows_.insert(rows_.end(), d.words().begin(), d.words().end());
  }
}

Extent ObjectContext::ext(const Pattern& t) const {
  Extent e(object_count());
  kernels::active().support_scan(t.words(), rows(), e.words());
  return e;
}

Pattern ObjectContext::intent(const Extent& e) const {
  Pattern p = Pattern::full(universe_size());
  if (row_words_) kernels::active().and_selected_rows(e.words(), rows(), p.words());
  return p;
}

ExtensionalAbstraction ExtensionalAbstraction::frequency(std::size_t min_support) {
  ExtensionalAbstraction a(Kind::frequency);
  a.min_support_ = min_support;
  return a;
}

ExtensionalAbstraction ExtensionalAbstraction::generated_by(std::vector<Extent> generators) {
  ExtensionalAbstraction a(Kind::generators);
  a.generators_ = std::move(generators);
  return a;
}

Extent ExtensionalAbstraction::apply(const Extent& e) const {
  switch (kind_) {
    case Kind::identity:
      return e;
    case Kind::frequency:
      return kernels::active().popcount(e.words()) >= min_support_ ? e : Extent(e.size());
    case Kind::generators: {
      Extent out(e.size());
      for (const auto& g : generators_)
        if (g.is_subset_of(e)) out |= g;
      return out;
    }
  }
  return e;
}

std::vector<Extent> ExtensionalAbstraction::members(std::size_t object_count) const {
  std::vector<Extent> out;
  switch (kind_) {
    case Kind::identity:
    case Kind::frequency: {
      if (object_count > 20) throw std::invalid_argument("too many objects to list the abstraction");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << object_count); ++mask) {
        Extent e = Bitset::from_mask(object_count, mask);
        if (apply(e) == e) out.push_back(std::move(e));
      }
      break;
    }
    case Kind::generators: {
      std::unordered_set<Extent, BitsetHash> seen{Extent(object_count)};
      out.push_back(Extent(object_count));
      for (const auto& g : generators_) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
          Extent u = out[i] | g;
          if (seen.insert(u).second) out.push_back(std::move(u));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

namespace {

Pattern close_within(const ObjectContext& ctx, const Family& fam, const Extent& support, const Pattern& t) {
  if (!fam.contains(t)) throw std::invalid_argument("support closure: pattern is not a family member");
  return fam.project(fam.anchor_minimal(t), ctx.intent(support));
}

}  // namespace

Pattern support_closure(const ObjectContext& ctx, const Family& fam, const Pattern& t) {
  return close_within(ctx, fam, ctx.ext(t), t);
}

Pattern abstract_support_closure(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs,
                                 const Pattern& t) {
  return close_within(ctx, fam, abs.apply(ctx.ext(t)), t);
}

const Concept* ConceptConfluence::find(const Pattern& intent) const {
  auto it = std::lower_bound(concepts.begin(), concepts.end(), intent,
                             [](const Concept& c, const Pattern& p) { return lex_less(c.intent, p); });
  return it != concepts.end() && it->intent == intent ? &*it : nullptr;
}

std::vector<Pattern> ConceptConfluence::intents() const {
  std::vector<Pattern> out;
  out.reserve(concepts.size());
  for (const auto& c : concepts) out.push_back(c.intent);
  return out;
}

Concept make_concept(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs, Pattern intent) {
  Concept c;
  c.extent = abs.apply(ctx.ext(intent));
  c.empty_support = c.extent.none();
  c.anchor = fam.anchor_minimal(intent);
  c.intent = std::move(intent);
  return c;
}

ConceptConfluence build_concept_confluence(const ObjectContext& ctx, const Family& fam,
                                           const ExtensionalAbstraction& abs) {
  ConceptConfluence out;
  if (fam.strongly_accessible()) {
    MinerConfig cfg;
    cfg.family = &fam;
    cfg.context = &ctx;
    cfg.abstraction = abs;
    mine(cfg, [&](const MineEvent& ev) { out.concepts.push_back(ev.closed); });
  } else if (const auto* members = fam.explicit_members()) {
    for (const auto& t : *members)
      if (abstract_support_closure(ctx, fam, abs, t) == t) out.concepts.push_back(make_concept(ctx, fam, abs, t));
  } else {
    throw std::invalid_argument("concept confluence needs a strongly accessible or explicit family");
  }
  std::sort(out.concepts.begin(), out.concepts.end(),
            [](const Concept& a, const Concept& b) { return lex_less(a.intent, b.intent); });
  return out;
}

Verdict<ExtentDifference> verify_extent_decomposition(const ObjectContext& ctx, const Family& fam,
                                                      std::span<const Pattern> members) {
  std::unordered_set<Extent, BitsetHash> image, closures;
  for (const auto& t : members) image.insert(ctx.ext(t));

  const std::size_t n = ctx.object_count();
  for (const auto& m : fam.minimals()) {
    const auto objects = ctx.ext(m).indices();
    if (objects.size() > 24) throw std::invalid_argument("extent decomposition: support of a minimal is too large");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << objects.size()); ++mask) {
      Extent x(n);
      for (std::size_t k = 0; k < objects.size(); ++k)
        if ((mask >> k) & 1U) x.set(objects[k]);
      closures.insert(ctx.ext(fam.project(m, ctx.intent(x))));
    }
  }

  ExtentDifference diff;
  for (const auto& e : image)
    if (!closures.count(e)) diff.only_in_image.push_back(e);
  for (const auto& e : closures)
    if (!image.count(e)) diff.only_in_closures.push_back(e);
  if (diff.only_in_image.empty() && diff.only_in_closures.empty()) return Verdict<ExtentDifference>::pass();
  std::sort(diff.only_in_image.begin(), diff.only_in_image.end(), LexLess{});
  std::sort(diff.only_in_closures.begin(), diff.only_in_closures.end(), LexLess{});
  return Verdict<ExtentDifference>::fail(std::move(diff));
}

ExistenceReport support_closure_existence_check(std::span<const Pattern> candidate) {
  ExistenceReport report;
  auto verdict = ExplicitFamily::check_subconfluence(candidate);
  if (verdict) return report;

  const auto& w = *verdict.witness;
  const Pattern object = w.x | w.y;
  report.exists = false;
  report.witness = w;
  report.counterexample_object = object;
  // In the context {x ∪ y}, every member between t and x ∪ y has support {o};
  // x ∪ y itself is missing, so these members have at least two maxima.
  std::vector<Pattern> same_support;
  for (const auto& q : candidate)
    if (w.t.is_subset_of(q) && q.is_subset_of(object)) same_support.push_back(q);
  for (const auto& q : same_support) {
    bool maximal = std::none_of(same_support.begin(), same_support.end(),
                                [&](const Pattern& r) { return r != q && q.is_subset_of(r); });
    if (maximal) report.competing_maxima.push_back(q);
  }
  std::sort(report.competing_maxima.begin(), report.competing_maxima.end(), LexLess{});
  return report;
}

}  // namespace cfl
