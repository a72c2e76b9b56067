#include "cfl/implications.hpp"

#include <algorithm>
#include <map>

namespace cfl {

std::vector<EquivalenceClass> equivalence_classes(const ObjectContext& ctx, const Family& fam,
                                                  std::span<const Pattern> members) {
  std::map<Extent, std::vector<Pattern>, LexLess> groups;
  for (const auto& t : members) groups[ctx.ext(t)].push_back(t);

  std::vector<EquivalenceClass> out;
  out.reserve(groups.size());
  for (auto& [extent, group] : groups) {
    EquivalenceClass cls;
    cls.extent = extent;
    std::sort(group.begin(), group.end(), LexLess{});
    for (const auto& t : group) {
      bool generator = std::none_of(group.begin(), group.end(),
                                    [&](const Pattern& q) { return q != t && q.is_subset_of(t); });
      if (generator) cls.generators.push_back(t);
      if (support_closure(ctx, fam, t) == t) cls.closed.push_back(t);
    }
    cls.members = std::move(group);
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Implication> minmax_basis(const ObjectContext& ctx, const Family& fam, std::span<const Pattern> members) {
  std::vector<Implication> out;
  for (const auto& cls : equivalence_classes(ctx, fam, members))
    for (const auto& p : cls.generators)
      for (const auto& q : cls.closed) {
        if (p == q) continue;
        auto kind = p.is_subset_of(q) || q.is_subset_of(p) ? Implication::Kind::internal : Implication::Kind::external;
        out.push_back({p, q, kind});
      }
  std::sort(out.begin(), out.end(), [](const Implication& a, const Implication& b) {
    if (a.premise != b.premise) return lex_less(a.premise, b.premise);
    return lex_less(a.conclusion, b.conclusion);
  });
  return out;
}

bool check_implication(const ObjectContext& ctx, const Implication& imp) {
  return ctx.ext(imp.premise).is_subset_of(ctx.ext(imp.conclusion));
}

}  // namespace cfl
