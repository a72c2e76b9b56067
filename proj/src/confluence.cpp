#include "cfl/confluence.hpp"

#include <stdexcept>

namespace cfl::confluence {

Verdict<ConfluenceWitness> is_confluence(const FinitePoset& p) {
  const auto mins = p.minimals().indices();
  for (Index m : mins) {
    const ElementSet up = p.up_set(m);
    if (!p.top_of(up)) return Verdict<ConfluenceWitness>::fail({m, std::nullopt});
    const auto members = up.indices();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        Index x = members[i], y = members[j];
        if (!p.top_of(up & p.down_set(x) & p.down_set(y)))
          return Verdict<ConfluenceWitness>::fail({m, std::make_pair(x, y)});
      }
  }
  return Verdict<ConfluenceWitness>::pass();
}

Outcome<ExplicitConfluence, ConfluenceWitness> ExplicitConfluence::make(FinitePoset carrier) {
  if (auto v = is_confluence(carrier); !v) return *v.witness;
  ExplicitConfluence f;
  f.minimals_ = carrier.minimals();
  f.tops_.resize(carrier.size());
  for (Index t = 0; t < carrier.size(); ++t) f.tops_[t] = *carrier.top_of(carrier.up_set(t));
  f.carrier_ = std::move(carrier);
  return f;
}

Index local_meet(const ExplicitConfluence& f, Index t, Index x, Index y) {
  const auto& p = f.carrier();
  if (!p.leq(t, x) || !p.leq(t, y)) throw std::invalid_argument("local_meet: arguments must lie in the up-set of t");
  auto m = p.top_of(p.up_set(t) & p.down_set(x) & p.down_set(y));
  if (!m) throw std::logic_error("local_meet: carrier is not a confluence");
  return *m;
}

std::optional<Index> local_join(const ExplicitConfluence& f, Index x, Index y) {
  const auto& p = f.carrier();
  ElementSet common = p.up_set(x) & p.up_set(y);
  if (common.none()) return std::nullopt;
  return p.bottom_of(common);
}

Verdict<LocalMeetWitness> is_closed_under_local_meet(const ExplicitConfluence& f, const ElementSet& c) {
  const auto& p = f.carrier();
  for (Index t = 0; t < p.size(); ++t) {
    if (!c.test(f.local_top(t))) return Verdict<LocalMeetWitness>::fail({t, std::nullopt});
    const auto members = (c & p.up_set(t)).indices();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!c.test(local_meet(f, t, members[i], members[j])))
          return Verdict<LocalMeetWitness>::fail({t, std::make_pair(members[i], members[j])});
  }
  return Verdict<LocalMeetWitness>::pass();
}

Outcome<OperatorMap, LocalMeetWitness> closure_from_local_meet_subset(const ExplicitConfluence& f, const ElementSet& c) {
  if (auto v = is_closed_under_local_meet(f, c); !v) return *v.witness;
  const auto& p = f.carrier();
  std::vector<Index> table(p.size());
  // Closed under ∧_t, so the meet of C ∩ F^t is its least element.
  for (Index t = 0; t < p.size(); ++t) table[t] = *p.bottom_of(c & p.up_set(t));
  return OperatorMap(p, std::move(table));
}

Verdict<SubconfluenceWitness> is_subconfluence(const FiniteLattice& host, const ElementSet& fam) {
  const auto& p = host.poset();
  for (Index t : fam.indices()) {
    const auto above = (fam & p.up_set(t)).indices();
    for (std::size_t i = 0; i < above.size(); ++i)
      for (std::size_t j = i + 1; j < above.size(); ++j)
        if (!fam.test(host.join(above[i], above[j])))
          return Verdict<SubconfluenceWitness>::fail({t, above[i], above[j]});
  }
  return Verdict<SubconfluenceWitness>::pass();
}

Outcome<InteriorFamily, SubconfluenceWitness> InteriorFamily::make(FiniteLattice host, ElementSet family) {
  if (family.size() != host.size()) throw std::invalid_argument("family must be a subset of the host lattice");
  if (auto v = is_subconfluence(host, family); !v) return *v.witness;
  InteriorFamily f;
  f.minimals_ = ElementSet(host.size());
  for (Index t : family.indices()) {
    bool minimal = true;
    family.for_each([&](Index q) { minimal = minimal && !host.poset().less(q, t); });
    if (minimal) f.minimals_.set(t);
  }
  f.host_ = std::move(host);
  f.family_ = std::move(family);
  return f;
}

Index interior_project(const InteriorFamily& fam, Index t, Index x) {
  const auto& p = fam.host_.poset();
  if (!fam.family_.test(t)) throw std::invalid_argument("interior_project: t is not a family member");
  if (!p.leq(t, x)) throw std::invalid_argument("interior_project: x must lie above t");
  Index m = t;
  for (Index cand : fam.minimals_.indices())
    if (p.leq(cand, t)) {
      m = cand;
      break;
    }
  auto top = p.top_of(fam.family_ & p.up_set(m) & p.down_set(x));
  if (!top) throw std::logic_error("interior_project: family is not a subconfluence");
  return *top;
}

OperatorMap lift_closure(const InteriorFamily& fam, const OperatorMap& f) {
  if (f.domain().size() != fam.host().size()) throw std::invalid_argument("closure must be defined on the host lattice");
  const auto members = fam.family().indices();
  std::vector<Index> position(fam.host().size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = i;
  std::vector<Index> table(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) table[i] = position[interior_project(fam, members[i], f(members[i]))];
  return OperatorMap(fam.family_poset(), std::move(table));
}

}  // namespace cfl::confluence
