#include "cfl/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "cfl/confluence.hpp"
#include "cfl/miner.hpp"
#include "cfl/order.hpp"
#include "cfl/random_instances.hpp"

namespace cfl::oracle {

namespace {

using order::ElementSet;
using order::FiniteLattice;
using order::FinitePoset;
using order::Index;

// Support and abstraction straight from the definitions, without the kernels.
Extent plain_ext(const ObjectContext& ctx, const Pattern& t) {
  Extent e(ctx.object_count());
  for (std::size_t o = 0; o < ctx.object_count(); ++o)
    if (t.is_subset_of(ctx.description(o))) e.set(o);
  return e;
}

Extent plain_abstract(const ExtensionalAbstraction& abs, const Extent& e) {
  switch (abs.kind()) {
    case ExtensionalAbstraction::Kind::identity:
      return e;
    case ExtensionalAbstraction::Kind::frequency:
      return e.count() >= abs.min_support() ? e : Extent(e.size());
    case ExtensionalAbstraction::Kind::generators: {
      Extent out(e.size());
      for (const auto& g : abs.generators())
        if (g.is_subset_of(e)) out |= g;
      return out;
    }
  }
  return e;
}

std::vector<Pattern> maximal_elements(const std::vector<Pattern>& s) {
  std::vector<Pattern> out;
  for (const auto& q : s)
    if (std::none_of(s.begin(), s.end(), [&](const Pattern& r) { return r != q && q.is_subset_of(r); }))
      out.push_back(q);
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// Greatest member r with t ⊆ r ⊆ x, by scanning.
std::optional<Pattern> plain_project(std::span<const Pattern> members, const Pattern& t, const Pattern& x) {
  std::vector<Pattern> between;
  for (const auto& r : members)
    if (t.is_subset_of(r) && r.is_subset_of(x)) between.push_back(r);
  auto top = maximal_elements(between);
  if (top.size() != 1) return std::nullopt;
  return top.front();
}

// Shared state for one instance.
struct Instance {
  const ObjectContext& ctx;
  const ExtensionalAbstraction& abs;
  std::span<const std::string> names;
  std::vector<Pattern> members;  // lex order
  std::unordered_map<Pattern, Index, BitsetHash> index;
  std::optional<FinitePoset> poset;  // subset order on members, when small enough
  std::mt19937_64 rng;

  std::string show(const Pattern& p) const { return braced(p, names); }
  std::string show(Index i) const { return show(members[i]); }
};

Instance make_instance(const ObjectContext& ctx, const ExtensionalAbstraction& abs, std::vector<Pattern> members,
                       const OracleOptions& opts) {
  Instance in{ctx, abs, ctx.item_names(), std::move(members), {}, std::nullopt, std::mt19937_64(opts.seed)};
  for (Index i = 0; i < in.members.size(); ++i) in.index.emplace(in.members[i], i);
  if (in.members.size() <= opts.explicit_order_limit) {
    const auto& m = in.members;
    in.poset = FinitePoset::from_relation(m.size(), [&](Index i, Index j) { return m[i].is_subset_of(m[j]); });
  }
  return in;
}

CheckResult pass(std::string name, std::string detail = {}) { return {std::move(name), Status::pass, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), Status::fail, std::move(detail)}; }
CheckResult skip(std::string name, std::string detail) { return {std::move(name), Status::skipped, std::move(detail)}; }

const FiniteLattice& powerset_lattice(std::size_t k) {
  static std::map<std::size_t, FiniteLattice> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, FiniteLattice::powerset(k)).first;
  return it->second;
}

// Pattern-level, per-up-set (as join-closure inside [t, S]) and
// confluence-level views of "F is a subconfluence of 2^S" must agree.
CheckResult check_subconfluence_views(const Instance& in) {
  const std::string name = "subconfluence-equivalence";
  const auto& m = in.members;
  const std::size_t n_items = in.names.size();

  auto direct = ExplicitFamily::check_subconfluence(m);
  const bool pattern_view = direct.holds();

  // Each F^t, relabelled over the free items S \ t, must be join-closed in
  // the interval [t, S] (a powerset lattice).
  bool upset_view = true;
  std::string upset_detail;
  for (const auto& t : m) {
    const auto free_items = (Pattern::full(n_items) - t).indices();
    std::vector<Pattern> above;
    for (const auto& x : m)
      if (t.is_subset_of(x)) above.push_back(x);
    if (free_items.size() <= 6) {
      const auto& host = powerset_lattice(free_items.size());
      ElementSet c(host.size());
      for (const auto& x : above) {
        std::size_t mask = 0;
        for (std::size_t k = 0; k < free_items.size(); ++k)
          if (x.test(free_items[k])) mask |= std::size_t{1} << k;
        c.set(mask);
      }
      if (!order::is_join_closed(host, c)) {
        upset_view = false;
        upset_detail = "F^" + in.show(t) + " is not join-closed";
        break;
      }
    } else {
      std::unordered_set<Pattern, BitsetHash> lookup(above.begin(), above.end());
      for (std::size_t i = 0; i < above.size() && upset_view; ++i)
        for (std::size_t j = i + 1; j < above.size(); ++j)
          if (!lookup.count(above[i] | above[j])) {
            upset_view = false;
            upset_detail = "F^" + in.show(t) + " misses " + in.show(above[i] | above[j]);
            break;
          }
    }
    if (!upset_view) break;
  }

  std::optional<bool> confluence_view;
  if (in.poset) {
    auto made = confluence::ExplicitConfluence::make(*in.poset);
    bool ok = made.ok();
    if (ok) {
      // Local joins must be unions whenever a common lower bound exists.
      const auto& f = made.value();
      for (Index i = 0; i < m.size() && ok; ++i)
        for (Index j = i + 1; j < m.size() && ok; ++j) {
          bool bounded = false;
          for (Index t = 0; t < m.size() && !bounded; ++t) bounded = in.poset->leq(t, i) && in.poset->leq(t, j);
          if (!bounded) continue;
          auto join = confluence::local_join(f, i, j);
          auto u = in.index.find(m[i] | m[j]);
          ok = join && u != in.index.end() && *join == u->second;
        }
    }
    confluence_view = ok;
  }

  std::optional<bool> host_view;
  if (n_items <= 8) {
    const auto& host = powerset_lattice(n_items);
    ElementSet c(host.size());
    for (const auto& x : m) c.set(static_cast<std::size_t>(x.words().empty() ? 0 : x.words()[0]));
    host_view = confluence::is_subconfluence(host, c).holds();
  }

  const bool agree = upset_view == pattern_view && confluence_view.value_or(pattern_view) == pattern_view &&
                     host_view.value_or(pattern_view) == pattern_view;
  if (!agree) {
    std::ostringstream os;
    os << "views disagree: pattern=" << pattern_view << " up-sets=" << upset_view;
    if (confluence_view) os << " confluence=" << *confluence_view;
    if (host_view) os << " host=" << *host_view;
    return fail(name, os.str());
  }
  if (!pattern_view) {
    const auto& w = *direct.witness;
    return fail(name, "x=" + in.show(w.x) + " and y=" + in.show(w.y) + " contain t=" + in.show(w.t) + " but x ∪ y=" +
                          in.show(w.x | w.y) + " is missing");
  }
  return pass(name, upset_detail);
}

std::vector<Index> closure_table(const Instance& in, const Family& fam, const ElementSet* within = nullptr) {
  std::vector<Index> table;
  auto add = [&](Index i) {
    auto c = abstract_support_closure(in.ctx, fam, in.abs, in.members[i]);
    table.push_back(in.index.at(c));
  };
  if (within)
    within->for_each(add);
  else
    for (Index i = 0; i < in.members.size(); ++i) add(i);
  return table;
}

ElementSet random_element_set(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) s.set(i);
  return s;
}

// On each F^m (a lattice), the range of the closure is meet-closed and
// regenerates the closure; random subsets are meet-closed exactly when they
// are closure subsets.
CheckResult check_local_lattices(Instance& in, const Family& fam) {
  const std::string name = "local-lattice-closures";
  if (!in.poset) return skip(name, "family too large for explicit lattices");
  std::size_t checked = 0;
  for (const auto& mp : fam.minimals()) {
    const Index m = in.index.at(mp);
    const ElementSet up = in.poset->up_set(m);
    if (up.count() > 64) continue;
    FinitePoset sub = in.poset->subposet(up);
    std::optional<FiniteLattice> lat;
    try {
      lat = FiniteLattice::from_poset(sub);
    } catch (const ValidationError& e) {
      return fail(name, "F^" + in.show(m) + " is not a lattice: " + e.what());
    }
    // Closure table in sub-indices.
    std::vector<Index> global = up.indices();
    std::vector<Index> table;
    for (Index g : closure_table(in, fam, &up)) {
      auto pos = std::lower_bound(global.begin(), global.end(), g);
      if (pos == global.end() || *pos != g) return fail(name, "closure leaves F^" + in.show(m));
      table.push_back(static_cast<Index>(pos - global.begin()));
    }
    order::OperatorMap f(sub, table);
    if (!order::classify_operator(f).is_closure())
      return fail(name, "support closure on F^" + in.show(m) + " is not a closure");
    ElementSet range = f.range();
    if (!order::is_meet_closed(*lat, range)) return fail(name, "closed set of F^" + in.show(m) + " is not meet-closed");
    auto rebuilt = order::closure_from_subset(sub, range);
    if (!rebuilt || !std::equal(table.begin(), table.end(), rebuilt.value().table().begin()))
      return fail(name, "closed set of F^" + in.show(m) + " does not regenerate the closure");

    for (int round = 0; round < 4; ++round) {
      ElementSet c = random_element_set(in.rng, sub.size());
      const bool meet_closed = order::is_meet_closed(*lat, c).holds();
      const bool closure_subset = order::closure_from_subset(sub, c).ok();
      if (meet_closed != closure_subset)
        return fail(name, "on F^" + in.show(m) + " a subset is meet-closed=" + std::to_string(meet_closed) +
                              " but closure subset=" + std::to_string(closure_subset));
    }
    ++checked;
  }
  return checked ? pass(name, std::to_string(checked) + " up-sets") : skip(name, "every up-set exceeds 64 members");
}

// Closed sets of F are exactly the subsets closed under every local meet.
CheckResult check_local_meets(Instance& in, const Family& fam) {
  const std::string name = "local-meet-closures";
  if (!in.poset) return skip(name, "family too large for an explicit confluence");
  auto made = confluence::ExplicitConfluence::make(*in.poset);
  if (!made) return fail(name, "subset order on F is not a confluence");
  const auto& f = made.value();

  const auto table = closure_table(in, fam);
  ElementSet closed(in.members.size());
  for (Index i = 0; i < table.size(); ++i)
    if (table[i] == i) closed.set(i);

  if (auto v = confluence::is_closed_under_local_meet(f, closed); !v)
    return fail(name, "closed patterns are not closed under the local meet at " + in.show(v.witness->t));
  auto via_meets = confluence::closure_from_local_meet_subset(f, closed);
  auto via_least = order::closure_from_subset(f.carrier(), closed);
  if (!via_meets || !via_least) return fail(name, "closed patterns do not define a closure");
  for (Index i = 0; i < table.size(); ++i)
    if (via_meets.value()(i) != table[i] || via_least.value()(i) != table[i])
      return fail(name, "closure rebuilt from closed patterns differs at " + in.show(i));
  if (!confluence::is_confluence(f.carrier().subposet(closed)))
    return fail(name, "closed patterns do not form a confluence");

  for (int round = 0; round < 8; ++round) {
    ElementSet c = random_element_set(in.rng, in.members.size());
    // Half the rounds force every local top in, so the pairwise condition decides.
    if (round % 2 == 0)
      for (Index i = 0; i < in.members.size(); ++i) c.set(f.local_top(i));
    const bool meet_closed = confluence::is_closed_under_local_meet(f, c).holds();
    const bool closure_subset = order::closure_from_subset(f.carrier(), c).ok();
    if (meet_closed != closure_subset)
      return fail(name, "random subset: closed under local meet=" + std::to_string(meet_closed) +
                            " but closure subset=" + std::to_string(closure_subset));
  }
  return pass(name);
}

// p_t(x) = p_q(x) for q ⊆ t ⊆ x, and both match the greatest member in [t, x].
CheckResult check_projections(Instance& in, const Family& fam) {
  const std::string name = "projection-coherence";
  const auto& m = in.members;
  const std::size_t n_items = in.names.size();
  std::size_t pairs = 0;
  for (Index ti = 0; ti < m.size() && pairs < 2000; ++ti) {
    const Pattern& t = m[ti];
    std::vector<Pattern> targets{Pattern::full(n_items), in.ctx.intent(in.ctx.ext(t)) | t};
    Pattern noise(n_items);
    for (std::size_t i = 0; i < n_items; ++i)
      if (in.rng() & 1U) noise.set(i);
    targets.push_back(t | noise);

    for (const auto& x : targets) {
      auto expected = plain_project(m, t, x);
      if (!expected) return fail(name, "no greatest member between " + in.show(t) + " and " + in.show(x));
      if (fam.project(t, x) != *expected || fam.project(fam.anchor_minimal(t), x) != *expected)
        return fail(name, "projection of " + in.show(x) + " from " + in.show(t) + " is not " + in.show(*expected));
      for (Index qi = 0; qi < m.size(); ++qi) {
        if (qi == ti || !m[qi].is_subset_of(t)) continue;
        ++pairs;
        if (fam.project(m[qi], x) != *expected)
          return fail(name, "p_" + in.show(m[qi]) + "(" + in.show(x) + ") differs from p_" + in.show(t));
      }
    }
  }
  return pass(name, std::to_string(pairs) + " pairs");
}

CheckResult check_closure_laws(const Instance& in, const Family& fam) {
  const std::string name = "closure-laws";
  if (!in.poset) return skip(name, "family too large for an explicit poset");
  order::OperatorMap f(*in.poset, closure_table(in, fam));
  auto cls = order::classify_operator(f);
  if (!cls.is_closure()) {
    std::string detail = "abstract support closure is not a closure";
    if (cls.witness) detail += " (fails at " + in.show(cls.witness->x) + ")";
    return fail(name, detail);
  }
  std::vector<Index> plain;
  for (const auto& t : in.members) plain.push_back(in.index.at(support_closure(in.ctx, fam, t)));
  if (!order::classify_operator(order::OperatorMap(*in.poset, plain)).is_closure())
    return fail(name, "support closure is not a closure");
  return pass(name);
}

CheckResult check_extents(const Instance& in, const Family& fam) {
  const std::string name = "extent-decomposition";
  for (const auto& mp : fam.minimals())
    if (in.ctx.ext(mp).count() > 16) return skip(name, "support of a minimal exceeds 16 objects");
  auto v = verify_extent_decomposition(in.ctx, fam, in.members);
  if (v) return pass(name);
  const auto& d = *v.witness;
  const auto& objs = in.ctx.object_names();
  std::string detail = "extent " + braced(d.only_in_image.empty() ? d.only_in_closures.front() : d.only_in_image.front(), objs) +
                       (d.only_in_image.empty() ? " arises only from closures" : " arises only as a support");
  return fail(name, detail);
}

CheckResult check_existence(const Instance& in, const Family& fam) {
  const std::string name = "closure-existence";
  auto report = support_closure_existence_check(in.members);
  if (!report.exists) return fail(name, "existence check rejects a valid family");
  for (const auto& t : in.members) {
    auto o = oracle_closure(in.ctx, in.members, in.abs, t);
    if (!o) return fail(name, "no unique maximum above " + in.show(t));
    auto c = abstract_support_closure(in.ctx, fam, in.abs, t);
    if (o.value() != c)
      return fail(name, "closure of " + in.show(t) + " is " + in.show(c) + ", oracle says " + in.show(o.value()));
  }
  return pass(name);
}

CheckResult check_miner(const Instance& in, const Family& fam, const std::vector<Pattern>& closed) {
  const std::string name = "miner-agreement";
  if (!fam.strongly_accessible()) return skip(name, "family is not strongly accessible");
  for (auto policy : {ElmPolicy::always, ElmPolicy::when_expanded}) {
    MinerConfig cfg;
    cfg.family = &fam;
    cfg.context = &in.ctx;
    cfg.abstraction = in.abs;
    cfg.elm_policy = policy;
    std::vector<Pattern> mined;
    for (const auto& ev : mine_all(cfg)) {
      if (ev.closed.extent != plain_abstract(in.abs, plain_ext(in.ctx, ev.closed.intent)))
        return fail(name, "wrong extent for " + in.show(ev.closed.intent));
      mined.push_back(ev.closed.intent);
    }
    std::sort(mined.begin(), mined.end(), LexLess{});
    if (auto dup = std::adjacent_find(mined.begin(), mined.end()); dup != mined.end())
      return fail(name, "duplicate output " + in.show(*dup));
    if (mined != closed) {
      for (const auto& c : closed)
        if (!std::binary_search(mined.begin(), mined.end(), c, LexLess{}))
          return fail(name, "miner misses " + in.show(c));
      for (const auto& c : mined)
        if (!std::binary_search(closed.begin(), closed.end(), c, LexLess{}))
          return fail(name, "miner outputs non-closed " + in.show(c));
    }
  }
  return pass(name, std::to_string(closed.size()) + " closed patterns");
}

void finish(OracleReport& report) {
  for (const auto& c : report.checks)
    if (c.status == Status::fail) {
      report.first_counterexample = c.name + ": " + c.detail;
      break;
    }
}

}  // namespace

std::vector<Pattern> materialize(const Family& fam, std::size_t budget) {
  if (const auto* members = fam.explicit_members()) {
    if (members->size() > budget) throw BudgetExceeded(budget, members->size());
    return *members;
  }
  return enumerate_members(fam, budget);
}

Outcome<Pattern, NonUniqueMaximum> oracle_closure(const ObjectContext& ctx, std::span<const Pattern> members,
                                                  const ExtensionalAbstraction& abs, const Pattern& t) {
  if (std::find(members.begin(), members.end(), t) == members.end())
    throw std::invalid_argument("oracle closure: pattern is not a member");
  const Extent target = plain_abstract(abs, plain_ext(ctx, t));
  std::vector<Pattern> same;
  for (const auto& q : members)
    if (t.is_subset_of(q) && plain_abstract(abs, plain_ext(ctx, q)) == target) same.push_back(q);
  auto top = maximal_elements(same);
  if (top.size() == 1) return top.front();
  return NonUniqueMaximum{t, std::move(top)};
}

bool OracleReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

const CheckResult* OracleReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

OracleReport verify_all(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs,
                        const OracleOptions& opts) {
  if (fam.universe_size() != ctx.universe_size())
    throw ValidationError("family and context use different item universes");
  Instance in = make_instance(ctx, abs, materialize(fam, opts.budget), opts);

  OracleReport report;
  report.family_size = in.members.size();
  for (const auto& t : in.members) {
    auto o = oracle_closure(ctx, in.members, abs, t);
    if (o && o.value() == t) {
      report.closed.push_back(t);
      Concept c;
      c.intent = t;
      c.extent = plain_abstract(abs, plain_ext(ctx, t));
      c.empty_support = c.extent.none();
      c.anchor = fam.anchor_minimal(t);
      report.concepts.push_back(std::move(c));
    }
  }

  report.checks.push_back(check_subconfluence_views(in));
  report.checks.push_back(check_local_lattices(in, fam));
  report.checks.push_back(check_local_meets(in, fam));
  report.checks.push_back(check_projections(in, fam));
  report.checks.push_back(check_closure_laws(in, fam));
  report.checks.push_back(check_extents(in, fam));
  report.checks.push_back(check_existence(in, fam));
  report.checks.push_back(check_miner(in, fam, report.closed));
  finish(report);
  return report;
}

OracleReport verify_candidate(const ObjectContext& ctx, std::vector<Pattern> candidate,
                              const ExtensionalAbstraction& abs, const OracleOptions& opts) {
  std::sort(candidate.begin(), candidate.end(), LexLess{});
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
  if (ExplicitFamily::check_subconfluence(candidate)) {
    ExplicitFamily fam(std::move(candidate), {ctx.item_names().begin(), ctx.item_names().end()});
    return verify_all(ctx, fam, abs, opts);
  }

  Instance in = make_instance(ctx, abs, candidate, opts);
  OracleReport report;
  report.family_size = in.members.size();
  report.checks.push_back(check_subconfluence_views(in));

  auto existence = support_closure_existence_check(in.members);
  if (existence.exists) {
    report.checks.push_back(fail("closure-existence", "existence check accepts a non-subconfluence"));
  } else {
    // Confirm on the one-object context that the definition has no answer.
    const auto& w = *existence.witness;
    ObjectContext single({"o1"}, {*existence.counterexample_object},
                         {ctx.item_names().begin(), ctx.item_names().end()});
    auto o = oracle_closure(single, in.members, ExtensionalAbstraction::identity(), w.t);
    std::string maxima;
    for (const auto& q : existence.competing_maxima) maxima += (maxima.empty() ? "" : ", ") + in.show(q);
    if (o || o.witness().maxima != existence.competing_maxima)
      report.checks.push_back(fail("closure-existence", "oracle disagrees on the competing maxima"));
    else
      report.checks.push_back(pass("closure-existence", "no support closure: for d(o1)=" +
                                                            in.show(*existence.counterexample_object) + " the members above " +
                                                            in.show(w.t) + " have maxima " + maxima));
  }
  for (const char* n : {"local-lattice-closures", "local-meet-closures", "projection-coherence", "closure-laws",
                        "extent-decomposition", "miner-agreement"})
    report.checks.push_back(skip(n, "not a subconfluence"));
  finish(report);
  return report;
}

std::string to_json(const OracleReport& report, std::span<const std::string> item_names,
                    std::span<const std::string> object_names) {
  using nlohmann::json;
  auto names = [](const Bitset& b, std::span<const std::string> table) {
    json arr = json::array();
    b.for_each([&](std::size_t i) { arr.push_back(table[i]); });
    return arr;
  };
  json j;
  j["v"] = 1;
  j["family_size"] = report.family_size;
  j["passed"] = report.all_passed();
  json concepts = json::array();
  for (const auto& c : report.concepts)
    concepts.push_back({{"intent", names(c.intent, item_names)},
                        {"extent", names(c.extent, object_names)},
                        {"anchor", names(c.anchor, item_names)},
                        {"empty_support", c.empty_support}});
  j["concepts"] = concepts;
  json checks = json::array();
  for (const auto& c : report.checks) {
    const char* status = c.status == Status::pass ? "pass" : c.status == Status::fail ? "fail" : "skipped";
    checks.push_back({{"name", c.name}, {"status", status}, {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["first_counterexample"] = report.first_counterexample ? json(*report.first_counterexample) : json(nullptr);
  return j.dump();
}

}  // namespace cfl::oracle
