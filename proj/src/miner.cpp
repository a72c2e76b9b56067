#include "cfl/miner.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfl {

namespace {

struct Closed {
  Pattern intent;
  Extent support;  // p_A(ext(argument)), shared by the closure
};

Closed close(const MinerConfig& cfg, const Pattern& p) {
  const auto& fam = *cfg.family;
  const auto& ctx = *cfg.context;
  if (!fam.contains(p)) throw std::invalid_argument("clo: pattern is not a family member");
  Extent support = cfg.abstraction.apply(ctx.ext(p));
  Pattern q = ctx.intent(support);
  return {fam.project(fam.anchor_minimal(p), q), std::move(support)};
}

const Pattern* first_contained(const Pattern& p, std::span<const Pattern> elm) {
  for (const auto& m : elm)
    if (m.is_subset_of(p)) return &m;
  return nullptr;
}

class Enumerator {
 public:
  Enumerator(const MinerConfig& cfg, const std::function<void(const MineEvent&)>& sink,
             const std::function<void(const TraceEvent&)>& trace)
      : cfg_(cfg), sink_(sink), trace_(trace) {}

  MineStats run() {
    const auto& minimals = cfg_.family->minimals();
    for (const auto& m : minimals) {
      Closed root = closure(m);
      const Pattern* blocker = first_contained(root.intent, elm_);
      if (!blocker) {
        note({TraceEvent::Kind::root, root.intent, m, {}, {}, {}, {}});
        enum_clo(root, std::nullopt, Pattern(cfg_.family->universe_size()));
      } else {
        note({TraceEvent::Kind::skip_minimal, root.intent, m, {}, {}, *blocker, {}});
      }
      if (!blocker || cfg_.elm_policy == ElmPolicy::always) elm_.push_back(m);
    }
    stats_.elm_size = elm_.size();
    return stats_;
  }

 private:
  Closed closure(const Pattern& p) {
    ++stats_.closures;
    return close(cfg_, p);
  }

  void note(TraceEvent ev) {
    if (trace_) trace_(ev);
  }

  // `excluded` is this activation's EL: a copy extended across sibling branches.
  void enum_clo(const Closed& node, const std::optional<Pattern>& parent, Pattern excluded) {
    ++stats_.emitted;
    note({TraceEvent::Kind::emit, node.intent, {}, parent, {}, {}, {}});
    if (cfg_.emit_empty_support || node.support.any()) {
      MineEvent ev;
      ev.closed.intent = node.intent;
      ev.closed.extent = node.support;
      ev.closed.empty_support = node.support.none();
      ev.closed.anchor = cfg_.family->anchor_minimal(node.intent);
      ev.parent = parent;
      sink_(ev);
    }
    // An empty abstract support closes to ⊤_m, which has no augmentation.
    if (node.support.none()) return;

    for (std::size_t e : cfg_.family->augmentations(node.intent)) {
      if (excluded.test(e)) continue;
      Closed child = closure(node.intent.with(e));
      if (const Pattern* blocker = first_contained(child.intent, elm_)) {
        ++stats_.pruned_elm;
        note({TraceEvent::Kind::prune_elm, child.intent, {}, node.intent, e, *blocker, {}});
        continue;
      }
      if (child.intent.intersects(excluded)) {
        ++stats_.pruned_el;
        note({TraceEvent::Kind::prune_el, child.intent, {}, node.intent, e, {}, (child.intent & excluded).first()});
        continue;
      }
      enum_clo(child, node.intent, excluded);
      excluded.set(e);
    }
  }

  const MinerConfig& cfg_;
  const std::function<void(const MineEvent&)>& sink_;
  const std::function<void(const TraceEvent&)>& trace_;
  std::vector<Pattern> elm_;
  MineStats stats_;
};

void check_config(const MinerConfig& cfg) {
  if (!cfg.family || !cfg.context) throw std::invalid_argument("miner needs a family and a context");
  if (cfg.family->universe_size() != cfg.context->universe_size())
    throw ValidationError("family and context use different item universes");
  if (!cfg.family->strongly_accessible()) throw ValidationError("the family is not strongly accessible");
}

}  // namespace

Pattern clo(const MinerConfig& cfg, const Pattern& p) { return close(cfg, p).intent; }

bool not_include_any_of(const Pattern& p, std::span<const Pattern> elm) { return first_contained(p, elm) == nullptr; }

MineStats mine(const MinerConfig& cfg, const std::function<void(const MineEvent&)>& sink,
               const std::function<void(const TraceEvent&)>& trace) {
  check_config(cfg);
  if (cfg.order == OutputOrder::traversal) return Enumerator(cfg, sink, trace).run();

  std::vector<MineEvent> buffer;
  std::function<void(const MineEvent&)> collect = [&](const MineEvent& ev) { buffer.push_back(ev); };
  MineStats stats = Enumerator(cfg, collect, trace).run();
  std::sort(buffer.begin(), buffer.end(),
            [](const MineEvent& a, const MineEvent& b) { return lex_less(a.closed.intent, b.closed.intent); });
  for (const auto& ev : buffer) sink(ev);
  return stats;
}

std::vector<MineEvent> mine_all(const MinerConfig& cfg) {
  std::vector<MineEvent> out;
  mine(cfg, [&](const MineEvent& ev) { out.push_back(ev); });
  return out;
}

}  // namespace cfl
