#pragma once

// Depth-first listing of the (abstract) support-closed patterns of a strongly
// accessible subconfluence F ⊆ 2^S.
//
// The outer loop walks min(F) in lex order. For each minimal m whose closure
// contains no earlier minimal, the closed sets above it are listed with the
// divide-and-conquer scheme for strongly accessible set systems: augment a
// closed pattern P by one item e with P ∪ {e} ∈ F, close, and descend unless
// the result contains an excluded minimal (ELM) or an excluded item (EL).
// Each closed pattern is emitted exactly once.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cfl/galois.hpp"

namespace cfl {

enum class OutputOrder { traversal, sorted };

// When a minimal whose closure was pruned still enters ELM. Both placements
// list the same patterns; `always` keeps ELM equal to the processed prefix
// of min(F).
enum class ElmPolicy { always, when_expanded };

struct MinerConfig {
  const Family* family = nullptr;
  const ObjectContext* context = nullptr;
  ExtensionalAbstraction abstraction = ExtensionalAbstraction::identity();
  bool emit_empty_support = true;
  OutputOrder order = OutputOrder::traversal;
  ElmPolicy elm_policy = ElmPolicy::always;
};

struct MineEvent {
  Concept closed;
  std::optional<Pattern> parent;  // enumeration-tree parent intent; none for roots
};

struct TraceEvent {
  enum class Kind {
    root,          // minimal `pattern` closes to `closed`, which is expanded
    skip_minimal,  // minimal `pattern` closes to `closed`, which contains `blocker` ∈ ELM
    emit,          // `closed` is output (child of `parent`, if any)
    prune_elm,     // parent ∪ {item} closes to `closed`, which contains `blocker` ∈ ELM
    prune_el,      // parent ∪ {item} closes to `closed`, which meets EL at `blocked_item`
  };
  Kind kind;
  Pattern closed;
  std::optional<Pattern> pattern;
  std::optional<Pattern> parent;
  std::optional<std::size_t> item;
  std::optional<Pattern> blocker;
  std::optional<std::size_t> blocked_item;
};

struct MineStats {
  std::size_t emitted = 0;
  std::size_t closures = 0;
  std::size_t pruned_elm = 0;
  std::size_t pruned_el = 0;
  std::size_t elm_size = 0;  // minimals in ELM when the run ends
};

// Closure of p in F: Q = ∩ d(o) over p_A(ext(p)) (S when empty), then p_m(Q)
// for the lex-smallest minimal m ⊆ p. Throws std::invalid_argument if p ∉ F.
Pattern clo(const MinerConfig& cfg, const Pattern& p);

// True iff no member of `elm` is contained in p.
bool not_include_any_of(const Pattern& p, std::span<const Pattern> elm);

// Streams every closed pattern to `sink`. Throws ValidationError up front for
// explicit families that are not strongly accessible.
MineStats mine(const MinerConfig& cfg, const std::function<void(const MineEvent&)>& sink,
               const std::function<void(const TraceEvent&)>& trace = {});

std::vector<MineEvent> mine_all(const MinerConfig& cfg);

}  // namespace cfl
