#pragma once

// Deterministic text renderings shared by the CLI and the golden tests.
//
// Patterns print as space-separated names ("{}" when empty). TSV concept
// lines are `intent<TAB>extent<TAB>anchor<TAB>empty-support(0|1)`. JSON lines
// carry a schema version field "v".

#include <span>
#include <string>

#include "cfl/implications.hpp"
#include "cfl/miner.hpp"

namespace cfl::format {

inline constexpr int kSchemaVersion = 1;

std::string pattern(const Bitset& b, std::span<const std::string> names);

std::string concept_tsv(const Concept& c, std::span<const std::string> items, std::span<const std::string> objects);
std::string concept_json(const Concept& c, std::span<const std::string> items, std::span<const std::string> objects);

// `premise -> conclusion internal|external`
std::string implication_text(const Implication& imp, std::span<const std::string> items);
std::string implication_json(const Implication& imp, std::span<const std::string> items);

// One line per miner step, e.g. `prune-elm {a b c d} parent={a c d} item=b blocker={a b}`.
std::string trace_line(const TraceEvent& ev, std::span<const std::string> items);

}  // namespace cfl::format
