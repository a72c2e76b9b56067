#pragma once

// Seeded generators of desk-scale structures for property checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cfl/galois.hpp"
#include "cfl/setsys.hpp"

namespace cfl::gen {

using Rng = std::mt19937_64;

// "a", "b", ... then "i26", "i27", ...
std::vector<std::string> item_names(std::size_t n);
std::vector<std::string> object_names(std::size_t n);

// Simple undirected graph with `edges` distinct edges (capped at n(n-1)/2).
GraphSpec random_graph(Rng& rng, std::size_t vertices, std::size_t edges);

// Descriptions drawn item by item with probability `density`.
ObjectContext random_context(Rng& rng, std::size_t items, std::size_t objects, double density = 0.5,
                             std::vector<std::string> names = {});

// Random seed patterns closed under x ∪ y whenever x, y contain a common member.
std::vector<Pattern> random_subconfluence(Rng& rng, std::size_t items, std::size_t seeds);

// Arbitrary random subset of 2^S (usually not a subconfluence).
std::vector<Pattern> random_patterns(Rng& rng, std::size_t items, std::size_t count);

// Identity, a frequency threshold, or a few random generator extents.
ExtensionalAbstraction random_abstraction(Rng& rng, std::size_t objects);

// Intersection-closed family of bitmasks over `items` (≤ 6) containing the full set.
std::vector<std::uint64_t> random_closure_system(Rng& rng, std::size_t items, std::size_t seeds);

}  // namespace cfl::gen
