#pragma once

// Brute-force ground truth for desk-scale instances.
//
// Closures here are computed from their definition (the greatest family
// member above t with the same abstract support), by scanning the
// materialized family and the raw object descriptions. Nothing below shares
// code with support_closure or the miner beyond Bitset primitives.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfl/galois.hpp"
#include "cfl/setsys.hpp"

namespace cfl::oracle {

inline constexpr std::size_t kDefaultBudget = 4096;

// Exact member list (lex order). Throws BudgetExceeded past `budget` members.
std::vector<Pattern> materialize(const Family& fam, std::size_t budget = kDefaultBudget);

// Several maximal members above t share its abstract support.
struct NonUniqueMaximum {
  Pattern t;
  std::vector<Pattern> maxima;
};

Outcome<Pattern, NonUniqueMaximum> oracle_closure(const ObjectContext& ctx, std::span<const Pattern> members,
                                                  const ExtensionalAbstraction& abs, const Pattern& t);

enum class Status { pass, fail, skipped };

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

struct OracleReport {
  std::size_t family_size = 0;
  std::vector<Pattern> closed;  // oracle fixpoints, lex order
  std::vector<Concept> concepts;
  std::vector<CheckResult> checks;
  std::optional<std::string> first_counterexample;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

struct OracleOptions {
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultBudget;
  // Checks that build explicit posets or lattices over F are skipped above this size.
  std::size_t explicit_order_limit = 96;
};

// Runs every structural check on one instance: subconfluence three-way
// equivalence, closure subsets of the local lattices, local-meet closure
// subsets, projection coherence, closure laws, extent decomposition,
// closure existence and miner output against the oracle.
OracleReport verify_all(const ObjectContext& ctx, const Family& fam, const ExtensionalAbstraction& abs,
                        const OracleOptions& opts = {});

// Same, for a raw candidate list that may fail to be a subconfluence; in that
// case the report carries the witness and the non-unique maximum.
OracleReport verify_candidate(const ObjectContext& ctx, std::vector<Pattern> candidate,
                              const ExtensionalAbstraction& abs, const OracleOptions& opts = {});

std::string to_json(const OracleReport& report, std::span<const std::string> item_names,
                    std::span<const std::string> object_names);

}  // namespace cfl::oracle
