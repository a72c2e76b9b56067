#include "cfl/random_instances.hpp"

#include <algorithm>
#include <unordered_set>

namespace cfl::gen {

namespace {

std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Pattern random_subset(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  Pattern p(n);
  for (std::size_t i = 0; i < n; ++i)
    if (coin(rng)) p.set(i);
  return p;
}

}  // namespace

std::vector<std::string> item_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "i" + std::to_string(i));
  return out;
}

std::vector<std::string> object_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("o" + std::to_string(i + 1));
  return out;
}

GraphSpec random_graph(Rng& rng, std::size_t vertices, std::size_t edges) {
  GraphSpec g;
  g.vertices = item_names(vertices);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < vertices; ++u)
    for (std::size_t v = u + 1; v < vertices; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(edges, pairs.size()));
  for (auto [u, v] : pairs) g.edges.push_back({u, v, g.vertices[u] + "-" + g.vertices[v]});
  return g;
}

ObjectContext random_context(Rng& rng, std::size_t items, std::size_t objects, double density,
                             std::vector<std::string> names) {
  if (names.empty()) names = item_names(items);
  std::vector<Pattern> rows;
  for (std::size_t o = 0; o < objects; ++o) rows.push_back(random_subset(rng, items, density));
  return ObjectContext(object_names(objects), std::move(rows), std::move(names));
}

std::vector<Pattern> random_subconfluence(Rng& rng, std::size_t items, std::size_t seeds) {
  std::vector<Pattern> fam;
  std::unordered_set<Pattern, BitsetHash> seen;
  auto add = [&](Pattern p) {
    if (seen.insert(p).second) fam.push_back(std::move(p));
  };
  for (std::size_t k = 0; k < seeds; ++k) add(random_subset(rng, items, 0.35));

  // Union-close pairs that share a lower bound in the family, to a fixpoint.
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = fam.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Pattern meet = fam[i] & fam[j];
        bool shared = std::any_of(fam.begin(), fam.begin() + static_cast<std::ptrdiff_t>(n),
                                  [&](const Pattern& t) { return t.is_subset_of(meet); });
        Pattern u = fam[i] | fam[j];
        if (shared && !seen.count(u)) {
          add(std::move(u));
          grew = true;
        }
      }
  }
  std::sort(fam.begin(), fam.end(), LexLess{});
  return fam;
}

std::vector<Pattern> random_patterns(Rng& rng, std::size_t items, std::size_t count) {
  std::vector<Pattern> out;
  std::unordered_set<Pattern, BitsetHash> seen;
  for (std::size_t k = 0; k < count; ++k) {
    Pattern p = random_subset(rng, items, 0.4);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

ExtensionalAbstraction random_abstraction(Rng& rng, std::size_t objects) {
  switch (below(rng, 3)) {
    case 0:
      return ExtensionalAbstraction::identity();
    case 1:
      return ExtensionalAbstraction::frequency(objects ? below(rng, objects + 1) : 0);
    default: {
      std::vector<Extent> gens;
      const std::size_t k = 1 + below(rng, 4);
      for (std::size_t i = 0; i < k; ++i) gens.push_back(random_subset(rng, objects, 0.3));
      return ExtensionalAbstraction::generated_by(std::move(gens));
    }
  }
}

std::vector<std::uint64_t> random_closure_system(Rng& rng, std::size_t items, std::size_t seeds) {
  const std::uint64_t full = (std::uint64_t{1} << items) - 1;
  std::vector<std::uint64_t> sys{full};
  std::uniform_int_distribution<std::uint64_t> pick(0, full);
  for (std::size_t k = 0; k < seeds; ++k) sys.push_back(pick(rng));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = sys.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::uint64_t m = sys[i] & sys[j];
        if (std::find(sys.begin(), sys.end(), m) == sys.end()) {
          sys.push_back(m);
          grew = true;
        }
      }
  }
  std::sort(sys.begin(), sys.end());
  sys.erase(std::unique(sys.begin(), sys.end()), sys.end());
  return sys;
}

}  // namespace cfl::gen
