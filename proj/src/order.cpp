#include "cfl/order.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cfl::order {

namespace {

std::vector<std::size_t> default_ids(std::size_t n, std::vector<std::size_t> ids) {
  if (ids.empty()) {
    ids.resize(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
  }
  if (ids.size() != n) throw std::invalid_argument("id table size does not match element count");
  return ids;
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::size_t n, const std::function<bool(Index, Index)>& leq,
                                       std::vector<std::size_t> ids) {
  FinitePoset p;
  p.n_ = n;
  p.row_words_ = Bitset::word_count(n);
  p.bits_.assign(n * p.row_words_, 0);
  p.ids_ = default_ids(n, std::move(ids));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (leq(x, y)) p.bits_[x * p.row_words_ + y / 64] |= std::uint64_t{1} << (y % 64);

  for (Index x = 0; x < n; ++x) {
    if (!p.leq(x, x)) throw ValidationError("order is not reflexive at element " + std::to_string(x));
    for (Index y = x + 1; y < n; ++y)
      if (p.leq(x, y) && p.leq(y, x))
        throw ValidationError("order is not antisymmetric: " + std::to_string(x) + ", " + std::to_string(y));
  }
  // Transitivity: x <= y implies up(y) ⊆ up(x).
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!p.leq(x, y)) continue;
      for (std::size_t k = 0; k < p.row_words_; ++k)
        if (p.bits_[y * p.row_words_ + k] & ~p.bits_[x * p.row_words_ + k])
          throw ValidationError("order is not transitive through " + std::to_string(x) + " <= " + std::to_string(y));
    }
  return p;
}

FinitePoset FinitePoset::from_covers(const std::vector<std::vector<Index>>& lower_covers, std::vector<std::size_t> ids) {
  const std::size_t n = lower_covers.size();
  std::vector<Bitset> down(n, Bitset(n));
  enum class Mark { fresh, active, done };
  std::vector<Mark> mark(n, Mark::fresh);

  std::function<void(Index)> visit = [&](Index x) {
    mark[x] = Mark::active;
    down[x].set(x);
    for (Index c : lower_covers[x]) {
      if (c >= n) throw ValidationError("cover index out of range at element " + std::to_string(x));
      if (mark[c] == Mark::active) throw ValidationError("cover relation has a cycle through element " + std::to_string(c));
      if (mark[c] == Mark::fresh) visit(c);
      down[x] |= down[c];
    }
    mark[x] = Mark::done;
  };
  for (Index x = 0; x < n; ++x)
    if (mark[x] == Mark::fresh) visit(x);

  return from_relation(n, [&](Index a, Index b) { return down[b].test(a); }, std::move(ids));
}

std::optional<Index> FinitePoset::index_of_id(std::size_t id) const {
  for (Index x = 0; x < n_; ++x)
    if (ids_[x] == id) return x;
  return std::nullopt;
}

ElementSet FinitePoset::up_set(Index t) const {
  ElementSet s(n_);
  auto w = s.words();
  for (std::size_t k = 0; k < row_words_; ++k) w[k] = bits_[t * row_words_ + k];
  return s;
}

ElementSet FinitePoset::down_set(Index t) const {
  ElementSet s(n_);
  for (Index x = 0; x < n_; ++x)
    if (leq(x, t)) s.set(x);
  return s;
}

ElementSet FinitePoset::minimals() const {
  ElementSet s(n_);
  for (Index x = 0; x < n_; ++x) {
    bool minimal = true;
    for (Index y = 0; y < n_ && minimal; ++y) minimal = !less(y, x);
    if (minimal) s.set(x);
  }
  return s;
}

ElementSet FinitePoset::maximals() const {
  ElementSet s(n_);
  for (Index x = 0; x < n_; ++x) {
    bool maximal = true;
    for (Index y = 0; y < n_ && maximal; ++y) maximal = !less(x, y);
    if (maximal) s.set(x);
  }
  return s;
}

std::optional<Index> FinitePoset::bottom_of(const ElementSet& s) const {
  std::optional<Index> cand;
  s.for_each([&](Index e) {
    if (!cand || leq(e, *cand)) cand = e;
  });
  if (!cand) return std::nullopt;
  bool ok = true;
  s.for_each([&](Index e) { ok = ok && leq(*cand, e); });
  return ok ? cand : std::nullopt;
}

std::optional<Index> FinitePoset::top_of(const ElementSet& s) const {
  std::optional<Index> cand;
  s.for_each([&](Index e) {
    if (!cand || leq(*cand, e)) cand = e;
  });
  if (!cand) return std::nullopt;
  bool ok = true;
  s.for_each([&](Index e) { ok = ok && leq(e, *cand); });
  return ok ? cand : std::nullopt;
}

FinitePoset FinitePoset::subposet(const ElementSet& elements) const {
  auto members = elements.indices();
  std::vector<std::size_t> sub_ids;
  sub_ids.reserve(members.size());
  for (auto m : members) sub_ids.push_back(ids_[m]);
  return from_relation(
      members.size(), [&](Index a, Index b) { return leq(members[a], members[b]); }, std::move(sub_ids));
}

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
  const std::size_t n = poset.size();
  if (n == 0) throw ValidationError("a lattice needs at least one element");
  FiniteLattice l;
  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  std::vector<ElementSet> up(n), down(n);
  for (Index x = 0; x < n; ++x) {
    up[x] = poset.up_set(x);
    down[x] = poset.down_set(x);
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y) {
      auto m = poset.top_of(down[x] & down[y]);
      auto j = poset.bottom_of(up[x] & up[y]);
      if (!m) throw ValidationError("elements " + std::to_string(x) + " and " + std::to_string(y) + " have no meet");
      if (!j) throw ValidationError("elements " + std::to_string(x) + " and " + std::to_string(y) + " have no join");
      l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
      l.join_[x * n + y] = l.join_[y * n + x] = *j;
    }
  l.top_ = *poset.top_of(poset.all());
  l.bottom_ = *poset.bottom_of(poset.all());
  l.poset_ = std::move(poset);
  return l;
}

FiniteLattice FiniteLattice::powerset(std::size_t nitems) {
  if (nitems > 12) throw std::invalid_argument("explicit powerset lattices are limited to 12 items");
  const std::size_t n = std::size_t{1} << nitems;
  FiniteLattice l;
  l.poset_ = FinitePoset::from_relation(n, [](Index a, Index b) { return (a & ~b) == 0; });
  l.meet_.resize(n * n);
  l.join_.resize(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      l.meet_[x * n + y] = x & y;
      l.join_[x * n + y] = x | y;
    }
  l.top_ = n - 1;
  l.bottom_ = 0;
  return l;
}

OperatorMap::OperatorMap(FinitePoset domain, std::vector<Index> table) : domain_(std::move(domain)), table_(std::move(table)) {
  if (table_.size() != domain_.size()) throw std::invalid_argument("operator table must be total on its domain");
  for (auto v : table_)
    if (v >= domain_.size()) throw std::invalid_argument("operator image outside its domain");
}

OperatorMap OperatorMap::identity(FinitePoset domain) {
  std::vector<Index> t(domain.size());
  std::iota(t.begin(), t.end(), Index{0});
  return OperatorMap(std::move(domain), std::move(t));
}

ElementSet OperatorMap::range() const {
  ElementSet r(domain_.size());
  for (auto v : table_) r.set(v);
  return r;
}

Classification classify_operator(const OperatorMap& m) {
  const auto& p = m.domain();
  const std::size_t n = p.size();
  Classification c;
  std::optional<LawViolation> mono, idem, ext, intens;
  for (Index x = 0; x < n && !mono; ++x)
    for (Index y = 0; y < n && !mono; ++y)
      if (p.leq(x, y) && !p.leq(m(x), m(y))) mono = LawViolation{Law::monotone, x, y};
  for (Index x = 0; x < n && !idem; ++x)
    if (m(m(x)) != m(x)) idem = LawViolation{Law::idempotent, x, std::nullopt};
  for (Index x = 0; x < n && !ext; ++x)
    if (!p.leq(x, m(x))) ext = LawViolation{Law::extensive, x, std::nullopt};
  for (Index x = 0; x < n && !intens; ++x)
    if (!p.leq(m(x), x)) intens = LawViolation{Law::intensive, x, std::nullopt};

  c.monotone = !mono;
  c.idempotent = !idem;
  c.extensive = !ext;
  c.intensive = !intens;
  const bool base = c.monotone && c.idempotent;
  if (base && c.extensive && c.intensive)
    c.kind = OperatorKind::closure_and_interior;
  else if (base && c.extensive)
    c.kind = OperatorKind::closure;
  else if (base && c.intensive)
    c.kind = OperatorKind::interior;
  else
    c.witness = mono ? mono : idem ? idem : ext;
  return c;
}

Outcome<OperatorMap, Index> closure_from_subset(const FinitePoset& p, const ElementSet& c) {
  std::vector<Index> table(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    auto b = p.bottom_of(c & p.up_set(x));
    if (!b) return x;
    table[x] = *b;
  }
  return OperatorMap(p, std::move(table));
}

Outcome<OperatorMap, Index> interior_from_subset(const FinitePoset& p, const ElementSet& a) {
  std::vector<Index> table(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    auto t = p.top_of(a & p.down_set(x));
    if (!t) return x;
    table[x] = *t;
  }
  return OperatorMap(p, std::move(table));
}

namespace {

template <class Op>
Verdict<BinaryWitness> is_closed_under(const ElementSet& c, Index neutral, Op op) {
  if (!c.test(neutral)) return Verdict<BinaryWitness>::fail({});
  auto members = c.indices();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!c.test(op(members[i], members[j])))
        return Verdict<BinaryWitness>::fail({std::make_pair(members[i], members[j])});
  return Verdict<BinaryWitness>::pass();
}

}  // namespace

Verdict<BinaryWitness> is_meet_closed(const FiniteLattice& l, const ElementSet& c) {
  return is_closed_under(c, l.top(), [&](Index x, Index y) { return l.meet(x, y); });
}

Verdict<BinaryWitness> is_join_closed(const FiniteLattice& l, const ElementSet& c) {
  return is_closed_under(c, l.bottom(), [&](Index x, Index y) { return l.join(x, y); });
}

OperatorMap compose_interior_closure(const OperatorMap& p, const OperatorMap& f) {
  if (p.domain().size() != f.domain().size())
    throw std::invalid_argument("interior and closure must share a domain");
  if (!classify_operator(p).is_interior()) throw std::invalid_argument("first operand is not an interior operator");
  if (!classify_operator(f).is_closure()) throw std::invalid_argument("second operand is not a closure operator");

  const auto range = p.range();
  const auto members = range.indices();
  std::vector<Index> position(p.domain().size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = i;

  std::vector<Index> table(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) table[i] = position[p(f(members[i]))];
  return OperatorMap(p.domain().subposet(range), std::move(table));
}

std::optional<Index> NamedPoset::find(std::string_view name) const {
  for (Index i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

NamedPoset parse_poset_text(std::string_view text) {
  NamedPoset out;
  std::unordered_map<std::string, Index> index;
  std::vector<std::vector<Index>> covers;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, out.names.size());
    if (inserted) {
      out.names.push_back(name);
      covers.emplace_back();
    }
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(lineno, "expected `id: covers ...`");
    std::istringstream head(line.substr(0, colon));
    std::string id, extra;
    if (!(head >> id) || (head >> extra)) throw ParseError(lineno, "expected a single element id before ':'");
    Index x = intern(id);
    std::istringstream rest(line.substr(colon + 1));
    std::string tok;
    bool first = true;
    while (rest >> tok) {
      if (first && tok == "covers") {
        first = false;
        continue;
      }
      first = false;
      Index c = intern(tok);
      covers[x].push_back(c);
    }
  }
  out.poset = FinitePoset::from_covers(covers);
  return out;
}

}  // namespace cfl::order
