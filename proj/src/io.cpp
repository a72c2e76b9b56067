#include "cfl/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace cfl::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Calls fn(line_number, content) for each non-blank line, comments stripped.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) fn(lineno, line);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NameTable::NameTable(std::span<const std::string> names) {
  for (const auto& n : names) intern(n);
}

std::size_t NameTable::intern(const std::string& name) {
  auto [it, fresh] = index_.emplace(name, names_.size());
  if (fresh) names_.push_back(name);
  return it->second;
}

std::optional<std::size_t> NameTable::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GraphSpec parse_graph(std::string_view text) {
  GraphSpec g;
  NameTable vertices;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> edges;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto w = words(line);
    if (w[0] == "v") {
      if (w.size() != 2) throw ParseError(lineno, "expected `v <name>`");
      if (vertices.find(w[1])) throw ParseError(lineno, "duplicate vertex " + w[1]);
      vertices.intern(w[1]);
    } else if (w[0] == "e") {
      if (w.size() < 3 || w.size() > 4) throw ParseError(lineno, "expected `e <name1> <name2> [label]`");
      edges.emplace_back(lineno, std::move(w));
    } else {
      throw ParseError(lineno, "unknown record `" + w[0] + "`");
    }
  });
  g.vertices = vertices.names();
  std::unordered_set<std::string> labels;
  for (auto& [lineno, w] : edges) {
    auto u = vertices.find(w[1]), v = vertices.find(w[2]);
    if (!u || !v) throw ParseError(lineno, "edge names an undeclared vertex");
    std::string label = w.size() == 4 ? w[3] : w[1] + "-" + w[2];
    if (!labels.insert(label).second) throw ParseError(lineno, "duplicate edge label " + label);
    g.edges.push_back({*u, *v, label});
  }
  g.validate();
  return g;
}

std::vector<NameList> parse_family(std::string_view text) {
  std::vector<NameList> out;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (line == "{}") {
      out.emplace_back();
      return;
    }
    auto w = words(line);
    for (const auto& name : w)
      if (name.find_first_of("{}:") != std::string::npos) throw ParseError(lineno, "bad item name `" + name + "`");
    out.push_back(std::move(w));
  });
  return out;
}

ContextRows parse_context(std::string_view text) {
  ContextRows rows;
  std::unordered_set<std::string> seen;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected `<object>: <items>`");
    std::string name(trim(line.substr(0, colon)));
    if (name.empty() || words(name).size() != 1) throw ParseError(lineno, "bad object name");
    if (!seen.insert(name).second) throw ParseError(lineno, "duplicate object " + name);
    rows.objects.push_back(std::move(name));
    rows.items.push_back(words(line.substr(colon + 1)));
  });
  return rows;
}

std::vector<NameList> parse_abstraction(std::string_view text) {
  std::vector<NameList> out;
  for_each_line(text, [&](std::size_t, std::string_view line) { out.push_back(words(line)); });
  return out;
}

Pattern resolve(const NameList& names, const NameTable& items) {
  Pattern p(items.size());
  for (const auto& n : names) {
    auto i = items.find(n);
    if (!i) throw ValidationError("unknown item " + n);
    p.set(*i);
  }
  return p;
}

ObjectContext build_context(const ContextRows& rows, const NameTable& items) {
  std::vector<Pattern> descriptions;
  for (const auto& r : rows.items) descriptions.push_back(resolve(r, items));
  return ObjectContext(rows.objects, std::move(descriptions), items.names());
}

ExtensionalAbstraction build_abstraction(const std::vector<NameList>& generators, const ObjectContext& ctx) {
  NameTable objects(ctx.object_names());
  std::vector<Extent> gens;
  for (const auto& g : generators) {
    Extent e(ctx.object_count());
    for (const auto& n : g) {
      auto o = objects.find(n);
      if (!o) throw ValidationError("unknown object " + n);
      e.set(*o);
    }
    gens.push_back(std::move(e));
  }
  return ExtensionalAbstraction::generated_by(std::move(gens));
}

}  // namespace cfl::io
