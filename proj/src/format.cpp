#include "cfl/format.hpp"

#include <json.hpp>

namespace cfl::format {

namespace {

nlohmann::json name_array(const Bitset& b, std::span<const std::string> names) {
  auto arr = nlohmann::json::array();
  b.for_each([&](std::size_t i) { arr.push_back(names[i]); });
  return arr;
}

const char* kind_name(Implication::Kind k) { return k == Implication::Kind::internal ? "internal" : "external"; }

}  // namespace

std::string pattern(const Bitset& b, std::span<const std::string> names) {
  return b.none() ? "{}" : to_string(b, names);
}

std::string concept_tsv(const Concept& c, std::span<const std::string> items, std::span<const std::string> objects) {
  return pattern(c.intent, items) + '\t' + pattern(c.extent, objects) + '\t' + pattern(c.anchor, items) + '\t' +
         (c.empty_support ? '1' : '0');
}

std::string concept_json(const Concept& c, std::span<const std::string> items, std::span<const std::string> objects) {
  nlohmann::json j;
  j["v"] = kSchemaVersion;
  j["intent"] = name_array(c.intent, items);
  j["extent"] = name_array(c.extent, objects);
  j["anchor"] = name_array(c.anchor, items);
  j["empty_support"] = c.empty_support;
  return j.dump();
}

std::string implication_text(const Implication& imp, std::span<const std::string> items) {
  return pattern(imp.premise, items) + " -> " + pattern(imp.conclusion, items) + ' ' + kind_name(imp.kind);
}

std::string implication_json(const Implication& imp, std::span<const std::string> items) {
  nlohmann::json j;
  j["v"] = kSchemaVersion;
  j["premise"] = name_array(imp.premise, items);
  j["conclusion"] = name_array(imp.conclusion, items);
  j["kind"] = kind_name(imp.kind);
  return j.dump();
}

std::string trace_line(const TraceEvent& ev, std::span<const std::string> items) {
  auto braced_opt = [&](const std::optional<Pattern>& p) { return braced(*p, items); };
  const std::string closed = braced(ev.closed, items);
  switch (ev.kind) {
    case TraceEvent::Kind::root:
      return "root " + braced_opt(ev.pattern) + " closes-to " + closed;
    case TraceEvent::Kind::skip_minimal:
      return "skip-minimal " + braced_opt(ev.pattern) + " closes-to " + closed + " blocker=" + braced_opt(ev.blocker);
    case TraceEvent::Kind::emit:
      return "emit " + closed + (ev.parent ? " parent=" + braced_opt(ev.parent) : std::string());
    case TraceEvent::Kind::prune_elm:
      return "prune-elm " + closed + " parent=" + braced_opt(ev.parent) + " item=" + items[*ev.item] +
             " blocker=" + braced_opt(ev.blocker);
    case TraceEvent::Kind::prune_el:
      return "prune-el " + closed + " parent=" + braced_opt(ev.parent) + " item=" + items[*ev.item] +
             " excluded=" + items[*ev.blocked_item];
  }
  return {};
}

}  // namespace cfl::format
