#pragma once

// Line-oriented input formats. '#' starts a comment everywhere; blank lines
// are ignored. Malformed lines raise ParseError with the line number; names
// that do not resolve against the item or object universe raise
// ValidationError.
//
//   graph        v <name>                      declares a vertex
//                e <name1> <name2> [label]     declares an edge
//   family       <item> <item> ...             one pattern per line; {} is the empty pattern
//   context      <object>: <item> <item> ...   one object per line
//   abstraction  <object> <object> ...         one generator extent per line

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cfl/galois.hpp"
#include "cfl/setsys.hpp"

namespace cfl::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

// Names mapped to dense indices in first-seen order.
class NameTable {
 public:
  NameTable() = default;
  explicit NameTable(std::span<const std::string> names);

  std::size_t intern(const std::string& name);
  std::optional<std::size_t> find(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using NameList = std::vector<std::string>;

struct ContextRows {
  std::vector<std::string> objects;
  std::vector<NameList> items;
};

GraphSpec parse_graph(std::string_view text);
std::vector<NameList> parse_family(std::string_view text);
ContextRows parse_context(std::string_view text);
std::vector<NameList> parse_abstraction(std::string_view text);

// Unknown names throw ValidationError.
Pattern resolve(const NameList& names, const NameTable& items);

ObjectContext build_context(const ContextRows& rows, const NameTable& items);
ExtensionalAbstraction build_abstraction(const std::vector<NameList>& generators, const ObjectContext& ctx);

}  // namespace cfl::io
