#include <stdexcept>

#include "cfl/bitset.hpp"

namespace cfl {

std::string to_string(const Bitset& b, std::span<const std::string> names, std::string_view sep) {
  std::string out;
  bool first = true;
  b.for_each([&](std::size_t i) {
    if (!first) out += sep;
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  });
  return out;
}

std::string braced(const Bitset& b, std::span<const std::string> names) {
  return "{" + to_string(b, names) + "}";
}

std::string letters(const Bitset& b) {
  std::string out;
  b.for_each([&](std::size_t i) { out += i < 26 ? static_cast<char>('a' + i) : '?'; });
  return out;
}

Bitset from_letters(std::size_t nbits, std::string_view word) {
  Bitset b(nbits);
  for (char ch : word) {
    if (ch < 'a' || static_cast<std::size_t>(ch - 'a') >= nbits)
      throw std::invalid_argument("letter outside universe: " + std::string(1, ch));
    b.set(static_cast<std::size_t>(ch - 'a'));
  }
  return b;
}

}  // namespace cfl
