#pragma once

// Bit-matrix kernels behind support counting and intent computation.
//
// Every kernel has a scalar reference implementation; SIMD variants are
// selected once at runtime from the CPU features and must agree bit for bit
// with the reference. Setting CFL_KERNELS=scalar in the environment pins the
// reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cfl::kernels {

using Word = std::uint64_t;

// Row-major bit matrix: `rows` rows of `row_words` words each.
struct RowMatrix {
  std::span<const Word> data;
  std::size_t rows = 0;
  std::size_t row_words = 0;

  std::span<const Word> row(std::size_t r) const { return data.subspan(r * row_words, row_words); }
};

struct KernelTable {
  std::string_view name;
  // out[r] = 1 iff pattern ⊆ row r. `out` holds word_count(rows) words and is overwritten.
  void (*support_scan)(std::span<const Word> pattern, const RowMatrix& rows, std::span<Word> out);
  // inout &= row r for every r selected in `selection`.
  void (*and_selected_rows)(std::span<const Word> selection, const RowMatrix& rows, std::span<Word> inout);
  std::size_t (*popcount)(std::span<const Word> words);
};

const KernelTable& scalar();
// nullptr when the binary or the CPU lacks AVX2.
const KernelTable* avx2();
// The table used by the library: the widest supported variant unless CFL_KERNELS=scalar.
const KernelTable& active();

}  // namespace cfl::kernels
