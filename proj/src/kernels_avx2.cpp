// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>
#include <bit>

#include "cfl/kernels.hpp"

namespace cfl::kernels {
namespace {

// Lane masks for the 16 possible 4-bit row selections.
using LaneMask = std::array<long long, 4>;

const std::array<LaneMask, 16>& selection_masks() {
  static const std::array<LaneMask, 16> masks = [] {
    std::array<LaneMask, 16> m{};
    for (std::size_t s = 0; s < 16; ++s)
      for (std::size_t lane = 0; lane < 4; ++lane) m[s][lane] = -static_cast<long long>((s >> lane) & 1);
    return m;
  }();
  return masks;
}

bool row_contains(const Word* row, std::span<const Word> pattern, std::size_t row_words) {
  std::size_t k = 0;
  for (; k + 4 <= row_words; k += 4) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pattern.data() + k));
    // testc(r, p) is 1 iff (~r & p) == 0
    if (!_mm256_testc_si256(r, p)) return false;
  }
  for (; k < row_words; ++k)
    if (pattern[k] & ~row[k]) return false;
  return true;
}

void support_scan_avx2(std::span<const Word> pattern, const RowMatrix& rows, std::span<Word> out) {
  for (auto& w : out) w = 0;
  const Word* data = rows.data.data();
  std::size_t r = 0;
  if (rows.row_words == 1) {
    // Four single-word rows per vector: lane is zero iff the row contains the pattern.
    const __m256i pat = _mm256_set1_epi64x(static_cast<long long>(pattern[0]));
    const __m256i zero = _mm256_setzero_si256();
    for (; r + 4 <= rows.rows; r += 4) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + r));
      __m256i missing = _mm256_andnot_si256(v, pat);
      int bits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(missing, zero)));
      out[r / 64] |= static_cast<Word>(bits) << (r % 64);
    }
  }
  for (; r < rows.rows; ++r)
    if (row_contains(data + r * rows.row_words, pattern, rows.row_words)) out[r / 64] |= Word{1} << (r % 64);
}

void and_selected_rows_avx2(std::span<const Word> selection, const RowMatrix& rows, std::span<Word> inout) {
  const Word* data = rows.data.data();
  if (rows.row_words == 1) {
    const auto& masks = selection_masks();
    __m256i acc = _mm256_set1_epi64x(-1);
    std::size_t r = 0;
    for (; r + 4 <= rows.rows; r += 4) {
      unsigned sel = static_cast<unsigned>((selection[r / 64] >> (r % 64)) & 0xF);
      if (!sel) continue;
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + r));
      // unselected lanes become all-ones and drop out of the AND
      acc = _mm256_and_si256(acc, _mm256_or_si256(v, _mm256_xor_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks[sel].data())), _mm256_set1_epi64x(-1))));
    }
    alignas(32) std::array<Word, 4> lanes{};
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
    Word folded = lanes[0] & lanes[1] & lanes[2] & lanes[3];
    for (; r < rows.rows; ++r)
      if ((selection[r / 64] >> (r % 64)) & 1U) folded &= data[r];
    inout[0] &= folded;
    return;
  }
  for (std::size_t k = 0; k < selection.size(); ++k) {
    Word sel = selection[k];
    while (sel) {
      std::size_t r = k * 64 + static_cast<std::size_t>(std::countr_zero(sel));
      sel &= sel - 1;
      const Word* row = data + r * rows.row_words;
      std::size_t w = 0;
      for (; w + 4 <= rows.row_words; w += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inout.data() + w));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + w));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(inout.data() + w), _mm256_and_si256(a, b));
      }
      for (; w < rows.row_words; ++w) inout[w] &= row[w];
    }
  }
}

std::size_t popcount_avx2(std::span<const Word> words) {
  // Hardware popcnt per word; the AVX2 nibble-LUT method only pays off on long rows.
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(_mm_popcnt_u64(w));
  return c;
}

}  // namespace

const KernelTable& avx2_table() {
  static constexpr KernelTable table{"avx2", &support_scan_avx2, &and_selected_rows_avx2, &popcount_avx2};
  return table;
}

}  // namespace cfl::kernels
