#include <bit>

#include "cfl/kernels.hpp"

namespace cfl::kernels {
namespace {

void support_scan_scalar(std::span<const Word> pattern, const RowMatrix& rows, std::span<Word> out) {
  for (auto& w : out) w = 0;
  for (std::size_t r = 0; r < rows.rows; ++r) {
    auto row = rows.row(r);
    bool sub = true;
    for (std::size_t k = 0; k < rows.row_words && sub; ++k) sub = (pattern[k] & ~row[k]) == 0;
    if (sub) out[r / 64] |= Word{1} << (r % 64);
  }
}

void and_selected_rows_scalar(std::span<const Word> selection, const RowMatrix& rows, std::span<Word> inout) {
  for (std::size_t k = 0; k < selection.size(); ++k) {
    Word sel = selection[k];
    while (sel) {
      std::size_t r = k * 64 + static_cast<std::size_t>(std::countr_zero(sel));
      sel &= sel - 1;
      auto row = rows.row(r);
      for (std::size_t w = 0; w < rows.row_words; ++w) inout[w] &= row[w];
    }
  }
}

std::size_t popcount_scalar(std::span<const Word> words) {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace

const KernelTable& scalar() {
  static constexpr KernelTable table{"scalar", &support_scan_scalar, &and_selected_rows_scalar, &popcount_scalar};
  return table;
}

}  // namespace cfl::kernels
