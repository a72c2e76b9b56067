#include <doctest.h>

#include <random>

#include "cfl/bitset.hpp"
#include "cfl/kernels.hpp"

using namespace cfl;
using namespace cfl::kernels;

namespace {

struct Matrix {
  std::vector<Word> data;
  std::size_t rows, row_words;
  RowMatrix view() const { return {data, rows, row_words}; }
};

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t bits, double density) {
  Matrix m{{}, rows, Bitset::word_count(bits)};
  std::bernoulli_distribution coin(density);
  for (std::size_t r = 0; r < rows; ++r) {
    Bitset b(bits);
    for (std::size_t i = 0; i < bits; ++i)
      if (coin(rng)) b.set(i);
    m.data.insert(m.data.end(), b.words().begin(), b.words().end());
  }
  return m;
}

Bitset random_bits(std::mt19937_64& rng, std::size_t bits, double density) {
  std::bernoulli_distribution coin(density);
  Bitset b(bits);
  for (std::size_t i = 0; i < bits; ++i)
    if (coin(rng)) b.set(i);
  return b;
}

void compare_tables(const KernelTable& ref, const KernelTable& simd) {
  std::mt19937_64 rng(17);
  // Widths straddle the single-word fast path and the 4-word vector chunks.
  for (std::size_t bits : {1, 7, 63, 64, 65, 130, 255, 256, 257, 700}) {
    for (std::size_t rows : {0, 1, 3, 4, 5, 8, 13, 64, 65, 129}) {
      for (double density : {0.2, 0.7, 0.97}) {
        auto m = random_matrix(rng, rows, bits, density);
        auto pattern = random_bits(rng, bits, 1.0 - density);
        Bitset a(rows), b(rows);
        ref.support_scan(pattern.words(), m.view(), a.words());
        simd.support_scan(pattern.words(), m.view(), b.words());
        CHECK(a == b);

        auto sel = random_bits(rng, rows, 0.5);
        Bitset x = Bitset::full(bits), y = Bitset::full(bits);
        ref.and_selected_rows(sel.words(), m.view(), x.words());
        simd.and_selected_rows(sel.words(), m.view(), y.words());
        CHECK(x == y);

        CHECK(ref.popcount(pattern.words()) == simd.popcount(pattern.words()));
        CHECK(ref.popcount(pattern.words()) == pattern.count());
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar kernels against a direct computation") {
  std::mt19937_64 rng(2);
  const auto& k = scalar();
  for (std::size_t bits : {5, 64, 200}) {
    auto m = random_matrix(rng, 37, bits, 0.8);
    auto p = random_bits(rng, bits, 0.2);
    Bitset out(37);
    k.support_scan(p.words(), m.view(), out.words());
    for (std::size_t r = 0; r < 37; ++r) {
      Bitset row(bits);
      for (std::size_t w = 0; w < m.row_words; ++w) row.words()[w] = m.data[r * m.row_words + w];
      CHECK(out.test(r) == p.is_subset_of(row));
    }
  }
}

TEST_CASE("SIMD kernels agree with the scalar reference") {
  const KernelTable* simd = avx2();
  if (!simd) {
    MESSAGE("no AVX2 on this machine; only the scalar table is exercised");
    compare_tables(scalar(), scalar());
    return;
  }
  CHECK(simd->name == "avx2");
  compare_tables(scalar(), *simd);
}

TEST_CASE("active table is one of the known tables") {
  const auto& k = active();
  CHECK((&k == &scalar() || &k == avx2()));
}

TEST_CASE("lex order and bitset basics") {
  auto w = [](std::string_view s) { return from_letters(4, s); };
  CHECK(lex_less(w(""), w("a")));
  CHECK(lex_less(w("a"), w("ab")));
  CHECK(lex_less(w("abc"), w("ac")));
  CHECK(lex_less(w("ac"), w("b")));
  CHECK_FALSE(lex_less(w("b"), w("b")));
  CHECK(w("abd").indices() == std::vector<std::size_t>{0, 1, 3});
  CHECK(w("abd").next(2) == 3);
  CHECK(w("").first() == 4);
  CHECK(braced(w("ad"), std::vector<std::string>{"a", "b", "c", "d"}) == "{a d}");
  CHECK(braced(w(""), std::vector<std::string>{"a", "b", "c", "d"}) == "{}");
  CHECK(Bitset::full(70).count() == 70);
  CHECK((Bitset::full(70) - Bitset(70, {69})).count() == 69);
}
