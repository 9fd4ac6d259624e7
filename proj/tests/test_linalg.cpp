#include "cjac/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cjac;

namespace {

BigInt cofactor_det(const BigMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    BigMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, mk = 0; k < n; ++k)
        if (k != c) minor(r - 1, mk++) = a(r, k);
    det += (c % 2 ? -1 : 1) * a(0, c) * cofactor_det(minor);
  }
  return det;
}

BigMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int range) {
  std::uniform_int_distribution<int> val(-range, range);
  BigMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = val(rng);
  return m;
}

}  // namespace

TEST(Bareiss, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto m = random_matrix(rng, n, n, 6);
    EXPECT_EQ(bareiss_determinant(m), cofactor_det(m));
  }
}

TEST(Bareiss, SingularAndEmpty) {
  BigMatrix z(2, 2);
  EXPECT_EQ(bareiss_determinant(z), 0);
  EXPECT_EQ(bareiss_determinant(BigMatrix{}), 1);
}

TEST(Smith, TransformsAndDivisibility) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const auto a = random_matrix(rng, r, c, 9);
    const auto snf = smith_normal_form(a);
    const auto d = snf.u * a * snf.v;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(d(i, j), i == j ? snf.diagonal[i] : BigInt(0));
    EXPECT_EQ(snf.u * snf.u_inverse, BigMatrix::identity(r));
    for (std::size_t k = 0; k + 1 < snf.diagonal.size(); ++k) {
      EXPECT_GE(snf.diagonal[k], 0);
      if (snf.diagonal[k] != 0) EXPECT_EQ(snf.diagonal[k + 1] % snf.diagonal[k], 0);
      else EXPECT_EQ(snf.diagonal[k + 1], 0);
    }
  }
}

TEST(Smith, KnownForms) {
  // [[2,-1],[-1,2]] -> diag(1,3)
  BigMatrix a(2, 2);
  a(0, 0) = 2, a(0, 1) = -1, a(1, 0) = -1, a(1, 1) = 2;
  const auto snf = smith_normal_form(a);
  EXPECT_EQ(snf.diagonal, (std::vector<BigInt>{1, 3}));

  BigMatrix b(2, 2);
  b(0, 0) = 2, b(1, 1) = 3;  // diag(2,3) ~ diag(1,6)
  EXPECT_EQ(smith_normal_form(b).diagonal, (std::vector<BigInt>{1, 6}));
}
