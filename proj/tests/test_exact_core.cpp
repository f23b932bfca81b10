#include "bialg/linalg.hpp"
#include "bialg/lincomb.hpp"
#include "bialg/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bialg;

namespace {

// Textbook Gaussian elimination over Q; the oracle for the Bareiss rank.
std::size_t naive_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

std::vector<std::vector<Rational>> rows_of(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_EQ(parse_rational("1/3") + parse_rational("1/6"), Rational(1, 2));
}

TEST(Rational, RejectsMalformedInput) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("a/2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1//2"), std::invalid_argument);
}

TEST(LinComb, DropsZerosAndCombines) {
  LinComb a = LinComb::of("x", 2) + LinComb::of("y", Rational(1, 2));
  LinComb b = LinComb::of("x", -2);
  LinComb s = a + b;
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient(Key("y")), Rational(1, 2));
  EXPECT_EQ(s.coefficient(Key("x")), 0);
  EXPECT_TRUE((a - a).empty());
  EXPECT_TRUE((Rational(0) * a).empty());
  EXPECT_EQ(Rational(2) * a, a + a);
}

TEST(LinComb, TensorKeysAndPermutations) {
  LinComb a = LinComb::of("x") + LinComb::of("y");
  LinComb b = LinComb::of("z", 3);
  LinComb t = tensor(a, b);
  EXPECT_EQ(t.coefficient(Key("x|z")), 3);
  EXPECT_EQ(t.coefficient(Key("y|z")), 3);
  EXPECT_EQ(transpose(t).coefficient(Key("z|x")), 3);
  EXPECT_EQ(transpose(transpose(t)), t);

  LinComb abc = LinComb::of("a|b|c");
  EXPECT_EQ(permute_factors(abc, {2, 0, 1}), LinComb::of("c|a|b"));
  EXPECT_THROW(transpose(abc), std::invalid_argument);
  EXPECT_EQ(Key("a|b|c").arity(), 3u);
  EXPECT_EQ(Key("a|b|c").factors(), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(LinComb, MapFactor) {
  auto twice = [](const Key& k) { return LinComb(k, 2) + LinComb(Key(k.str() + k.str())); };
  LinComb v = LinComb::of("x|y");
  LinComb first = map_factor(v, 0, twice);
  EXPECT_EQ(first, LinComb::of("x|y", 2) + LinComb::of("xx|y"));
  LinComb each = map_each_factor(v, twice);
  EXPECT_EQ(each.size(), 4u);
  EXPECT_EQ(each.coefficient(Key("x|y")), 4);
  EXPECT_EQ(each.coefficient(Key("xx|yy")), 1);
}

TEST(Linalg, BareissRankMatchesNaiveOracle) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 1200; ++trial) {
    Matrix m = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), -2, 2);
    ASSERT_EQ(exact_rank(m), naive_rank(rows_of(m))) << "trial " << trial;
  }
}

TEST(Linalg, RankWithRationalEntries) {
  Matrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(3, 2);
  m(1, 1) = 1;
  EXPECT_EQ(exact_rank(m), 1u);
  EXPECT_EQ(exact_rank(Matrix(0, 3)), 0u);
  EXPECT_EQ(exact_rank(Matrix(3, 3)), 0u);
}

TEST(Linalg, KernelBasisIsAKernelOfTheRightSize) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m = random_matrix(rng, 4, 7, -2, 2);
    auto kernel = kernel_basis(m);
    ASSERT_EQ(kernel.size(), m.cols() - exact_rank(m));
    Matrix k(m.cols(), kernel.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
      for (std::size_t i = 0; i < m.cols(); ++i) k(i, j) = kernel[j][i];
    EXPECT_TRUE((m * k).is_zero());
    EXPECT_EQ(exact_rank(k), kernel.size());
  }
}

TEST(Linalg, InverseOfRandomInvertibleMatrices) {
  std::mt19937 rng(11);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = random_matrix(rng, 5, 5, -3, 3);
    if (exact_rank(m) < 5) {
      EXPECT_THROW(inverse(m), std::domain_error);
      continue;
    }
    Matrix inv = inverse(m);
    EXPECT_EQ(m * inv, Matrix::identity(5));
    EXPECT_EQ(inv * m, Matrix::identity(5));
    ++inverted;
  }
  EXPECT_GT(inverted, 50);
}

TEST(Linalg, StackConcatenatesRows) {
  Matrix a = Matrix::identity(2), b(1, 2);
  b(0, 1) = 5;
  Matrix s = Matrix::stack({a, b}, 2);
  EXPECT_EQ(s.rows(), 3u);
  EXPECT_EQ(s(2, 1), 5);
  EXPECT_THROW(Matrix::stack({a, Matrix(1, 3)}, 2), std::invalid_argument);
}

TEST(GradedEndo, ComposeAndArithmetic) {
  std::map<int, BasisPtr> bases;
  bases[1] = std::make_shared<GradedBasis>(std::vector<Key>{Key("x"), Key("y")});
  bases[2] = std::make_shared<GradedBasis>(std::vector<Key>{Key("xx"), Key("xy"), Key("yx"), Key("yy")});
  auto swap = GradedEndo::from_function(bases, [](const Key& k) {
    std::string s = k.str();
    for (auto& c : s) c = c == 'x' ? 'y' : 'x';
    return LinComb(Key(s));
  });
  auto id = GradedEndo::identity(bases);
  EXPECT_EQ(swap.compose(swap), id);
  EXPECT_EQ(swap.apply_key(2, Key("xy")), LinComb::of("yx"));
  EXPECT_EQ((id + swap).rank(1), 1u);
  EXPECT_EQ((id - swap).rank(2), 2u);
  EXPECT_EQ(Rational(2) * id, id + id);
  EXPECT_EQ(GradedEndo::zero(bases).rank(2), 0u);

  std::map<int, BasisPtr> other{{1, bases[1]}};
  EXPECT_THROW(id + GradedEndo::identity(other), std::invalid_argument);
}

TEST(GradedBasis, CoordinatesRoundTrip) {
  GradedBasis b({Key("a"), Key("b"), Key("c")});
  LinComb v = LinComb::of("a", 2) - LinComb::of("c", Rational(1, 3));
  EXPECT_EQ(b.vector(b.coordinates(v)), v);
  EXPECT_THROW(b.index_of(Key("z")), std::out_of_range);
  EXPECT_TRUE(same_span(b, {LinComb::of("a") + LinComb::of("b"), LinComb::of("b")}, {LinComb::of("a"), LinComb::of("b")}));
  EXPECT_FALSE(same_span(b, {LinComb::of("a")}, {LinComb::of("b")}));
}
