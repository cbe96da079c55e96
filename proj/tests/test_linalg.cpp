#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "loopspace/chain_complex.hpp"
#include "loopspace/matrix.hpp"
#include "loopspace/smith.hpp"

using namespace loopspace;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Independent oracle: the product d1*...*dk of the first k invariant factors
// equals the gcd of all k x k minors.
Int minor_gcd(const Matrix& m, std::size_t k) {
  std::vector<std::size_t> ri(k), ci(k);
  Int g(0);
  std::vector<std::size_t> rsel, csel;
  // enumerate k-subsets of rows and cols
  std::vector<std::size_t> rows_idx, cols_idx;
  std::function<void(std::size_t, std::size_t)> pick_cols = [&](std::size_t start,
                                                                std::size_t left) {
    if (left == 0) {
      Matrix sub(k, k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(rsel[a], csel[b]);
      Int d = determinant(sub);
      g = gcd(g, d);
      return;
    }
    for (std::size_t j = start; j + left <= m.cols(); ++j) {
      csel.push_back(j);
      pick_cols(j + 1, left - 1);
      csel.pop_back();
    }
  };
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start,
                                                                std::size_t left) {
    if (left == 0) {
      pick_cols(0, k);
      return;
    }
    for (std::size_t i = start; i + left <= m.rows(); ++i) {
      rsel.push_back(i);
      pick_rows(i + 1, left - 1);
      rsel.pop_back();
    }
  };
  rsel.reserve(k);
  csel.reserve(k);
  pick_rows(0, k);
  return abs(g);
}

void check_snf_contract(const Matrix& m) {
  auto s = smith_normal_form(m);
  REQUIRE(s.u * m * s.v == s.d);
  REQUIRE(abs(determinant(s.u)) == 1);
  REQUIRE(abs(determinant(s.v)) == 1);
  for (std::size_t i = 0; i < s.rank; ++i) {
    REQUIRE(s.d.at(i, i) > 0);
    if (i + 1 < s.rank) REQUIRE(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
  }
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j || i >= s.rank) REQUIRE(s.d.at(i, j) == 0);
  // invariant-factor products against the minor-gcd oracle
  Int prod(1);
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()) && k <= 3; ++k) {
    Int mg = minor_gcd(m, k);
    if (k <= s.rank) {
      prod *= s.d.at(k - 1, k - 1);
      REQUIRE(prod == mg);
    } else {
      REQUIRE(mg == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith normal form on the worked example") {
  Matrix m = from_rows({{2, 4}, {6, 8}});
  auto s = smith_normal_form(m);
  REQUIRE(s.rank == 2);
  REQUIRE(s.d.at(0, 0) == 2);
  REQUIRE(s.d.at(1, 1) == 4);
  check_snf_contract(m);
}

TEST_CASE("smith normal form of zero and identity") {
  Matrix z(2, 3);
  auto sz = smith_normal_form(z);
  REQUIRE(sz.rank == 0);
  REQUIRE(sz.d.is_zero());

  Matrix id = Matrix::identity(3);
  auto si = smith_normal_form(id);
  REQUIRE(si.rank == 3);
  REQUIRE(si.d == id);
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 5), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
    check_snf_contract(m);
  }
}

TEST_CASE("homology of the one-vertex circle model") {
  // basis sizes (1,1), zero boundary
  ChainComplex c(Ring::integers(), {{"x"}, {"e"}}, {Matrix(0, 1), Matrix(1, 1)});
  auto h = homology(c);
  REQUIRE(h.betti == std::vector<std::size_t>{1, 1});
  REQUIRE(h.torsion[0].empty());
  REQUIRE(h.torsion[1].empty());
}

TEST_CASE("homology of a point") {
  ChainComplex c(Ring::integers(), {{"x"}}, {Matrix(0, 1)});
  REQUIRE(homology(c).betti == std::vector<std::size_t>{1});
}

TEST_CASE("homology of the standard 2-simplex") {
  // vertices 0,1,2; edges 01,02,12; triangle 012
  Matrix d1 = from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  Matrix d2 = from_rows({{1}, {-1}, {1}});
  ChainComplex c(Ring::integers(), {{"0", "1", "2"}, {"01", "02", "12"}, {"012"}},
                 {Matrix(0, 3), d1, d2});
  REQUIRE(rank_rational(d1) == 2);
  REQUIRE(rank_rational(d2) == 1);
  auto h = homology(c);
  REQUIRE(h.betti == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("chain complex rejects nonzero boundary square") {
  Matrix d1 = from_rows({{1}});
  Matrix d2 = from_rows({{1}});
  REQUIRE_THROWS_AS(
      ChainComplex(Ring::integers(), {{"a"}, {"b"}, {"c"}}, {Matrix(0, 1), d1, d2}),
      std::invalid_argument);
}

TEST_CASE("universal coefficients spot-check with torsion") {
  // projective-plane style: single 2-cell glued with degree 2
  Matrix d1(1, 1);  // edge -> 0
  Matrix d2(1, 1);
  d2.at(0, 0) = 2;
  std::vector<std::vector<std::string>> basis = {{"v"}, {"e"}, {"f"}};
  ChainComplex cz(Ring::integers(), basis, {Matrix(0, 1), d1, d2});
  auto hz = homology(cz);
  REQUIRE(hz.betti == std::vector<std::size_t>{1, 0, 0});
  REQUIRE(hz.torsion[1] == std::vector<Int>{2});

  ChainComplex c2(Ring::prime_field(2), basis, {Matrix(0, 1), d1, d2});
  REQUIRE(homology(c2).betti == std::vector<std::size_t>{1, 1, 1});
  ChainComplex c3(Ring::prime_field(3), basis, {Matrix(0, 1), d1, d2});
  REQUIRE(homology(c3).betti == std::vector<std::size_t>{1, 0, 0});
  ChainComplex cq(Ring::rationals(), basis, {Matrix(0, 1), d1, d2});
  REQUIRE(homology(cq).betti == std::vector<std::size_t>{1, 0, 0});
}
