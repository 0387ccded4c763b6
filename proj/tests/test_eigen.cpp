#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "pgspec/eigen.hpp"
#include "pgspec/graph_matrices.hpp"

using namespace pgspec;

namespace {

void check_values(const std::vector<double>& got, std::vector<double> want, double tol = 1e-10) {
  std::sort(want.rbegin(), want.rend());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

DenseSymMatrix random_sym(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseSymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, u(rng));
  return m;
}

}  // namespace

TEST_CASE("small fixed matrices") {
  const std::vector<double> d{3, 1, 2};
  CHECK(sym_eigenvalues(DenseSymMatrix::diagonal(d)) == std::vector<double>{3, 2, 1});
  check_values(sym_eigenvalues(adjacency(complete_graph(2))), {1, -1});
  check_values(sym_eigenvalues(DenseSymMatrix(3)), {0, 0, 0});
  CHECK(sym_eigenvalues(DenseSymMatrix()).empty());
}

TEST_CASE("classical graph spectra") {
  for (std::size_t n : {3u, 5u, 8u}) {
    std::vector<double> kn(n, -1.0);
    kn[0] = static_cast<double>(n) - 1;
    check_values(sym_eigenvalues(adjacency(complete_graph(n))), kn);

    std::vector<double> cn, pn;
    for (std::size_t j = 0; j < n; ++j) {
      cn.push_back(2 * std::cos(2 * std::numbers::pi * j / n));
      pn.push_back(2 * std::cos(std::numbers::pi * (j + 1) / (n + 1)));
    }
    check_values(sym_eigenvalues(adjacency(cycle_graph(n))), cn);
    check_values(sym_eigenvalues(adjacency(path_graph(n))), pn);
  }
  std::vector<double> star(6, 0.0);
  star[0] = std::sqrt(5.0);
  star[5] = -std::sqrt(5.0);
  check_values(sym_eigenvalues(adjacency(star_graph(5))), star);
}

TEST_CASE("reconstruction and orthogonality") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 7u, 20u}) {
    const auto m = random_sym(rng, n);
    const auto eig = sym_eigen(m);
    CHECK(std::is_sorted(eig.values.rbegin(), eig.values.rend()));
    CHECK(reconstruction_residual(m, eig) <= 1e-12);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        double dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += eig.vectors(i, a) * eig.vectors(i, b);
        CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).scale(1).epsilon(1e-12));
      }
    double sum = 0;
    for (double x : eig.values) sum += x;
    CHECK(sum == doctest::Approx(m.trace()).scale(1).epsilon(1e-12));
  }
}

TEST_CASE("iteration cap") {
  std::mt19937_64 rng(5);
  CHECK_THROWS_AS(sym_eigen(random_sym(rng, 12), 1e-14, 1), ConvergenceError);
}

TEST_CASE("non-symmetric input is rejected") {
  CHECK_THROWS_AS(DenseSymMatrix::from_rows({{1, 2}, {3, 4}}), DomainError);
  CHECK_THROWS_AS(DenseSymMatrix::from_rows({{1, 2}}), DomainError);
}

TEST_CASE("polynomial roots") {
  const std::vector<double> c{1, -6, 11, -6};
  auto r = polynomial_roots(c);
  std::vector<double> re;
  for (auto z : r) {
    CHECK(std::abs(z.imag()) < 1e-10);
    re.push_back(z.real());
  }
  check_values((std::sort(re.rbegin(), re.rend()), re), {3, 2, 1});

  const std::vector<double> complex_pair{1, 0, 1};
  r = polynomial_roots(complex_pair);
  REQUIRE(r.size() == 2);
  for (auto z : r) {
    CHECK(std::abs(z.real()) < 1e-12);
    CHECK(std::abs(std::abs(z.imag()) - 1.0) < 1e-12);
  }
  const std::vector<double> scaled{2, -2, -4};
  r = polynomial_roots(scaled);
  re.clear();
  for (auto z : r) re.push_back(z.real());
  std::sort(re.rbegin(), re.rend());
  check_values(re, {2, -1});
  const std::vector<double> bad{0, 1, 2};
  CHECK_THROWS(polynomial_roots(bad));
}

TEST_CASE("general eigenvalues agree with the symmetric solver") {
  std::mt19937_64 rng(9);
  const auto m = random_sym(rng, 9);
  DenseMatrix g(9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) g(i, j) = m(i, j);
  auto z = general_eigenvalues(g);
  std::vector<double> re;
  for (auto v : z) {
    CHECK(std::abs(v.imag()) < 1e-9);
    re.push_back(v.real());
  }
  std::sort(re.rbegin(), re.rend());
  check_values(re, sym_eigenvalues(m), 1e-9);

  const auto rot = DenseMatrix::from_rows({{0, -1}, {1, 0}});
  z = general_eigenvalues(rot);
  for (auto v : z) CHECK(std::abs(std::abs(v.imag()) - 1.0) < 1e-12);
}
