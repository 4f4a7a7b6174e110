#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsorlat/exact_linalg.hpp"

using namespace torsorlat;

namespace {

bool smith_axioms(const IntMat& a, const SmithForm& s) {
  if (!(s.U * a * s.V == s.D)) return false;
  if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1) return false;
  const auto& d = s.D;
  std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  bool seen_zero = false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (d(i, i) == 0) seen_zero = true;
    else if (seen_zero) return false;
    if (i + 1 < k && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("snf of the identity") {
  auto s = snf(IntMat::identity(3));
  CHECK(s.D == IntMat::identity(3));
  CHECK(smith_axioms(IntMat::identity(3), s));
}

TEST_CASE("snf of diag(2,3) is diag(1,6)") {
  IntMat a = IntMat::from_rows({{2, 0}, {0, 3}});
  auto s = snf(a);
  CHECK(s.D == IntMat::from_rows({{1, 0}, {0, 6}}));
  CHECK(smith_axioms(a, s));
  CHECK(oracle::determinantal_invariants(a) == std::vector<Integer>{1, 6});
}

TEST_CASE("snf of a rank one matrix") {
  IntMat a = IntMat::from_rows({{4, 6}, {6, 9}});
  auto s = snf(a);
  CHECK(s.D == IntMat::from_rows({{1, 0}, {0, 0}}));
  CHECK(s.rank() == 1);
  CHECK(smith_axioms(a, s));
}

TEST_CASE("snf of empty matrices") {
  IntMat a(0, 4);
  auto s = snf(a);
  CHECK(s.U.rows() == 0);
  CHECK(s.V == IntMat::identity(4));
  CHECK(s.rank() == 0);
  CHECK(smith_invariants(IntMat(3, 0)).empty());
}

TEST_CASE("snf matches determinantal divisors") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    IntMat a = oracle::random_matrix(rng, m, n, 9);
    auto s = snf(a);
    REQUIRE(smith_axioms(a, s));
    CHECK(s.nonzero_diagonal() == oracle::determinantal_invariants(a));
    CHECK(smith_invariants(a) == s.nonzero_diagonal());
  }
}

TEST_CASE("det") {
  CHECK(det(IntMat::identity(28)) == 1);
  CHECK(det(IntMat::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK(det(IntMat(0, 0)) == 1);
  CHECK(det(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK_THROWS_AS(det(IntMat(2, 3)), Error);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 5;
    IntMat a = oracle::random_matrix(rng, n, n, 9);
    CHECK(det(a) == oracle::leibniz_det(a));
  }
}

TEST_CASE("det of a singular matrix") {
  CHECK(det(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(rank(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
}

TEST_CASE("kernel basis examples") {
  CHECK(same_lattice(kernel_basis(IntMat::from_rows({{1, -1}})), IntMat::column({1, 1})));
  CHECK(kernel_basis(IntMat::identity(3)).cols() == 0);
  CHECK(same_lattice(kernel_basis(IntMat::from_rows({{2, 4}})), IntMat::column({2, -1})));
  IntMat k = kernel_basis(IntMat(0, 3));
  CHECK(k.cols() == 3);
  CHECK(is_saturated_basis(k));
}

TEST_CASE("kernel is saturated at small primes") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 1 + rng() % 3, n = 2 + rng() % 4;
    IntMat a = oracle::random_matrix(rng, m, n, 6);
    // Scaling rows does not change the kernel but tempts an unsaturated answer.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) *= static_cast<long>(i + 2);
    IntMat k = kernel_basis(a);
    CHECK((a * k).is_zero());
    CHECK(k.cols() + rank(a) == n);
    if (k.cols() > 0) {
      CHECK(is_saturated_basis(k));
      CHECK(quotient(n, k).free_rank() == n - k.cols());
      CHECK(quotient(n, k).invariant_factors().empty());
    }
  }
}

TEST_CASE("hermite rows") {
  IntMat h = hermite_rows(IntMat::from_rows({{2, 4}, {3, 5}}));
  CHECK(h == IntMat::from_rows({{1, 1}, {0, 2}}));
  IntMat z = hermite_rows(IntMat(2, 2));
  CHECK(z.rows() == 0);
}

TEST_CASE("quotient examples") {
  CHECK(quotient(1, IntMat::column({2})).to_string() == "Z/2");
  IntMat sub = IntMat::from_rows({{2, 0}, {0, 3}});
  auto q = quotient(2, sub);
  CHECK(q.invariant_factors() == std::vector<Integer>{6});
  CHECK(q.free_rank() == 0);
  auto free = quotient(2, IntMat(2, 0));
  CHECK(free.free_rank() == 2);
  CHECK(free.to_string() == "Z^2");
  CHECK_THROWS_AS(quotient(3, sub), Error);
}

TEST_CASE("quotient is invariant under unimodular change") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 4, k = 1 + rng() % 4;
    IntMat sub = oracle::random_matrix(rng, n, k, 9);
    IntMat u = oracle::random_unimodular(rng, k);
    CHECK(quotient(n, sub) == quotient(n, sub * u));
  }
}

TEST_CASE("FinAbGroup normal form") {
  auto g = FinAbGroup::from_cyclic_orders({2, 3, 1, 4, 0});
  CHECK(g.invariant_factors() == std::vector<Integer>{2, 12});
  CHECK(g.free_rank() == 1);
  CHECK(!g.order().has_value());
  CHECK(g.torsion() == FinAbGroup::from_cyclic_orders({4, 6}));
  CHECK(g.p_part(2) == FinAbGroup::from_cyclic_orders({2, 4}));
  CHECK(g.p_part(3) == FinAbGroup::from_cyclic_orders({3}));
  CHECK(g.p_part(5).is_trivial());
  CHECK(FinAbGroup::from_cyclic_orders({6}) == FinAbGroup::from_cyclic_orders({2, 3}));
  CHECK(FinAbGroup::from_cyclic_orders({6}).order() == Integer(6));
  CHECK(FinAbGroup::trivial().to_string() == "0");
  CHECK(FinAbGroup::trivial().order() == Integer(1));
}

TEST_CASE("solve and left inverse") {
  IntMat a = IntMat::from_rows({{2, 0}, {0, 3}});
  CHECK(!solve(a, IntMat::column({1, 0})).has_value());
  auto x = solve(a, IntMat::column({4, 9}));
  REQUIRE(x.has_value());
  CHECK(*x == IntMat::column({2, 3}));
  IntMat basis = IntMat::from_rows({{1, 0}, {1, 1}, {0, 2}});
  REQUIRE(is_saturated_basis(basis));
  CHECK(left_inverse(basis) * basis == IntMat::identity(2));
  CHECK(!is_saturated_basis(IntMat::column({2, 0})));
}

TEST_CASE("valuation and primality") {
  CHECK(valuation(Integer(51840), 3) == 4);
  CHECK(valuation(Integer(-720), 2) == 4);
  CHECK(valuation(Integer(7), 5) == 0);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("gcd of entries") {
  CHECK(gcd_of_entries(IntMat::from_rows({{4, 6}, {8, 10}})) == 2);
  CHECK(gcd_of_entries(IntMat(2, 2)) == 0);
}
