#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "test_support.hpp"
#include "tropcone/oracle.hpp"
#include "tropcone/random.hpp"

using namespace tropcone;
using testsupport::example1;
using testsupport::example2;
using testsupport::sparse_set;
using testsupport::SparseVec;
using testsupport::tv;

TEST_CASE("oracle basis matches the fast path on the worked examples") {
  CHECK(sparse_set(oracle_basis(example1())) == sparse_set(compute_basis(example1())));
  const auto slow = oracle_basis(example2());
  CHECK(slow.gens.size() == 16);
  CHECK(sparse_set(slow) == sparse_set(compute_basis(example2())));
}

TEST_CASE("oracle basis of the trivial system") {
  TropMatrix<Int> a(2, 1), b(2, 1);
  CHECK(sparse_set(oracle_basis(TwoRowSystem<Int>(a, b))) ==
        std::vector<SparseVec>{{{0, 0}}});
}

TEST_CASE("cross_check on example 1 is clean") {
  const auto report = cross_check(example1());
  CHECK(report.basis_match);
  CHECK(report.missing.empty());
  CHECK(report.extra.empty());
  CHECK(report.solution_violations.empty());
  CHECK(report.membership_failures.empty());
}

TEST_CASE("a corrupted basis shows up as membership failures") {
  const auto sys = example1();
  Basis<Int> damaged = compute_basis(sys);
  damaged.gens.pop_back();  // drop one extremal
  const auto report = verify_against(sys, damaged);
  CHECK(!report.basis_match);
  CHECK(!report.missing.empty());
  CHECK(!report.membership_failures.empty());
}

TEST_CASE("fuzz campaign: fast path equals oracle") {
  Rng rng(20250808);
  int degenerate = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const int n = static_cast<int>(rng.uniform(1, 6));
    const auto sys = random_system<Int>(n, rng, 30, -5, 5);
    const auto cls = classify(sys);
    if (cls.J[0].empty() || cls.J[1].empty()) ++degenerate;
    const auto report = cross_check(sys);
    REQUIRE(report.basis_match);
    REQUIRE(report.solution_violations.empty());
    REQUIRE(report.membership_failures.empty());
  }
  CHECK(degenerate > 10);  // the campaign must exercise the reduction path
}

TEST_CASE("cone membership sampling around the oracle basis") {
  Rng rng(31337);
  int inside = 0, outside = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto sys = random_system<Int>(n, rng, 30, -5, 5);
    const auto basis = oracle_basis(sys);
    const auto dense = basis.dense_all();
    if (!dense.empty()) {
      // random nonnegative combinations stay inside the cone
      TropVector<Int> x(n);
      for (const auto& v : dense) {
        const Trop<Int> lam =
            rng.chance(1, 3) ? Trop<Int>::bottom() : Trop<Int>(rng.uniform(-3, 3));
        for (int i = 0; i < n; ++i) x(i) += lam * v(i);
      }
      CHECK(is_solution(sys, x));
      ++inside;
    }
    const TropVector<Int> y = random_vector<Int>(n, rng, 30, -5, 5);
    if (!is_solution(sys, y)) {
      CHECK(!decompose(y, dense));
      ++outside;
    }
  }
  CHECK(inside > 40);
  CHECK(outside > 20);
}
