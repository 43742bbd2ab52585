/*
   Copyright 2026 The cycalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "cycalg/action.hpp"
#include "cycalg/cyclotomic.hpp"
#include "cycalg/finite_field.hpp"

using namespace cycalg;

TEST_CASE("action laws on random invertible matrices") {
  std::mt19937_64 rng(0);
  for (const auto& [q, n] : {std::pair{3ULL, 2}, std::pair{5ULL, 2}, std::pair{2ULL, 3}, std::pair{3ULL, 3}, std::pair{2ULL, 5}}) {
    const FiniteFieldTower k(q, n);
    for (long b : {1L, static_cast<long>(q) - 1}) {
      const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(b));
      const auto r = action_law_check(a, rng, 100);
      CHECK(r.samples == 100);
      CHECK(r.order_failures == 0);
      CHECK(r.homomorphism_failures == 0);
    }
  }
  const CyclotomicTower k(5, 2);
  const CyclicAlgebra<CyclotomicTower> a(k, k.from_int(7));
  const auto r = action_law_check(a, rng, 10);
  CHECK(r.order_failures == 0);
  CHECK(r.homomorphism_failures == 0);
}

TEST_CASE("diagonal matrices rotate") {
  const FiniteFieldTower k(5, 3);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const auto t = k.parse("t"), u = k.parse("t + 1"), v = k.parse("2");
  Matrix<FfElement> d = zero_matrix(k, 3);
  d(0, 0) = t;
  d(1, 1) = u;
  d(2, 2) = v;
  const auto s = sigma_act(a, d);
  CHECK(k.equal(s(0, 0), k.sigma(v, 1)));
  CHECK(k.equal(s(1, 1), k.sigma(t, 1)));
  CHECK(k.equal(s(2, 2), k.sigma(u, 1)));
  CHECK_THROWS_AS(sigma_act(a, zero_matrix(k, 3)), std::invalid_argument);
  CHECK_THROWS_AS(sigma_act(a, identity_matrix(k, 2)), std::invalid_argument);
}

TEST_CASE("fixed points are the embedded units") {
  // Split algebras: |A^x| = |GL_n(F_q)|.
  struct Case {
    std::uint64_t q;
    int n;
    long b;
    std::uint64_t units;
  };
  for (const auto c : {Case{3, 2, 2, 48}, Case{3, 2, 1, 48}, Case{5, 2, 2, 480}, Case{2, 2, 1, 6}}) {
    const FiniteFieldTower k(c.q, c.n);
    const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(c.b));
    const auto r = fixed_points_exhaustive(a, std::uint64_t{1} << 20);
    CHECK(r.equal);
    CHECK(r.symmetric_difference == 0);
    CHECK(r.fixed_invertible == c.units);
    CHECK(r.embedded_units == c.units);
  }
  const FiniteFieldTower k(2, 3);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.one());
  CHECK_THROWS_AS(fixed_points_exhaustive(a, std::uint64_t{1} << 20), std::invalid_argument);
  std::mt19937_64 rng(1);
  const auto s = fixed_points_sampled(a, rng, 200);
  CHECK(s.equal);
  CHECK(s.samples > 40);  // about a third of M_3(F_2) is invertible
}

TEST_CASE("monomial arithmetic matches dense arithmetic") {
  const FiniteFieldTower k(4, 3);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(1));
  std::mt19937_64 rng(3);
  auto draw = [&]() {
    MonomialMatrix<FfElement> m{Permutation::unrank(3, rng() % 6), {}};
    for (int i = 0; i < 3; ++i) m.scalars.push_back(random_nonzero(k, rng));
    return m;
  };
  for (int t = 0; t < 100; ++t) {
    const auto x = draw(), y = draw();
    CHECK(mat_equal(k, to_dense(k, monomial_mul(k, x, y)), mat_mul(k, to_dense(k, x), to_dense(k, y))));
    CHECK(monomial_equal(k, monomial_mul(k, x, monomial_inv(k, x)), monomial_identity(k, 3)));
    CHECK(mat_equal(k, to_dense(k, monomial_sigma_act(a, x)), sigma_act_once(a, to_dense(k, x))));
    const auto back = to_monomial(k, to_dense(k, x));
    REQUIRE(back);
    CHECK(monomial_equal(k, *back, x));
    CHECK(weyl_project(monomial_sigma_act(a, x)) == weyl_sigma_act(weyl_project(x)));
  }
  CHECK_FALSE(to_monomial(k, zero_matrix(k, 3)));
}

TEST_CASE("monomial action with nontrivial b") {
  const FiniteFieldTower k(7, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(3));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    MonomialMatrix<FfElement> m{Permutation::unrank(2, rng() % 2), {random_nonzero(k, rng), random_nonzero(k, rng)}};
    CHECK(mat_equal(k, to_dense(k, monomial_sigma_act(a, m)), sigma_act_once(a, to_dense(k, m))));
  }
}

TEST_CASE("sigma acts on W by conjugation with the long cycle") {
  for (int n = 1; n <= 6; ++n) {
    const FiniteFieldTower k(2, n);
    const CyclicAlgebra<FiniteFieldTower> a(k, k.one());
    const auto r = conjugation_law_check(a);
    CHECK(r.permutations == factorial(static_cast<std::size_t>(n)));
    CHECK(r.mismatches == 0);
  }
  const auto c = Permutation::long_cycle(4);
  const auto w = Permutation::from_cycles(4, {{1, 2}});
  CHECK(weyl_sigma_act(w) == c * w * c.inverse());
  CHECK(weyl_sigma_act(w).to_cycle_string() == "(2 3)");
}

TEST_CASE("the embedded j projects to a cycle") {
  const FiniteFieldTower k(2, 3);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.one());
  const auto mj = to_monomial(k, a.to_matrix(a.j()));
  REQUIRE(mj);
  // Row r of the matrix of j has its entry in column r + 1.
  CHECK(mj->perm.to_cycle_string() == "(1 3 2)");
  CHECK(mj->perm == Permutation::long_cycle(3).inverse());
}
