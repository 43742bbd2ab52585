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

#include <cstdint>
#include <random>
#include <set>

#include "cycalg/cyclotomic.hpp"
#include "cycalg/fields.hpp"
#include "cycalg/finite_field.hpp"
#include "cycalg/number_theory.hpp"

using namespace cycalg;

namespace {

// Ring axioms, sigma a ring automorphism of order n, norm and trace in L.
template <CyclicTower K>
void check_tower_properties(const K& k, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto a = k.random(rng), b = k.random(rng), c = k.random(rng);
    CHECK(k.equal(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c))));
    CHECK(k.equal(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c))));
    CHECK(k.equal(k.add(a, k.neg(a)), k.zero()));
    CHECK(k.equal(k.sigma(k.mul(a, b), 1), k.mul(k.sigma(a, 1), k.sigma(b, 1))));
    CHECK(k.equal(k.sigma(k.add(a, b), 1), k.add(k.sigma(a, 1), k.sigma(b, 1))));
    CHECK(k.equal(k.sigma(a, k.degree()), a));
    CHECK(k.equal(k.sigma(a, -1), k.sigma(a, k.degree() - 1)));
    CHECK(in_base_field(k, norm(k, a)));
    CHECK(in_base_field(k, trace(k, a)));
    CHECK(k.equal(k.parse(k.to_string(a)), a));
    if (!k.is_zero(a)) {
      CHECK(k.equal(k.mul(a, k.inv(a)), k.one()));
      CHECK(k.equal(norm(k, k.mul(a, b)), k.mul(norm(k, a), norm(k, b))));
    }
  }
}

}  // namespace

TEST_CASE("F_9 with t^2 = t + 1") {
  const auto k = FiniteFieldTower::with_modulus(3, 2, {2, 2, 1});
  const auto t = k.parse("t");
  CHECK(k.equal(k.mul(t, t), k.parse("t + 1")));
  // t generates: its order is 8.
  auto x = t;
  int order = 1;
  while (!k.equal(x, k.one())) {
    x = k.mul(x, t);
    ++order;
  }
  CHECK(order == 8);
  // Frobenius t -> t^3 = 2t + 1.
  CHECK(k.equal(k.sigma(t, 1), k.parse("2*t + 1")));
  CHECK(k.equal(norm(k, t), k.from_int(2)));
  CHECK(k.equal(trace(k, t), k.from_int(1)));
  CHECK(k.to_string(k.parse("2*t+1")) == "1+2*t");
}

TEST_CASE("finite towers satisfy the tower laws") {
  struct Case {
    std::uint64_t q;
    int n;
  };
  std::uint64_t seed = 0;
  for (const auto c : {Case{3, 2}, Case{2, 3}, Case{5, 2}, Case{4, 2}, Case{2, 8}, Case{9, 3}, Case{7, 1}}) {
    const FiniteFieldTower k(c.q, c.n, seed++);
    check_tower_properties(k, seed, 200);
    CHECK(k.order() == *nt::checked_pow(c.q, static_cast<unsigned>(c.n)));
    // |L| = q, read off as the sigma-fixed elements.
    std::uint64_t fixed = 0;
    std::set<std::uint32_t> norms;
    for (std::uint64_t i = 0; i < k.order(); ++i) {
      const auto a = k.element_at(i);
      if (in_base_field(k, a)) ++fixed;
      if (!k.is_zero(a)) norms.insert(norm(k, a).code);
      CHECK(k.index_of(a) == i);
    }
    CHECK(fixed == c.q);
    CHECK(norms.size() == c.q - 1);
    for (std::uint64_t u = 0; u < k.unit_count(); ++u) CHECK(k.unit_index(k.unit_at(u)) == u);
  }
}

TEST_CASE("finite tower validation") {
  CHECK_THROWS_AS(FiniteFieldTower(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(FiniteFieldTower(2, 23), std::invalid_argument);
  CHECK_THROWS_AS(FiniteFieldTower(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteFieldTower::with_modulus(3, 2, {1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteFieldTower::with_modulus(3, 2, {2, 0, 1}), std::invalid_argument);  // t^2 - 1
}

TEST_CASE("seeded towers are reproducible") {
  const FiniteFieldTower a(5, 3, 42), b(5, 3, 42);
  CHECK(a.modulus() == b.modulus());
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("gaussian rationals") {
  const CyclotomicTower k(4, 3);
  CHECK(k.degree() == 2);
  const auto i = k.zeta();
  CHECK(k.equal(k.mul(i, i), k.from_int(-1)));
  CHECK(k.equal(k.sigma(i, 1), k.neg(i)));
  CHECK(k.equal(norm(k, k.add(k.one(), i)), k.from_int(2)));
  CHECK(k.equal(k.inv(k.add(k.one(), i)), k.parse("1/2 - 1/2*z")));
  check_tower_properties(k, 1, 200);
}

TEST_CASE("cyclotomic towers") {
  struct Case {
    std::uint64_t m, s;
    int n;
  };
  for (const auto c : {Case{5, 2, 4}, Case{7, 2, 3}, Case{7, 6, 2}, Case{9, 2, 6}, Case{12, 5, 2}, Case{8, 3, 2}}) {
    const CyclotomicTower k(c.m, c.s);
    CHECK(k.degree() == c.n);
    CHECK(k.phi() == nt::euler_phi(c.m));
    check_tower_properties(k, c.m, 60);
  }
  const CyclotomicTower k12(12, 5);
  CHECK(k12.cyclotomic_polynomial() == std::vector<mpz_class>{1, 0, -1, 0, 1});
  // Norm of 1 - zeta_7 over Q(zeta_7)^{<2>} times its conjugate is 7.
  const CyclotomicTower k7(7, 3);
  CHECK(k7.degree() == 6);
  CHECK(k7.equal(norm(k7, k7.sub(k7.one(), k7.zeta())), k7.from_int(7)));
  CHECK_THROWS_AS(CyclotomicTower(8, 2), std::invalid_argument);
}

TEST_CASE("cyclotomic elements stay normalised") {
  const CyclotomicTower k(5, 2);
  const auto a = k.make({2, 4, 6, 0}, 4);
  CHECK(a.den == 2);
  CHECK(k.equal(a, k.parse("1/2 + z + 3/2*z^2")));
  CHECK(k.to_rational(k.from_int(3)) == mpq_class(3));
  CHECK_FALSE(k.to_rational(k.zeta()));
}
