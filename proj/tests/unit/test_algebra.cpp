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

#include "cycalg/algebra.hpp"
#include "cycalg/cyclotomic.hpp"
#include "cycalg/finite_field.hpp"

using namespace cycalg;

namespace {

std::uint64_t gl_order(std::uint64_t q, int n) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t out = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

template <CyclicTower K>
void check_algebra_laws(const CyclicAlgebra<K>& a, std::uint64_t seed, int trials) {
  const K& k = a.tower();
  std::mt19937_64 rng(seed);
  const auto j = a.j();
  CHECK(k.equal(a.reduced_norm(j), (a.n() % 2 == 1) ? a.b() : k.neg(a.b())));
  auto jn = a.one();
  for (int i = 0; i < a.n(); ++i) jn = a.multiply(jn, j);
  CHECK(a.equal(jn, a.scalar(a.b())));
  for (int t = 0; t < trials; ++t) {
    const auto x = a.random(rng), y = a.random(rng), z = a.random(rng);
    CHECK(a.equal(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z))));
    CHECK(a.equal(a.multiply(x, a.add(y, z)), a.add(a.multiply(x, y), a.multiply(x, z))));
    CHECK(mat_equal(k, a.to_matrix(a.multiply(x, y)), mat_mul(k, a.to_matrix(x), a.to_matrix(y))));
    CHECK(k.equal(a.reduced_norm(a.multiply(x, y)), k.mul(a.reduced_norm(x), a.reduced_norm(y))));
    const auto c = k.random(rng);
    CHECK(a.equal(a.multiply(j, a.scalar(c)), a.multiply(a.scalar(k.sigma(c, 1)), j)));
    CHECK(k.equal(a.reduced_norm(a.scalar(c)), norm(k, c)));
    CHECK(a.is_embedded(a.to_matrix(x)));
    CHECK(a.equal(a.from_json(a.to_json(x)), x));
  }
}

}  // namespace

TEST_CASE("rational quaternions") {
  const CyclotomicTower k(4, 3);
  const CyclicAlgebra<CyclotomicTower> h(k, k.from_int(-1));
  const auto i = h.scalar(k.zeta()), j = h.j();
  CHECK(h.equal(h.multiply(j, j), h.scalar(k.from_int(-1))));
  CHECK(h.equal(h.multiply(i, j), h.add(h.zero(), h.make({k.zero(), k.zeta()}))));
  CHECK(h.equal(h.multiply(j, i), h.make({k.zero(), k.neg(k.zeta())})));
  // a + b i + (c + d i) j has reduced norm a^2 + b^2 + c^2 + d^2.
  const auto x = h.make({k.parse("1 + 2*z"), k.parse("3 + 4*z")});
  CHECK(k.equal(h.reduced_norm(x), k.from_int(30)));
  const auto w = wedderburn_index(h);
  CHECK(w.status == IndexStatus::Found);
  CHECK(w.index == 2);
  CHECK(is_division(h) == Verdict::Yes);
  check_algebra_laws(h, 11, 40);
}

TEST_CASE("split quaternion algebras over Q") {
  const CyclotomicTower k(4, 3);
  const CyclicAlgebra<CyclotomicTower> a(k, k.from_int(2));
  const auto w = wedderburn_index(a);
  CHECK(w.status == IndexStatus::Found);
  CHECK(w.index == 1);
  CHECK(is_division(a) == Verdict::No);
  const CyclicAlgebra<CyclotomicTower> a3(k, k.from_int(3));
  CHECK(wedderburn_index(a3).index == 2);
  const CyclicAlgebra<CyclotomicTower> a3b(k, k.from_int(3));
  CHECK(wedderburn_index(a3b, 1).status == IndexStatus::ExceedsBound);
}

TEST_CASE("undecided memberships propagate") {
  // -1 is not a value of x^2 + xy + y^2, which the bounded search cannot prove.
  const CyclotomicTower k(3, 2);
  const CyclicAlgebra<CyclotomicTower> a(k, k.from_int(-1));
  CHECK(wedderburn_index(a).status == IndexStatus::Unknown);
  CHECK(is_division(a) == Verdict::Unknown);
}

TEST_CASE("cyclotomic algebra laws") {
  const CyclotomicTower k(7, 2);
  const CyclicAlgebra<CyclotomicTower> a(k, k.from_int(3));
  check_algebra_laws(a, 5, 15);
}

TEST_CASE("finite cyclic algebras are never division") {
  struct Case {
    std::uint64_t q;
    int n;
    long b;
  };
  for (const auto c : {Case{3, 2, 2}, Case{2, 3, 1}, Case{5, 2, 2}, Case{4, 2, 1}, Case{2, 2, 1}, Case{3, 3, 2}, Case{2, 4, 1}}) {
    const FiniteFieldTower k(c.q, c.n);
    const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(c.b));
    check_algebra_laws(a, c.q * 10 + static_cast<std::uint64_t>(c.n), 50);
    CHECK(is_division(a) == Verdict::No);
    CHECK(wedderburn_index(a).index == 1);
    const auto x = division_cross_check(a);
    CHECK(x.consistent);
    CHECK(x.zero_divisor == SearchStatus::Found);
    CHECK(x.noninvertible_found);
    // A split algebra is M_n(F_q).
    if (x.units_by_pairs) CHECK(*x.units_by_pairs == gl_order(c.q, c.n));
  }
}

TEST_CASE("algebra validation") {
  const FiniteFieldTower k(3, 2);
  CHECK_THROWS_AS(CyclicAlgebra<FiniteFieldTower>(k, k.zero()), std::invalid_argument);
  CHECK_THROWS_AS(CyclicAlgebra<FiniteFieldTower>(k, k.parse("t")), std::invalid_argument);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.one()), b(k, k.one());
  CHECK_THROWS_AS(a.multiply(a.one(), b.one()), std::invalid_argument);
  CHECK_THROWS_AS(a.from_json(nlohmann::json::array({"1"})), std::invalid_argument);
  const FiniteFieldTower big(2, 6);
  const CyclicAlgebra<FiniteFieldTower> c(big, big.one());
  CHECK_THROWS_AS(division_cross_check(c), std::invalid_argument);
}
