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

#include "cycalg/fields.hpp"
#include "cycalg/norm_oracle.hpp"

using namespace cycalg;

TEST_CASE("finite-field norms are surjective with verified witnesses") {
  for (const auto& [q, n] : {std::pair{3ULL, 2}, std::pair{2ULL, 3}, std::pair{5ULL, 2}, std::pair{4ULL, 3}, std::pair{3ULL, 4}}) {
    const FiniteFieldTower k(q, n);
    for (std::uint64_t i = 1; i < k.order(); ++i) {
      const auto b = k.element_at(i);
      if (!in_base_field(k, b)) {
        CHECK_THROWS_AS(is_norm(k, b), std::invalid_argument);
        continue;
      }
      const auto ans = is_norm(k, b);
      CHECK(ans.verdict == Verdict::Yes);
      REQUIRE(ans.witness);
      CHECK(k.equal(norm(k, *ans.witness), b));
      const auto s = norm_preimage_search(k, b, k.order());
      CHECK(s.status == SearchStatus::Found);
    }
    CHECK_THROWS_AS(is_norm(k, k.zero()), std::invalid_argument);
  }
}

TEST_CASE("preimage search budget") {
  const FiniteFieldTower k(5, 2);
  const auto s = norm_preimage_search(k, k.from_int(3), 2);
  CHECK(s.examined <= 2);
  CHECK(s.status != SearchStatus::NoneExists);
}

TEST_CASE("sums of two squares over Q(i)") {
  const CyclotomicTower k(4, 3);
  struct Case {
    mpq_class b;
    Verdict v;
  };
  const Case cases[] = {{2, Verdict::Yes},  {3, Verdict::No},  {5, Verdict::Yes},  {-1, Verdict::No},
                        {9, Verdict::Yes},  {21, Verdict::No}, {mpq_class(1, 2), Verdict::Yes},
                        {mpq_class(5, 3), Verdict::No},        {mpq_class(13, 25), Verdict::Yes},
                        {1, Verdict::Yes},  {1000001, Verdict::Yes}};
  for (const auto& c : cases) {
    const auto b = k.from_rational(c.b);
    const auto ans = is_norm(k, b);
    CHECK(ans.verdict == c.v);
    if (ans.witness) CHECK(k.equal(norm(k, *ans.witness), b));
  }
  CHECK_THROWS_AS(is_norm(k, k.zeta()), std::invalid_argument);
}

TEST_CASE("bounded cyclotomic search") {
  // Q(zeta_3)/Q: 3 = (1 - z)(1 - z^2), 7 = N(3 + z); 2 is inert.
  const CyclotomicTower k(3, 2);
  const auto three = is_norm(k, k.from_int(3));
  CHECK(three.verdict == Verdict::Yes);
  CHECK(k.equal(norm(k, *three.witness), k.from_int(3)));
  CHECK(is_norm(k, k.from_int(7)).verdict == Verdict::Yes);
  const auto two = is_norm(k, k.from_int(2), 2);
  CHECK(two.verdict == Verdict::Unknown);
  CHECK(two.method == "bounded_search");
  const auto s = norm_preimage_search(k, k.from_int(2), 2, 10);
  CHECK(s.status == SearchStatus::Exhausted);
  CHECK(s.examined == 10);
}

TEST_CASE("local norms by valuation and Hensel lifting") {
  const PadicTower k(5, 2, 2, 30, 1);
  std::mt19937_64 rng(7);
  CHECK(is_norm(k, k.uniformizer()).verdict == Verdict::No);
  CHECK(is_norm(k, k.from_rational(mpq_class(1, 125))).verdict == Verdict::No);
  for (int t = 0; t < 40; ++t) {
    // b = 5^{2v} times a random unit of Q_5.
    const long u = static_cast<long>(rng() % 1000000) * 5 + 1 + static_cast<long>(rng() % 4);
    auto b = k.from_int(u);
    b.val += 2 * (t % 3);
    const auto ans = is_norm(k, b);
    CHECK(ans.verdict == Verdict::Yes);
    REQUIRE(ans.witness);
    CHECK(k.equal(norm(k, *ans.witness), b));
  }
  // Wild case: l divides n.
  const PadicTower wild(2, 2, 2, 30, 0);
  for (long u : {3L, 5L, 7L, -1L, 11L}) {
    const auto ans = is_norm(wild, wild.from_int(u));
    CHECK(ans.verdict == Verdict::Yes);
    REQUIRE(ans.witness);
    CHECK(wild.equal(norm(wild, *ans.witness), wild.from_int(u)));
  }
  const PadicTower cubic(7, 3, 3, 20, 0);
  const auto ans = is_norm(cubic, cubic.from_int(-2));
  REQUIRE(ans.witness);
  CHECK(cubic.equal(norm(cubic, *ans.witness), cubic.from_int(-2)));
  CHECK_THROWS_AS(is_norm(k, k.generator_x()), std::invalid_argument);
}
