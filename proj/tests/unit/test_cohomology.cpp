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
#include <vector>

#include "cycalg/cohomology.hpp"
#include "cycalg/finite_field.hpp"
#include "cycalg/number_theory.hpp"

using namespace cycalg;

namespace {

// Permutations k with k^n = 1, counted by direct powering.
std::uint64_t torsion_count(std::size_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < factorial(n); ++i) {
    auto k = Permutation::unrank(n, i);
    auto p = Permutation(n);
    for (std::size_t e = 0; e < n; ++e) p = p * k;
    if (p.is_identity()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("weyl cocycles are the shifted torsion elements") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const WeylGroup w(n);
    const auto z1 = enumerate_Z1(w);
    CHECK(z1.size() == torsion_count(n));
    const auto h1 = h1_classify(w, z1);
    CHECK(h1.classes.size() == count_pn(static_cast<std::uint32_t>(n)));
    std::uint64_t total = 0;
    for (const auto& c : h1.classes) total += c.size;
    CHECK(total == z1.size());
  }
}

TEST_CASE("h1 of W through torsion classes") {
  const std::vector<std::uint64_t> expected{1, 2, 2, 4, 2, 8, 2};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto r = h1w_via_torsion(n);
    CHECK(r.cycle_types.size() == expected[n - 1]);
    REQUIRE(r.classes_by_cocycles);
    CHECK(*r.classes_by_cocycles == expected[n - 1]);
    CHECK(r.bijection_verified);
    CHECK(r.classes_match);
  }
  const auto big = h1w_via_torsion(12);
  CHECK(big.source == "partitions");
  CHECK(big.cycle_types.size() == count_pn(12));
  CHECK_FALSE(big.classes_by_cocycles);
}

TEST_CASE("torus cohomology is trivial") {
  struct Case {
    std::uint64_t q;
    int n;
  };
  for (const auto c : {Case{3, 2}, Case{5, 2}, Case{2, 3}, Case{4, 2}}) {
    const FiniteFieldTower k(c.q, c.n);
    const TorusGroup<FiniteFieldTower> t(k);
    const auto z1 = enumerate_Z1(t);
    // Orbit of 1 under |T| / |T^sigma| with T^sigma = K^x embedded diagonally.
    const std::uint64_t units = k.order() - 1;
    CHECK(z1.size() == *nt::checked_pow(units, static_cast<unsigned>(c.n - 1)));
    CHECK(h1_classify(t, z1).classes.size() == 1);
  }
}

TEST_CASE("semidirect reconstruction of cocycle values") {
  const FiniteFieldTower k(3, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  CHECK(nrm.size() == 128);
  for (auto i : enumerate_Z1(nrm)) CHECK(semidirect_reconstruction_holds(nrm, nrm.element_at(i)));
  const WeylGroup w(4);
  for (auto i : enumerate_Z1(w)) CHECK(semidirect_reconstruction_holds(w, w.element_at(i)));
  // A non-cocycle fails the f(sigma^n) = 1 check.
  CHECK_FALSE(semidirect_reconstruction_holds(w, Permutation::from_cycles(4, {{1, 2}})));
}

TEST_CASE("normalizer index round trip") {
  const FiniteFieldTower k(3, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  for (std::uint64_t i = 0; i < nrm.size(); ++i) CHECK(nrm.index_of(nrm.element_at(i)) == i);
  const auto x = nrm.element_at(77), y = nrm.element_at(101);
  CHECK(nrm.equal(nrm.mul(x, nrm.inv(x)), nrm.identity()));
  // Projection to W is a homomorphism.
  CHECK(pstar(nrm.mul(x, y)) == pstar(x) * pstar(y));
}

TEST_CASE("pstar is injective with at most p_n classes") {
  struct Case {
    std::uint64_t q;
    int n;
    long b;
  };
  for (const auto c : {Case{3, 2, 2}, Case{5, 2, 2}, Case{5, 2, 3}, Case{2, 3, 1}}) {
    const FiniteFieldTower k(c.q, c.n);
    const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(c.b));
    const auto r = verify_pstar_injective(a);
    CHECK(r.projections_are_cocycles);
    CHECK(r.injective);
    CHECK(r.bounded_by_pn);
    CHECK(r.h1w == count_pn(static_cast<std::uint32_t>(c.n)));
    CHECK(r.h1n == r.images.size());
  }
}

TEST_CASE("twisting by a torus-class cocycle keeps the counts") {
  const FiniteFieldTower k(3, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  const auto r = twist_check(nrm, nrm.identity());
  CHECK(r.action_axioms_hold);
  CHECK(r.weyl_class_trivial);
  CHECK(r.z1_twisted == 8);
  CHECK(r.z1_plain == 8);
  CHECK(r.coset_cocycles == 8);
  CHECK(r.bijection_holds);
  CHECK(r.h1_twisted == 1);
}

TEST_CASE("twisting by a swap cocycle") {
  const FiniteFieldTower k(3, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  std::optional<MonomialMatrix<FfElement>> g;
  for (auto i : enumerate_Z1(nrm)) {
    const auto f = nrm.element_at(i);
    if (!f.perm.is_identity()) {
      g = f;
      break;
    }
  }
  REQUIRE(g);
  const auto r = twist_check(nrm, *g);
  CHECK(r.action_axioms_hold);
  CHECK_FALSE(r.weyl_class_trivial);
  // The twisted action is sigma on each coordinate: Z^1 = ker(Nm)^2.
  const std::uint64_t kernel = (k.order() - 1) / (k.base_order() - 1);
  CHECK(r.z1_twisted == kernel * kernel);
  CHECK(r.z1_plain == 8);
  CHECK(r.coset_cocycles == r.z1_twisted);
  CHECK(r.bijection_holds);
}

TEST_CASE("twist rejects non-cocycles") {
  const FiniteFieldTower k(5, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  const MonomialMatrix<FfElement> swap{Permutation::from_cycles(2, {{1, 2}}), {k.one(), k.one()}};
  CHECK_THROWS_AS(twist_check(nrm, swap), std::invalid_argument);
}

TEST_CASE("the two displayed degree-two matrices") {
  const FiniteFieldTower k(5, 2);
  const CyclicAlgebra<FiniteFieldTower> a(k, k.from_int(2));
  const auto r = two_class_check(a);
  CHECK(r.matrices_distinct);
  CHECK_FALSE(r.b_squared_is_one);
  // f (sigma f) = diag(b, b^-1), so neither is a cocycle for b != 1.
  CHECK_FALSE(r.f_is_cocycle);
  CHECK_FALSE(r.g_is_cocycle);
  // Anti-diagonal w would need b^2 = 1.
  CHECK(r.antidiagonal_matches == 0);
  // diag(x, y): x^4 = -1 in F_25 (4 choices), y in F_5^x (4 choices).
  CHECK(r.diagonal_matches == 16);
  CHECK_FALSE(r.distinct_classes);

  const CyclicAlgebra<FiniteFieldTower> split(k, k.one());
  const auto s = two_class_check(split);
  CHECK(s.f_is_cocycle);
  CHECK(s.g_is_cocycle);
  CHECK(s.antidiagonal_matches > 0);
}

TEST_CASE("group size guard") {
  const FiniteFieldTower k(3, 8);
  CHECK_THROWS_AS(TorusGroup<FiniteFieldTower>{k}, std::invalid_argument);
}
