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

#ifndef CYCALG_CYCLOTOMIC_HPP
#define CYCALG_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cycalg {

/// num / den with num a polynomial in zeta of degree < phi(m). Always kept
/// normalized: den > 0 and gcd(num_0, ..., num_{phi-1}, den) = 1, so equal
/// field elements have identical representations.
struct CycElement {
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

/// Q(zeta_m) over the fixed field of sigma : zeta -> zeta^s.
///
/// The tower degree n is the multiplicative order of s modulo m. All
/// arithmetic is exact over arbitrary precision integers.
class CyclotomicTower {
public:
  using Element = CycElement;
  static constexpr bool kExact = true;
  static constexpr bool kFinite = false;

  CyclotomicTower(std::uint64_t m, std::uint64_t s);

  int degree() const { return n_; }
  std::uint64_t conductor() const { return m_; }
  std::uint64_t exponent() const { return s_; }
  std::size_t phi() const { return phi_; }
  const std::vector<mpz_class>& cyclotomic_polynomial() const { return cyclo_; }

  Element zero() const;
  Element one() const { return from_int(1); }
  Element from_int(long v) const;
  Element from_rational(const mpq_class& v) const;
  Element zeta() const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element sigma(const Element& a, long long power = 1) const;

  /// The automorphism zeta -> zeta^a for any a coprime to m.
  Element galois(const Element& x, std::uint64_t a) const;

  bool equal(const Element& a, const Element& b) const { return a.den == b.den && a.num == b.num; }
  bool is_zero(const Element& a) const;

  /// The value as a rational number when x lies in Q.
  std::optional<mpq_class> to_rational(const Element& x) const;

  std::string to_string(const Element& a) const;
  Element parse(std::string_view text) const;

  /// Coefficients uniform in [-height, height], denominator in [1, 3].
  Element random(std::mt19937_64& rng) const { return random(rng, 5); }
  Element random(std::mt19937_64& rng, long height) const;

  /// Builds an element from integer coefficients over a common denominator.
  Element make(std::vector<mpz_class> num, mpz_class den = 1) const;

  nlohmann::json to_json() const;

private:
  void normalize(Element& x) const;
  std::vector<mpz_class> reduce(std::vector<mpz_class> poly) const;

  std::uint64_t m_;
  std::uint64_t s_;
  int n_;
  std::size_t phi_;
  std::vector<mpz_class> cyclo_;                 // monic, degree phi
  std::vector<std::vector<mpz_class>> powers_;  // powers_[k] = zeta^k reduced, k < m
  std::vector<std::uint64_t> units_;             // (Z/m)^x
};

}  // namespace cycalg

#endif  // CYCALG_CYCLOTOMIC_HPP
