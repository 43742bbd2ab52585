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

#ifndef CYCALG_FINITE_FIELD_HPP
#define CYCALG_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cycalg/fp_poly.hpp"

namespace cycalg {

/// An element of F_{q^n}: the base-p digits of `code` are the coefficients
/// of the representing polynomial in t, lowest degree first.
struct FfElement {
  std::uint32_t code = 0;
  friend auto operator<=>(const FfElement&, const FfElement&) = default;
};

/// The cyclic extension F_{q^n} / F_q with sigma = (x -> x^q).
///
/// K is F_p[t]/(f) for a monic irreducible f of degree e*n, where q = p^e.
/// Arithmetic is table driven (exponent, logarithm and Zech tables), so the
/// field order is capped at kMaxOrder. Instances are immutable.
class FiniteFieldTower {
public:
  using Element = FfElement;
  static constexpr bool kExact = true;
  static constexpr bool kFinite = true;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;
  static constexpr std::uint64_t kSurjectivityCheckLimit = std::uint64_t{1} << 16;

  /// Searches a primitive modulus with a generator seeded by `seed`.
  FiniteFieldTower(std::uint64_t q, int n, std::uint64_t seed = 0);

  /// Uses the given monic modulus (coefficients lowest first); it must be
  /// irreducible over F_p of degree e*n.
  static FiniteFieldTower with_modulus(std::uint64_t q, int n, fp::Poly modulus);

  int degree() const { return n_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t base_order() const { return q_; }
  std::uint64_t order() const { return order_; }
  int prime_degree() const { return dim_; }
  const fp::Poly& modulus() const { return modulus_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element from_int(long v) const;
  Element generator() const { return {exp_[1 % exp_.size()]}; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element sigma(Element a, long long power = 1) const;
  bool equal(Element a, Element b) const { return a.code == b.code; }
  bool is_zero(Element a) const { return a.code == 0; }

  std::uint64_t element_count() const { return order_; }
  Element element_at(std::uint64_t i) const { return {static_cast<std::uint32_t>(i)}; }
  std::uint64_t index_of(Element a) const { return a.code; }
  std::uint64_t unit_count() const { return order_ - 1; }
  Element unit_at(std::uint64_t k) const { return {exp_[k]}; }
  std::uint64_t unit_index(Element a) const;

  fp::Poly coefficients(Element a) const;
  Element from_coefficients(const fp::Poly& c) const;

  std::string to_string(Element a) const;
  Element parse(std::string_view text) const;
  Element random(std::mt19937_64& rng) const;
  nlohmann::json to_json() const;

  /// True when the constructor enumerated every norm and found N_{K/L}
  /// onto L^x (only attempted for order <= kSurjectivityCheckLimit).
  bool norm_surjectivity_verified() const { return surjectivity_verified_; }

  /// Discrete log of a unit with respect to generator(); position in unit_at.
  std::uint32_t log(Element a) const;

private:
  FiniteFieldTower(std::uint64_t q, int n, fp::Poly modulus, std::optional<std::uint64_t> seed);
  void build_tables();
  std::uint32_t add_codes_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint64_t q_ = 0;
  std::uint64_t p_ = 0;
  int e_ = 0;
  int n_ = 0;
  int dim_ = 0;
  std::uint64_t order_ = 0;
  fp::Poly modulus_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::uint32_t> exp_;   // exp_[k] = code of g^k
  std::vector<std::uint32_t> log_;   // log_[code]; log_[0] unused
  std::vector<std::uint32_t> zech_;  // zech_[k] = log(1 + g^k), kNoLog when zero
  std::uint32_t log_minus_one_ = 0;
  bool surjectivity_verified_ = false;
};

}  // namespace cycalg

#endif  // CYCALG_FINITE_FIELD_HPP
