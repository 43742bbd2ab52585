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

#ifndef CYCALG_PADIC_HPP
#define CYCALG_PADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cycalg/finite_field.hpp"
#include "cycalg/fp_poly.hpp"

namespace cycalg {

/// An element l^val * u of the unramified extension, where u is a unit of
/// the ring of integers known modulo l^rel.
///
/// A zero element (empty `unit`) is only known to vanish modulo l^val;
/// val == PadicElement::kExact marks the exact zero.
struct PadicElement {
  static constexpr std::int64_t kExact = std::int64_t{1} << 60;

  std::int64_t val = kExact;
  int rel = 0;
  std::vector<mpz_class> unit;
};

/// The unramified extension K = Q_l[x]/(f) of degree d with
/// sigma = Frobenius^(d/n), so K/L is cyclic of order n with L the
/// fixed field. Relative precision is capped at `prec` l-adic digits and
/// every operation tracks how many digits remain valid; comparisons mean
/// "equal modulo the available precision".
class PadicTower {
public:
  using Element = PadicElement;
  static constexpr bool kExact = false;
  static constexpr bool kFinite = false;

  /// Searches a modulus (irreducible modulo l) from `seed`.
  PadicTower(std::uint64_t l, int d, int n, int prec = 32, std::uint64_t seed = 0);

  /// Uses a monic integer modulus whose reduction mod l is irreducible.
  static PadicTower with_modulus(std::uint64_t l, int d, int n, int prec, fp::Poly modulus);

  /// The same field at a different precision cap.
  PadicTower with_precision(int prec) const;

  int degree() const { return n_; }
  std::uint64_t prime() const { return l_; }
  int extension_degree() const { return d_; }
  int precision() const { return prec_; }
  const fp::Poly& modulus() const { return modulus_; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  Element zero() const { return Element{}; }
  Element one() const { return from_int(1); }
  Element from_int(long v) const;
  Element from_rational(const mpq_class& v) const;
  Element from_integer_coefficients(const std::vector<mpz_class>& coeffs) const;
  Element uniformizer() const { return from_int(static_cast<long>(l_)); }
  Element generator_x() const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element sigma(const Element& a, long long power = 1) const;

  /// Forgets digits beyond absolute precision `abs`.
  Element truncate(const Element& a, std::int64_t abs) const;

  bool equal(const Element& a, const Element& b) const { return is_zero(sub(a, b)); }
  bool is_zero(const Element& a) const { return a.unit.empty(); }

  /// Valuation; for a zero element, the absolute precision to which it vanishes.
  std::int64_t valuation(const Element& a) const { return a.val; }
  /// Digits known: val + rel, or val for zeros.
  std::int64_t absolute_precision(const Element& a) const;

  /// The image of x under sigma, as integer coefficients mod l^prec.
  const std::vector<mpz_class>& sigma_image_of_x() const { return sigma_images_[1 % n_][1 % d_]; }

  /// Residue field F_{l^d} with sigma reducing to x -> x^(l^(d/n)); null when
  /// l^d exceeds the finite-field table limit.
  const FiniteFieldTower* residue_field() const { return residue_.get(); }
  FfElement residue(const Element& a) const;
  Element lift(FfElement a) const;

  std::string to_string(const Element& a) const;
  Element parse(std::string_view text) const;

  /// A random integral element with coefficients uniform modulo l^prec.
  Element random(std::mt19937_64& rng) const;
  /// l^v * (random unit).
  Element random_with_valuation(std::mt19937_64& rng, std::int64_t v) const;

  nlohmann::json to_json() const;

  /// l^k as an integer.
  mpz_class lpow(std::int64_t k) const;

private:
  PadicTower(std::uint64_t l, int d, int n, int prec, fp::Poly modulus, std::optional<std::uint64_t> seed);
  void build();

  using Vec = std::vector<mpz_class>;
  Vec ring_mul(const Vec& a, const Vec& b, const mpz_class& m) const;
  Vec ring_inv(const Vec& a, int digits) const;
  Element make(Vec coeffs, std::int64_t shift, std::int64_t abs) const;

  std::uint64_t l_;
  int d_;
  int n_;
  int prec_;
  fp::Poly modulus_;
  std::optional<std::uint64_t> seed_;
  std::vector<mpz_class> lpow_;                    // l^0 .. l^(2 prec)
  std::vector<std::vector<Vec>> sigma_images_;    // [k][i] = sigma^k(x^i)
  std::shared_ptr<const FiniteFieldTower> residue_;
};

}  // namespace cycalg

#endif  // CYCALG_PADIC_HPP
