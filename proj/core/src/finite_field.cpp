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

#include "cycalg/finite_field.hpp"

#include <set>
#include <stdexcept>

#include "cycalg/fields.hpp"
#include "cycalg/number_theory.hpp"
#include "cycalg/poly_parse.hpp"

namespace cycalg {

namespace {

constexpr std::uint32_t kNoLog = UINT32_MAX;

struct BaseParams {
  std::uint64_t p;
  int e;
  std::uint64_t order;
};

BaseParams validate(std::uint64_t q, int n) {
  auto pp = nt::prime_power(q);
  if (!pp) throw std::invalid_argument("FiniteFieldTower: q = " + std::to_string(q) + " is not a prime power");
  if (n < 1) throw std::invalid_argument("FiniteFieldTower: degree n must be >= 1");
  auto order = nt::checked_pow(q, static_cast<unsigned>(n));
  if (!order || *order > FiniteFieldTower::kMaxOrder) {
    throw std::invalid_argument("FiniteFieldTower: q^n exceeds the table limit of 2^22 elements");
  }
  return {pp->first, pp->second, *order};
}

}  // namespace

FiniteFieldTower::FiniteFieldTower(std::uint64_t q, int n, std::uint64_t seed) {
  const auto base = validate(q, n);
  const int dim = base.e * n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, base.p - 1);
  fp::Poly f;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw std::runtime_error("FiniteFieldTower: no primitive modulus found");
    f.assign(static_cast<std::size_t>(dim) + 1, 0);
    for (int i = 0; i < dim; ++i) f[static_cast<std::size_t>(i)] = coef(rng);
    f[static_cast<std::size_t>(dim)] = 1;
    if (f[0] == 0) continue;
    if (fp::is_irreducible(f, base.p) && fp::is_primitive(f, base.p)) break;
  }
  *this = FiniteFieldTower(q, n, std::move(f), seed);
}

FiniteFieldTower FiniteFieldTower::with_modulus(std::uint64_t q, int n, fp::Poly modulus) {
  return FiniteFieldTower(q, n, std::move(modulus), std::nullopt);
}

FiniteFieldTower::FiniteFieldTower(std::uint64_t q, int n, fp::Poly modulus, std::optional<std::uint64_t> seed)
    : seed_(seed) {
  const auto base = validate(q, n);
  q_ = q;
  p_ = base.p;
  e_ = base.e;
  n_ = n;
  dim_ = base.e * n;
  order_ = base.order;
  for (auto& c : modulus) c %= p_;
  fp::trim(modulus);
  if (fp::degree(modulus) != dim_ || modulus.back() != 1) {
    throw std::invalid_argument("FiniteFieldTower: modulus must be monic of degree " + std::to_string(dim_));
  }
  if (!fp::is_irreducible(modulus, p_)) throw std::invalid_argument("FiniteFieldTower: modulus is reducible over F_p");
  modulus_ = std::move(modulus);
  build_tables();
}

fp::Poly FiniteFieldTower::coefficients(Element a) const {
  fp::Poly c(static_cast<std::size_t>(dim_), 0);
  std::uint64_t v = a.code;
  for (int i = 0; i < dim_; ++i) {
    c[static_cast<std::size_t>(i)] = v % p_;
    v /= p_;
  }
  fp::trim(c);
  return c;
}

FiniteFieldTower::Element FiniteFieldTower::from_coefficients(const fp::Poly& c) const {
  fp::Poly r = fp::mod(c, modulus_, p_);
  std::uint64_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return {static_cast<std::uint32_t>(code)};
}

std::uint32_t FiniteFieldTower::add_codes_slow(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t out = 0, scale = 1;
  std::uint64_t x = a, y = b;
  for (int i = 0; i < dim_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<std::uint32_t>(out);
}

void FiniteFieldTower::build_tables() {
  const std::uint64_t units = order_ - 1;
  // Smallest-code generator of the unit group.
  const auto primes = nt::prime_divisors(units == 0 ? 1 : units);
  fp::Poly gen;
  for (std::uint64_t code = 1; code < order_; ++code) {
    fp::Poly c = coefficients({static_cast<std::uint32_t>(code)});
    bool ok = fp::powmod(c, units, modulus_, p_) == fp::Poly{1};
    for (auto r : primes) {
      if (!ok || units == 1) break;
      if (fp::powmod(c, units / r, modulus_, p_) == fp::Poly{1}) ok = false;
    }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen.empty()) throw std::logic_error("FiniteFieldTower: no generator found");

  exp_.assign(units, 0);
  log_.assign(order_, kNoLog);
  fp::Poly cur{1};
  for (std::uint64_t k = 0; k < units; ++k) {
    const auto code = from_coefficients(cur).code;
    if (log_[code] != kNoLog) throw std::logic_error("FiniteFieldTower: generator has small order");
    exp_[k] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    cur = fp::mulmod(cur, gen, modulus_, p_);
  }
  zech_.assign(units, kNoLog);
  for (std::uint64_t k = 0; k < units; ++k) {
    const auto s = add_codes_slow(1, exp_[k]);
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
  log_minus_one_ = (p_ == 2) ? 0 : static_cast<std::uint32_t>(units / 2);

  if (order_ <= kSurjectivityCheckLimit) {
    std::set<std::uint32_t> images;
    for (std::uint64_t k = 0; k < units; ++k) images.insert(norm(*this, Element{exp_[k]}).code);
    std::uint64_t base_units = 0;
    for (std::uint64_t code = 1; code < order_; ++code) {
      if (in_base_field(*this, Element{static_cast<std::uint32_t>(code)})) ++base_units;
    }
    surjectivity_verified_ = images.size() == base_units && base_units == q_ - 1;
    if (!surjectivity_verified_) throw std::logic_error("FiniteFieldTower: norm map is not onto L^x");
  }
}

std::uint32_t FiniteFieldTower::log(Element a) const {
  if (a.code == 0) throw std::domain_error("FiniteFieldTower: log of zero");
  return log_[a.code];
}

std::uint64_t FiniteFieldTower::unit_index(Element a) const { return log(a); }

FiniteFieldTower::Element FiniteFieldTower::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return {static_cast<std::uint32_t>(r)};
}

FiniteFieldTower::Element FiniteFieldTower::add(Element a, Element b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint64_t units = order_ - 1;
  const std::uint64_t la = log_[a.code], lb = log_[b.code];
  const std::uint32_t z = zech_[(lb + units - la) % units];
  if (z == kNoLog) return {0};
  return {exp_[(la + z) % units]};
}

FiniteFieldTower::Element FiniteFieldTower::neg(Element a) const {
  if (a.code == 0) return a;
  return {exp_[(log_[a.code] + log_minus_one_) % (order_ - 1)]};
}

FiniteFieldTower::Element FiniteFieldTower::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return {0};
  return {exp_[(static_cast<std::uint64_t>(log_[a.code]) + log_[b.code]) % (order_ - 1)]};
}

FiniteFieldTower::Element FiniteFieldTower::inv(Element a) const {
  if (a.code == 0) throw std::domain_error("FiniteFieldTower: inverse of zero");
  const std::uint64_t units = order_ - 1;
  return {exp_[(units - log_[a.code]) % units]};
}

FiniteFieldTower::Element FiniteFieldTower::sigma(Element a, long long power) const {
  if (a.code == 0) return a;
  long long k = power % n_;
  if (k < 0) k += n_;
  const std::uint64_t units = order_ - 1;
  const std::uint64_t factor = nt::pow_mod(q_, static_cast<std::uint64_t>(k), units);
  return {exp_[nt::mul_mod(log_[a.code], factor, units)]};
}

std::string FiniteFieldTower::to_string(Element a) const {
  const auto c = coefficients(a);
  std::vector<std::string> parts;
  for (auto v : c) parts.push_back(std::to_string(v));
  return format_polynomial(parts, 't');
}

FiniteFieldTower::Element FiniteFieldTower::parse(std::string_view text) const {
  const auto rat = parse_polynomial(text, 't');
  fp::Poly c(rat.size(), 0);
  for (std::size_t i = 0; i < rat.size(); ++i) {
    mpz_class num = rat[i].get_num() % static_cast<unsigned long>(p_);
    if (num < 0) num += static_cast<unsigned long>(p_);
    mpz_class den = rat[i].get_den() % static_cast<unsigned long>(p_);
    if (den == 0) throw std::invalid_argument("FiniteFieldTower: denominator divisible by the characteristic");
    c[i] = nt::mul_mod(num.get_ui(), fp::inv_mod_prime(den.get_ui(), p_), p_);
  }
  fp::trim(c);
  return from_coefficients(c);
}

FiniteFieldTower::Element FiniteFieldTower::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
  return {static_cast<std::uint32_t>(dist(rng))};
}

nlohmann::json FiniteFieldTower::to_json() const {
  nlohmann::json j;
  j["kind"] = "FiniteField";
  j["parameters"] = {{"q", q_}, {"n", n_}, {"p", p_}};
  j["modulus"] = modulus_;
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  return j;
}

}  // namespace cycalg
