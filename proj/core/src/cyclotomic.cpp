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

#include "cycalg/cyclotomic.hpp"

#include <stdexcept>

#include "cycalg/number_theory.hpp"
#include "cycalg/poly_parse.hpp"

namespace cycalg {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly poly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial; the remainder must vanish.
ZPoly exact_div(ZPoly a, const ZPoly& monic) {
  trim(a);
  const std::size_t d = monic.size() - 1;
  if (a.size() < monic.size()) throw std::logic_error("cyclotomic: inexact division");
  ZPoly q(a.size() - d, 0);
  for (std::size_t i = a.size(); i-- > d;) {
    const mpz_class c = a[i];
    q[i - d] = c;
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * monic[j];
  }
  trim(a);
  if (!a.empty()) throw std::logic_error("cyclotomic: inexact division");
  return q;
}

ZPoly cyclotomic_poly(std::uint64_t m) {
  ZPoly num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (auto d : nt::divisors(m)) {
    if (d == m) continue;
    num = exact_div(num, cyclotomic_poly(d));
  }
  return num;
}

}  // namespace

CyclotomicTower::CyclotomicTower(std::uint64_t m, std::uint64_t s) : m_(m), s_(s % (m == 0 ? 1 : m)) {
  if (m < 1) throw std::invalid_argument("CyclotomicTower: conductor m must be >= 1");
  if (m > 4096) throw std::invalid_argument("CyclotomicTower: conductor above 4096 is outside desk scale");
  auto order = nt::multiplicative_order(s_, m_);
  if (!order) throw std::invalid_argument("CyclotomicTower: s must be a unit modulo m");
  n_ = static_cast<int>(*order);
  cyclo_ = cyclotomic_poly(m_);
  phi_ = cyclo_.size() - 1;
  powers_.resize(m_);
  ZPoly cur{1};
  for (std::uint64_t k = 0; k < m_; ++k) {
    cur.resize(phi_, 0);
    powers_[k] = cur;
    ZPoly next(phi_ + 1, 0);
    for (std::size_t i = 0; i < phi_; ++i) next[i + 1] = cur[i];
    cur = reduce(std::move(next));
  }
  for (std::uint64_t a = 1; a <= m_; ++a) {
    if (nt::gcd(a % m_, m_) == 1) units_.push_back(a % m_);
  }
}

std::vector<mpz_class> CyclotomicTower::reduce(std::vector<mpz_class> poly) const {
  for (std::size_t k = poly.size(); k-- > phi_;) {
    const mpz_class c = poly[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= phi_; ++j) poly[k - phi_ + j] -= c * cyclo_[j];
  }
  poly.resize(phi_, 0);
  return poly;
}

void CyclotomicTower::normalize(Element& x) const {
  if (x.den == 0) throw std::domain_error("CyclotomicTower: zero denominator");
  x.num.resize(phi_, 0);
  if (x.den < 0) {
    x.den = -x.den;
    for (auto& c : x.num) c = -c;
  }
  mpz_class g = x.den;
  for (const auto& c : x.num) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  bool all_zero = true;
  for (const auto& c : x.num) all_zero = all_zero && c == 0;
  if (all_zero) {
    x.den = 1;
    return;
  }
  for (auto& c : x.num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(x.den.get_mpz_t(), x.den.get_mpz_t(), g.get_mpz_t());
}

CyclotomicTower::Element CyclotomicTower::make(std::vector<mpz_class> num, mpz_class den) const {
  if (num.size() > phi_) num = reduce(std::move(num));
  Element x{std::move(num), std::move(den)};
  normalize(x);
  return x;
}

CyclotomicTower::Element CyclotomicTower::zero() const { return Element{ZPoly(phi_, 0), 1}; }

CyclotomicTower::Element CyclotomicTower::from_int(long v) const {
  Element x = zero();
  x.num[0] = v;
  return x;
}

CyclotomicTower::Element CyclotomicTower::from_rational(const mpq_class& v) const {
  Element x = zero();
  x.num[0] = v.get_num();
  x.den = v.get_den();
  normalize(x);
  return x;
}

CyclotomicTower::Element CyclotomicTower::zeta() const { return make(powers_[1 % m_]); }

bool CyclotomicTower::is_zero(const Element& a) const {
  for (const auto& c : a.num) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicTower::Element CyclotomicTower::add(const Element& a, const Element& b) const {
  Element x;
  x.num.resize(phi_);
  for (std::size_t i = 0; i < phi_; ++i) x.num[i] = a.num[i] * b.den + b.num[i] * a.den;
  x.den = a.den * b.den;
  normalize(x);
  return x;
}

CyclotomicTower::Element CyclotomicTower::neg(const Element& a) const {
  Element x = a;
  for (auto& c : x.num) c = -c;
  return x;
}

CyclotomicTower::Element CyclotomicTower::mul(const Element& a, const Element& b) const {
  Element x{reduce(poly_mul(a.num, b.num)), a.den * b.den};
  normalize(x);
  return x;
}

CyclotomicTower::Element CyclotomicTower::galois(const Element& x, std::uint64_t a) const {
  a %= m_;
  if (nt::gcd(a, m_) != 1) throw std::invalid_argument("CyclotomicTower::galois: exponent must be a unit mod m");
  Element out = zero();
  for (std::size_t i = 0; i < phi_; ++i) {
    if (x.num[i] == 0) continue;
    const auto& image = powers_[(i * a) % m_];
    for (std::size_t j = 0; j < phi_; ++j) out.num[j] += x.num[i] * image[j];
  }
  out.den = x.den;
  normalize(out);
  return out;
}

CyclotomicTower::Element CyclotomicTower::sigma(const Element& a, long long power) const {
  long long k = power % n_;
  if (k < 0) k += n_;
  return galois(a, nt::pow_mod(s_, static_cast<std::uint64_t>(k), m_));
}

CyclotomicTower::Element CyclotomicTower::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("CyclotomicTower: inverse of zero");
  // a^{-1} = (product of the other conjugates) / N_{K/Q}(a).
  Element others = one();
  for (auto u : units_) {
    if (u == 1 % m_) continue;
    others = mul(others, galois(a, u));
  }
  const auto total = to_rational(mul(a, others));
  if (!total) throw std::logic_error("CyclotomicTower: absolute norm is not rational");
  return mul(others, from_rational(1 / *total));
}

std::optional<mpq_class> CyclotomicTower::to_rational(const Element& x) const {
  for (std::size_t i = 1; i < phi_; ++i) {
    if (x.num[i] != 0) return std::nullopt;
  }
  mpq_class q(x.num[0], x.den);
  q.canonicalize();
  return q;
}

std::string CyclotomicTower::to_string(const Element& a) const {
  std::vector<std::string> parts;
  for (const auto& c : a.num) {
    mpq_class q(c, a.den);
    q.canonicalize();
    parts.push_back(q.get_str());
  }
  return format_polynomial(parts, 'z');
}

CyclotomicTower::Element CyclotomicTower::parse(std::string_view text) const {
  const auto rat = parse_polynomial(text, 'z');
  mpz_class den = 1;
  for (const auto& c : rat) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Element out = zero();
  for (std::size_t i = 0; i < rat.size(); ++i) {
    if (rat[i] == 0) continue;
    const mpz_class scaled = rat[i].get_num() * (den / rat[i].get_den());
    const auto& image = powers_[i % m_];
    for (std::size_t j = 0; j < phi_; ++j) out.num[j] += scaled * image[j];
  }
  out.den = den;
  normalize(out);
  return out;
}

CyclotomicTower::Element CyclotomicTower::random(std::mt19937_64& rng, long height) const {
  std::uniform_int_distribution<long> coef(-height, height);
  std::uniform_int_distribution<long> den(1, 3);
  ZPoly num(phi_);
  for (auto& c : num) c = coef(rng);
  return make(std::move(num), den(rng));
}

nlohmann::json CyclotomicTower::to_json() const {
  nlohmann::json j;
  j["kind"] = "Cyclotomic";
  j["parameters"] = {{"m", m_}, {"s", s_}, {"n", n_}};
  std::vector<std::string> mod;
  for (const auto& c : cyclo_) mod.push_back(c.get_str());
  j["modulus"] = mod;
  j["seed"] = nullptr;
  return j;
}

}  // namespace cycalg
