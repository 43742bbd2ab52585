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

#include "cycalg/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycalg/number_theory.hpp"

namespace cycalg::fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  Poly t = a;
  trim(t);
  return static_cast<int>(t.size()) - 1;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i] % p) % p;
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(out);
  return out;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = nt::mul_mod(a[i], c, p);
  trim(out);
  return out;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inv_mod_prime: zero has no inverse");
  return nt::pow_mod(a, p - 2, p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly divisor = b;
  trim(divisor);
  if (divisor.empty()) throw std::domain_error("fp::divmod: division by zero polynomial");
  Poly rem = a;
  for (auto& c : rem) c %= p;
  trim(rem);
  const std::size_t db = divisor.size() - 1;
  if (rem.size() < divisor.size()) return {Poly{}, rem};
  Poly quot(rem.size() - db, 0);
  const std::uint64_t lead_inv = inv_mod_prime(divisor.back(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    const std::uint64_t coef = nt::mul_mod(rem[i], lead_inv, p);
    if (coef == 0) continue;
    quot[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = (rem[i - db + j] + p - nt::mul_mod(coef, divisor[j], p)) % p;
    }
  }
  trim(rem);
  trim(quot);
  return {quot, rem};
}

Poly mod(const Poly& a, const Poly& m, std::uint64_t p) { return divmod(a, m, p).second; }

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return mod(mul(a, b, p), m, p);
}

Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = mod(result, m, p);
  base = mod(base, m, p);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

Poly monic(const Poly& a, std::uint64_t p) {
  Poly t = a;
  trim(t);
  if (t.empty()) return t;
  return scale(t, inv_mod_prime(t.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

std::optional<Poly> invmod(const Poly& a, const Poly& m, std::uint64_t p) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = mod(a, m, p);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) return std::nullopt;
  return mod(scale(s0, inv_mod_prime(r0[0], p), p), m, p);
}

namespace {

// x^(p^k) mod f by k successive p-th powers.
Poly frobenius_power_of_x(const Poly& f, std::uint64_t p, int k) {
  Poly x = mod(Poly{0, 1}, f, p);
  for (int i = 0; i < k; ++i) x = powmod(x, p, f, p);
  return x;
}

}  // namespace

bool is_irreducible(const Poly& f_in, std::uint64_t p) {
  Poly f = monic(f_in, p);
  const int d = degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  if (sub(frobenius_power_of_x(f, p, d), mod(x, f, p), p).size() != 0) return false;
  for (std::uint64_t r : nt::prime_divisors(static_cast<std::uint64_t>(d))) {
    Poly h = sub(frobenius_power_of_x(f, p, d / static_cast<int>(r)), mod(x, f, p), p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

bool is_primitive(const Poly& f, std::uint64_t p) {
  const int d = degree(f);
  auto order = nt::checked_pow(p, static_cast<unsigned>(d));
  if (!order) throw std::invalid_argument("fp::is_primitive: field too large");
  const std::uint64_t group = *order - 1;
  const Poly x{0, 1};
  if (powmod(x, group, f, p) != Poly{1}) return false;
  for (std::uint64_t r : nt::prime_divisors(group)) {
    if (powmod(x, group / r, f, p) == Poly{1}) return false;
  }
  return true;
}

}  // namespace cycalg::fp
