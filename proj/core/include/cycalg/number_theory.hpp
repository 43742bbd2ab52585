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

#ifndef CYCALG_NUMBER_THEORY_HPP
#define CYCALG_NUMBER_THEORY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cycalg::nt {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factorization = std::vector<std::pair<std::uint64_t, int>>;

bool is_prime(std::uint64_t n);
Factorization factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Order of a in (Z/m)^x; nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest generator of (Z/p)^x for prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// If q = p^e with p prime, returns (p, e).
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// Checked integer power; nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace cycalg::nt

#endif  // CYCALG_NUMBER_THEORY_HPP
