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

#ifndef CYCALG_FP_POLY_HPP
#define CYCALG_FP_POLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace cycalg::fp {

// Dense polynomials over the prime field F_p, coefficient i is the
// coefficient of x^i. The zero polynomial is the empty vector.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(const Poly& a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t exp, const Poly& m, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);

/// Inverse of a modulo m, nullopt when gcd(a, m) != 1.
std::optional<Poly> invmod(const Poly& a, const Poly& m, std::uint64_t p);

/// Rabin's irreducibility test for a polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);

/// True when x generates (F_p[x]/f)^x; f must be irreducible.
bool is_primitive(const Poly& f, std::uint64_t p);

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p);

}  // namespace cycalg::fp

#endif  // CYCALG_FP_POLY_HPP
