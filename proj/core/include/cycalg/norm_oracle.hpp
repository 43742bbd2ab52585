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

#ifndef CYCALG_NORM_ORACLE_HPP
#define CYCALG_NORM_ORACLE_HPP

// Membership in the norm group Nm(K^x) for each tower model.
//
// Every positive answer carries a witness x whose norm has been recomputed
// and compared with b before returning. Where no decision procedure exists
// the answer is Unknown, never a guess.

#include <cstdint>
#include <optional>
#include <string>

#include "cycalg/cyclotomic.hpp"
#include "cycalg/finite_field.hpp"
#include "cycalg/padic.hpp"

namespace cycalg {

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

template <class E>
struct NormAnswer {
  Verdict verdict = Verdict::Unknown;
  std::optional<E> witness;
  std::string method;
  std::string detail;
};

enum class SearchStatus { Found, NoneExists, Exhausted };

std::string to_string(SearchStatus s);

template <class E>
struct PreimageSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<E> witness;
  std::uint64_t examined = 0;
};

/// Default shell height for the cyclotomic preimage search.
inline constexpr long kDefaultSearchHeight = 3;
inline constexpr std::uint64_t kDefaultSearchCandidates = std::uint64_t{1} << 20;

// All entry points reject b = 0 and b outside L with std::invalid_argument.

/// Always Yes over a finite field; the witness comes from a discrete log.
NormAnswer<FfElement> is_norm(const FiniteFieldTower& k, FfElement b);
/// Scans K in code order, up to `budget` elements.
PreimageSearch<FfElement> norm_preimage_search(const FiniteFieldTower& k, FfElement b, std::uint64_t budget);

/// Q(i)/Q is decided by the sum-of-two-squares rule; degree one is trivial;
/// anything else falls back to the bounded search (Yes or Unknown).
NormAnswer<CycElement> is_norm(const CyclotomicTower& k, const CycElement& b, long height = kDefaultSearchHeight);
/// Searches x = c / D with integer coefficients of max-norm <= height and
/// D in {1, denominator of b}, shell by shell.
PreimageSearch<CycElement> norm_preimage_search(const CyclotomicTower& k, const CycElement& b, long height,
                                                std::uint64_t max_candidates = kDefaultSearchCandidates);

/// No iff v(b) is not divisible by n (no lift attempted); otherwise solves
/// the residue equation and Hensel-lifts. Unknown when the lift does not
/// reach the precision of b or the residue field is too large.
NormAnswer<PadicElement> is_norm(const PadicTower& k, const PadicElement& b);
PreimageSearch<PadicElement> norm_preimage_search(const PadicTower& k, const PadicElement& b);

}  // namespace cycalg

#endif  // CYCALG_NORM_ORACLE_HPP
