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

#ifndef CYCALG_LOCALEX_HPP
#define CYCALG_LOCALEX_HPP

// The local example K = Q_l(mu_{p^k}) over L = K^{mu_n}, n | l - 1.
//
// K/Q_l is unramified of degree d_ext = ord_{p^k}(l), so K is modelled as
// the unramified extension of that degree and sigma as the Frobenius power
// of order n. The audits run the p-adic norm oracle and compare its verdict
// with the statements under test; disagreements are reported, not thrown.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycalg/finite_field.hpp"
#include "cycalg/padic.hpp"

namespace cycalg {

inline constexpr int kLocalDefaultPrecision = 64;
inline constexpr int kLocalMaxPrecision = 256;

struct LocalExampleParams {
  std::uint64_t l = 0;
  std::uint64_t p = 0;
  int k = 1;
  int n = 0;
  // Derived.
  std::uint64_t m = 0;
  std::uint64_t g = 0;
  int d_ext = 0;

  /// Validates and fills the derived fields; throws std::invalid_argument
  /// naming the failing constraint.
  static LocalExampleParams make(std::uint64_t l, std::uint64_t p, int k, int n);
};

nlohmann::json to_json(const LocalExampleParams& p);

struct Lemma42Report {
  std::uint64_t l = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t g = 0;
  std::uint64_t divisors_checked = 0;
  std::uint64_t hypotheses_met = 0;
  std::vector<std::uint64_t> counterexamples;  // offending d
};

/// Tests "g n^2 / d divides l - 1 implies d >= n" for every d | n^2.
Lemma42Report lemma42_check(std::uint64_t l, std::uint64_t n);

struct Lemma42Sweep {
  std::uint64_t max_l = 0;
  std::uint64_t pairs = 0;
  std::uint64_t divisors_checked = 0;
  std::vector<Lemma42Report> failures;
};

/// Every prime l <= max_l and every n | l - 1.
Lemma42Sweep lemma42_sweep(std::uint64_t max_l);

nlohmann::json to_json(const Lemma42Report& r);
nlohmann::json to_json(const Lemma42Sweep& r);

/// Teichmueller representative of a residue-field unit: the root of unity
/// congruent to `a`, found by Newton iteration on x^(l^d - 1) = 1.
PadicElement teichmuller_lift(const PadicTower& k, FfElement a);

/// Teichmueller lift of an element of exact order `order` in F_l^x;
/// requires order | l - 1.
PadicElement root_of_unity(const PadicTower& k, std::uint64_t order);

struct PowerResult {
  int w = 0;
  std::string verdict;
  std::string method;
  std::optional<std::string> witness;
  bool witness_valid = true;
  std::string detail;
};

/// One b under audit: the oracle's Wedderburn chain for b, b^2, ..., b^(n-1).
struct RootAudit {
  std::string label;              // "mu_gn" or "mu_n"
  std::uint64_t order = 0;        // b is a primitive order-th root of unity
  std::string b;
  bool b_order_verified = false;  // b^order = 1, b^(order/r) != 1
  std::vector<PowerResult> per_w_results;
  std::optional<int> wedderburn_index;  // nullopt when the chain hit unknown
  std::string division;                  // yes / no / unknown
  int precision = 0;
};

struct Prop43Report {
  LocalExampleParams params;
  std::vector<RootAudit> roots;  // both b choices
  bool expected_division = true;
  std::string agrees_with_paper;  // "true", "false" or "unknown", for the mu_gn root
  bool witnesses_sound = true;
};

Prop43Report audit_prop43(const LocalExampleParams& params, int prec = kLocalDefaultPrecision, std::uint64_t seed = 0);

struct Cor45Report {
  LocalExampleParams params;
  bool coprime = false;
  RootAudit root;  // b a primitive n-th root of unity
  std::string agrees_with_paper;
  bool witnesses_sound = true;
};

/// When `p` is not given, picks the smallest prime p != l with n | ord_p(l)
/// and a residue field small enough to tabulate.
Cor45Report audit_cor45(std::uint64_t l, int n, int prec = kLocalDefaultPrecision, std::optional<std::uint64_t> p = {},
                        std::uint64_t seed = 0);

/// Smallest admissible p for (l, n), if any below the search bound.
std::optional<std::uint64_t> choose_auxiliary_prime(std::uint64_t l, int n);

struct ProportionReport {
  std::uint64_t n = 0;
  std::uint64_t generators = 0;  // counted by gcd scan
  std::uint64_t phi = 0;         // Euler's function
  std::string proportion;        // phi / n in lowest terms
  bool counts_agree = false;
  // Valuation rule in an unramified model of degree n.
  bool valuation_rule_checked = false;
  std::uint64_t valuation_samples = 0;
  std::uint64_t valuation_mismatches = 0;
};

ProportionReport proportion_check(std::uint64_t n, std::uint64_t seed = 0);

nlohmann::json to_json(const RootAudit& r);
nlohmann::json to_json(const Prop43Report& r);
nlohmann::json to_json(const Cor45Report& r);
nlohmann::json to_json(const ProportionReport& r);

}  // namespace cycalg

#endif  // CYCALG_LOCALEX_HPP
