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

#ifndef CYCALG_PARTITIONS_HPP
#define CYCALG_PARTITIONS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

namespace cycalg {

/// Parts in weakly decreasing order.
using Partition = std::vector<std::uint32_t>;

/// Partitions of n whose parts all divide n, in strictly decreasing
/// lexicographic order. Requires n >= 1.
std::vector<Partition> enumerate_pn(std::uint32_t n);

/// p_n by dynamic programming over the divisors of n; agrees with
/// enumerate_pn(n).size() but does not materialise the list.
std::uint64_t count_pn(std::uint32_t n);

/// Walks all of S_n and groups the elements with k^n = 1 by cycle type;
/// values are class sizes. Requires 1 <= n <= 8.
std::map<Partition, std::uint64_t> torsion_classes_bruteforce(std::uint32_t n);

/// The two envelope expressions around p_n with their O-terms dropped.
/// Diagnostic only: the constants hidden in the O-terms are unknown.
struct BoundReport {
  std::uint32_t n = 0;
  std::uint64_t tau = 0;
  std::uint64_t pn = 0;
  double lower_envelope = 0;
  double upper_envelope = 0;
};

/// Requires n >= 2.
BoundReport bound_report(std::uint32_t n);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const BoundReport& r);

}  // namespace cycalg

#endif  // CYCALG_PARTITIONS_HPP
