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

#include "cycalg/partitions.hpp"

#include <cmath>
#include <stdexcept>

#include "cycalg/number_theory.hpp"
#include "cycalg/permutation.hpp"

namespace cycalg {

namespace {

void extend(std::uint32_t remaining, std::size_t from, const std::vector<std::uint32_t>& parts_desc, Partition& cur,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < parts_desc.size(); ++i) {
    const auto part = parts_desc[i];
    if (part > remaining) continue;
    cur.push_back(part);
    extend(remaining - part, i, parts_desc, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_pn(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_pn: n must be >= 1");
  std::vector<std::uint32_t> parts;
  for (auto d : nt::divisors(n)) parts.insert(parts.begin(), static_cast<std::uint32_t>(d));
  std::vector<Partition> out;
  Partition cur;
  extend(n, 0, parts, cur, out);
  return out;
}

std::uint64_t count_pn(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("count_pn: n must be >= 1");
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (auto d : nt::divisors(n)) {
    for (std::uint32_t s = static_cast<std::uint32_t>(d); s <= n; ++s) ways[s] += ways[s - d];
  }
  return ways[n];
}

std::map<Partition, std::uint64_t> torsion_classes_bruteforce(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("torsion_classes_bruteforce: n must be >= 1");
  if (n > 8) throw std::invalid_argument("torsion_classes_bruteforce: n > 8 is too large for an S_n sweep");
  std::map<Partition, std::uint64_t> classes;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Permutation k = Permutation::unrank(n, r);
    if (k.pow(n).is_identity()) ++classes[k.cycle_type()];
  }
  return classes;
}

BoundReport bound_report(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("bound_report: n must be >= 2");
  BoundReport r;
  r.n = n;
  r.tau = nt::divisor_count(n);
  r.pn = count_pn(n);
  const double logn = std::log(static_cast<double>(n));
  const double tau = static_cast<double>(r.tau);
  r.lower_envelope = std::exp((tau / 2 - 1) * logn);
  r.upper_envelope = std::exp(tau * logn / 2);
  return r;
}

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p); }

nlohmann::json to_json(const BoundReport& r) {
  return {{"n", r.n},
          {"tau", r.tau},
          {"pn", r.pn},
          {"lower_envelope", r.lower_envelope},
          {"upper_envelope", r.upper_envelope},
          {"assertive", false}};
}

}  // namespace cycalg
