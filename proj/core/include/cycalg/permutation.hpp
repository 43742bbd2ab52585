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

#ifndef CYCALG_PERMUTATION_HPP
#define CYCALG_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cycalg {

/// A permutation of {0, ..., n-1}, stored as its image table.
///
/// Composition is function composition: (a * b)(i) = a(b(i)). With the
/// column convention used for monomial matrices (the nonzero entry of
/// column c sits in row perm(c)), the permutation matrix of a * b is the
/// product of the permutation matrices of a and b, so projection from
/// monomial matrices is a homomorphism for this product.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t n);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n) { return Permutation(n); }

  /// The n-cycle i -> i + 1 (mod n), written (1 2 ... n) in 1-based notation.
  static Permutation long_cycle(std::size_t n);

  /// Builds from 1-based cycles, e.g. {{1, 2}} for the transposition (1 2).
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  /// Inverse of rank(): the k-th permutation in lexicographic order.
  static Permutation unrank(std::size_t n, std::uint64_t k);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;
  bool is_identity() const;

  /// Lexicographic rank in [0, n!).
  std::uint64_t rank() const;

  /// Order of the permutation (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Cycle lengths in weakly decreasing order, fixed points included.
  std::vector<std::uint32_t> cycle_type() const;

  /// 1-based cycle notation, e.g. "(1 2 3)" or "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<std::uint32_t> images_;
};

std::uint64_t factorial(std::size_t n);

}  // namespace cycalg

#endif  // CYCALG_PERMUTATION_HPP
