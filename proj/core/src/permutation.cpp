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

#include "cycalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycalg {

std::uint64_t factorial(std::size_t n) {
  if (n > 20) throw std::overflow_error("factorial: n > 20 overflows 64 bits");
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::long_cycle(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      const auto to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > n || to == 0 || to > n) throw std::invalid_argument("Permutation::from_cycles: point out of range");
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::unrank(std::size_t n, std::uint64_t k) {
  if (k >= factorial(n)) throw std::out_of_range("Permutation::unrank: rank out of range");
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  std::vector<std::uint32_t> images;
  images.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t block = factorial(i - 1);
    const std::size_t idx = static_cast<std::size_t>(k / block);
    k %= block;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[rhs.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result(size());
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::rank() const {
  const std::size_t n = size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images_[j] < images_[i]) ++smaller;
    }
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<std::uint32_t> lengths;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t l = 1;
  for (auto len : cycle_type()) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(size(), false);
  bool any = false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace cycalg
