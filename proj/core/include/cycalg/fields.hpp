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

#ifndef CYCALG_FIELDS_HPP
#define CYCALG_FIELDS_HPP

// A cyclic tower K/L is a field K together with an automorphism sigma of
// exact order n; L is the fixed field of sigma. Elements of L are stored as
// elements of K and recognised by sigma-invariance.
//
// Three models satisfy the CyclicTower concept:
//   FiniteFieldTower   F_{q^n} / F_q, sigma = q-power Frobenius
//   CyclotomicTower    Q(zeta_m) / fixed field of zeta -> zeta^s
//   PadicTower         unramified Q_{l^d} / fixed field of a Frobenius power

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cycalg {

template <class T>
concept CyclicTower = requires(const T& k, const typename T::Element& a, std::mt19937_64& rng, std::string_view text) {
  typename T::Element;
  { T::kExact } -> std::convertible_to<bool>;
  { T::kFinite } -> std::convertible_to<bool>;
  { k.degree() } -> std::convertible_to<int>;
  { k.zero() } -> std::same_as<typename T::Element>;
  { k.one() } -> std::same_as<typename T::Element>;
  { k.from_int(1L) } -> std::same_as<typename T::Element>;
  { k.add(a, a) } -> std::same_as<typename T::Element>;
  { k.sub(a, a) } -> std::same_as<typename T::Element>;
  { k.neg(a) } -> std::same_as<typename T::Element>;
  { k.mul(a, a) } -> std::same_as<typename T::Element>;
  { k.inv(a) } -> std::same_as<typename T::Element>;
  { k.sigma(a, 1LL) } -> std::same_as<typename T::Element>;
  { k.equal(a, a) } -> std::same_as<bool>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.parse(text) } -> std::same_as<typename T::Element>;
  { k.random(rng) } -> std::same_as<typename T::Element>;
  { k.to_json() } -> std::same_as<nlohmann::json>;
};

/// Finite towers additionally enumerate K and its unit group.
template <class T>
concept FiniteCyclicTower = CyclicTower<T> && T::kFinite && requires(const T& k, const typename T::Element& a, std::uint64_t i) {
  { k.order() } -> std::convertible_to<std::uint64_t>;
  { k.element_at(i) } -> std::same_as<typename T::Element>;
  { k.index_of(a) } -> std::convertible_to<std::uint64_t>;
  { k.unit_count() } -> std::convertible_to<std::uint64_t>;
  { k.unit_at(i) } -> std::same_as<typename T::Element>;
  { k.unit_index(a) } -> std::convertible_to<std::uint64_t>;
};

/// sigma^power(x); negative powers are reduced modulo n.
template <CyclicTower K>
typename K::Element apply_sigma(const K& k, const typename K::Element& x, long long power) {
  return k.sigma(x, power);
}

template <CyclicTower K>
typename K::Element power(const K& k, typename K::Element base, long long e) {
  if (e < 0) {
    base = k.inv(base);
    e = -e;
  }
  auto result = k.one();
  while (e > 0) {
    if (e & 1) result = k.mul(result, base);
    base = k.mul(base, base);
    e >>= 1;
  }
  return result;
}

/// Field norm N_{K/L}(x) = prod_{i<n} sigma^i(x).
template <CyclicTower K>
typename K::Element norm(const K& k, const typename K::Element& x) {
  auto result = x;
  for (int i = 1; i < k.degree(); ++i) result = k.mul(result, k.sigma(x, i));
  return result;
}

/// Field trace Tr_{K/L}(x) = sum_{i<n} sigma^i(x).
template <CyclicTower K>
typename K::Element trace(const K& k, const typename K::Element& x) {
  auto result = x;
  for (int i = 1; i < k.degree(); ++i) result = k.add(result, k.sigma(x, i));
  return result;
}

/// Membership in the fixed field L.
template <CyclicTower K>
bool in_base_field(const K& k, const typename K::Element& x) {
  return k.equal(k.sigma(x, 1), x);
}

/// A uniformly drawn nonzero element (rejection sampling).
template <CyclicTower K>
typename K::Element random_nonzero(const K& k, std::mt19937_64& rng) {
  for (;;) {
    auto x = k.random(rng);
    if (!k.is_zero(x)) return x;
  }
}

}  // namespace cycalg

#endif  // CYCALG_FIELDS_HPP
