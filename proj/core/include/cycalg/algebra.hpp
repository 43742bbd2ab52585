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

#ifndef CYCALG_ALGEBRA_HPP
#define CYCALG_ALGEBRA_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycalg/fields.hpp"
#include "cycalg/matrix.hpp"
#include "cycalg/norm_oracle.hpp"
#include "cycalg/number_theory.hpp"

namespace cycalg {

/// a_1 + a_2 j + ... + a_n j^(n-1); coeffs[i] multiplies j^i.
template <class E>
struct AlgebraElement {
  std::uint64_t parent = 0;
  std::vector<E> coeffs;
};

inline std::uint64_t next_algebra_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

/// The cyclic algebra (K/L, sigma, b): generated over K by j with j^n = b
/// and j k = sigma(k) j.
template <CyclicTower K>
class CyclicAlgebra {
public:
  using E = typename K::Element;
  using Element = AlgebraElement<E>;

  CyclicAlgebra(const K& k, E b) : k_(&k), b_(std::move(b)), id_(next_algebra_id()) {
    if (k.is_zero(b_)) throw std::invalid_argument("CyclicAlgebra: b must be nonzero");
    if (!in_base_field(k, b_)) throw std::invalid_argument("CyclicAlgebra: b must be fixed by sigma");
    b_inv_ = k.inv(b_);
  }

  const K& tower() const { return *k_; }
  const E& b() const { return b_; }
  const E& b_inv() const { return b_inv_; }
  int n() const { return k_->degree(); }

  Element make(std::vector<E> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(n())) throw std::invalid_argument("AlgebraElement: need n coefficients");
    return {id_, std::move(coeffs)};
  }
  Element zero() const { return make(std::vector<E>(static_cast<std::size_t>(n()), k_->zero())); }
  Element scalar(const E& a) const {
    auto x = zero();
    x.coeffs[0] = a;
    return x;
  }
  Element one() const { return scalar(k_->one()); }
  /// j^i for 0 <= i < n.
  Element j_power(int i) const {
    auto x = zero();
    x.coeffs[static_cast<std::size_t>(i % n())] = k_->one();
    return x;
  }
  Element j() const { return j_power(1 % n()); }

  Element random(std::mt19937_64& rng) const {
    std::vector<E> c;
    for (int i = 0; i < n(); ++i) c.push_back(k_->random(rng));
    return make(std::move(c));
  }

  bool is_zero(const Element& x) const {
    check(x);
    for (const auto& c : x.coeffs) {
      if (!k_->is_zero(c)) return false;
    }
    return true;
  }

  bool equal(const Element& x, const Element& y) const {
    check(x);
    check(y);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
      if (!k_->equal(x.coeffs[i], y.coeffs[i])) return false;
    }
    return true;
  }

  Element add(const Element& x, const Element& y) const {
    check(x);
    check(y);
    auto out = zero();
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = k_->add(x.coeffs[i], y.coeffs[i]);
    return out;
  }

  /// (x_i j^i)(y_k j^k) = x_i sigma^i(y_k) j^(i+k), with j^n = b.
  Element multiply(const Element& x, const Element& y) const {
    check(x);
    check(y);
    const int nn = n();
    auto out = zero();
    for (int i = 0; i < nn; ++i) {
      const auto& xi = x.coeffs[static_cast<std::size_t>(i)];
      if (k_->is_zero(xi)) continue;
      for (int l = 0; l < nn; ++l) {
        const auto& yl = y.coeffs[static_cast<std::size_t>(l)];
        if (k_->is_zero(yl)) continue;
        auto term = k_->mul(xi, k_->sigma(yl, i));
        if (i + l >= nn) term = k_->mul(term, b_);
        auto& slot = out.coeffs[static_cast<std::size_t>((i + l) % nn)];
        slot = k_->add(slot, term);
      }
    }
    return out;
  }

  /// Right-multiplication matrix: entry (r, c) = sigma^r(a_{c-r mod n}),
  /// times b where c < r.
  Matrix<E> to_matrix(const Element& x) const {
    check(x);
    const std::size_t nn = static_cast<std::size_t>(n());
    Matrix<E> m = zero_matrix(*k_, nn);
    for (std::size_t r = 0; r < nn; ++r) {
      for (std::size_t c = 0; c < nn; ++c) {
        auto e = k_->sigma(x.coeffs[(c + nn - r) % nn], static_cast<long long>(r));
        if (c < r) e = k_->mul(e, b_);
        m(r, c) = std::move(e);
      }
    }
    return m;
  }

  /// The element whose matrix has first row equal to m's first row.
  Element from_first_row(const Matrix<E>& m) const {
    if (m.n != static_cast<std::size_t>(n())) throw std::invalid_argument("from_first_row: size mismatch");
    std::vector<E> c(m.a.begin(), m.a.begin() + static_cast<std::ptrdiff_t>(m.n));
    return make(std::move(c));
  }

  /// True when m has the shape of an embedded algebra element.
  bool is_embedded(const Matrix<E>& m) const {
    return m.n == static_cast<std::size_t>(n()) && mat_equal(*k_, to_matrix(from_first_row(m)), m);
  }

  /// Determinant of to_matrix(x); always lands in L, and a violation throws.
  E reduced_norm(const Element& x) const {
    auto d = determinant(*k_, to_matrix(x));
    if (!in_base_field(*k_, d)) throw std::logic_error("reduced_norm: determinant is not fixed by sigma");
    return d;
  }

  nlohmann::json to_json(const Element& x) const {
    check(x);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : x.coeffs) out.push_back(k_->to_string(c));
    return out;
  }

  Element from_json(const nlohmann::json& j) const {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n())) {
      throw std::invalid_argument("AlgebraElement: expected an array of n coefficients");
    }
    std::vector<E> c;
    for (const auto& e : j) c.push_back(e.is_string() ? k_->parse(e.template get<std::string>()) : k_->from_int(e.template get<long>()));
    return make(std::move(c));
  }

private:
  void check(const Element& x) const {
    if (x.parent != id_) throw std::invalid_argument("CyclicAlgebra: element belongs to a different algebra");
  }

  const K* k_;
  E b_;
  E b_inv_;
  std::uint64_t id_;
};

enum class IndexStatus { Found, Unknown, ExceedsBound };

inline std::string to_string(IndexStatus s) {
  switch (s) {
    case IndexStatus::Found: return "found";
    case IndexStatus::Unknown: return "unknown";
    case IndexStatus::ExceedsBound: return "exceeds_bound";
  }
  return "unknown";
}

struct WedderburnResult {
  IndexStatus status = IndexStatus::Unknown;
  int index = 0;                     // meaningful when status == Found
  std::vector<Verdict> chain;        // is_norm(b^l) for l = 1, 2, ...
  std::vector<std::string> witnesses;
};

/// Smallest l <= max_l with b^l a norm. An unknown membership before any
/// yes makes the whole answer unknown.
template <CyclicTower K>
WedderburnResult wedderburn_index(const CyclicAlgebra<K>& a, int max_l = 0) {
  const K& k = a.tower();
  if (max_l == 0) max_l = a.n();
  if (max_l < 1) throw std::invalid_argument("wedderburn_index: max_l must be >= 1");
  WedderburnResult out;
  auto bl = k.one();
  for (int l = 1; l <= max_l; ++l) {
    bl = k.mul(bl, a.b());
    const auto ans = is_norm(k, bl);
    out.chain.push_back(ans.verdict);
    out.witnesses.push_back(ans.witness ? k.to_string(*ans.witness) : std::string());
    if (ans.verdict == Verdict::Unknown) {
      out.status = IndexStatus::Unknown;
      return out;
    }
    if (ans.verdict == Verdict::Yes) {
      out.status = IndexStatus::Found;
      out.index = l;
      return out;
    }
  }
  out.status = IndexStatus::ExceedsBound;
  return out;
}

/// Wedderburn's criterion: division iff the index equals n.
template <CyclicTower K>
Verdict is_division(const CyclicAlgebra<K>& a) {
  const auto w = wedderburn_index(a);
  if (w.status != IndexStatus::Found) return Verdict::Unknown;
  return w.index == a.n() ? Verdict::Yes : Verdict::No;
}

/// Independent cross-checks of the division verdict on a finite algebra.
struct DivisionCrossCheck {
  std::uint64_t algebra_size = 0;
  Verdict by_index = Verdict::Unknown;
  SearchStatus zero_divisor = SearchStatus::Exhausted;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> zero_divisor_pair;  // element indices
  bool noninvertible_found = false;          // some nonzero x with x y != 1 for every y
  std::optional<std::uint64_t> units_by_pairs;       // full inverse search, small algebras only
  std::optional<std::uint64_t> units_by_determinant;
  bool consistent = false;
};

/// Element number `idx` of a finite algebra: base-|K| digits are the
/// coefficient indices.
template <FiniteCyclicTower K>
AlgebraElement<typename K::Element> algebra_element_at(const CyclicAlgebra<K>& a, std::uint64_t idx) {
  const K& k = a.tower();
  std::vector<typename K::Element> c;
  for (int i = 0; i < a.n(); ++i) {
    c.push_back(k.element_at(idx % k.order()));
    idx /= k.order();
  }
  return a.make(std::move(c));
}

template <FiniteCyclicTower K>
DivisionCrossCheck division_cross_check(const CyclicAlgebra<K>& a, std::uint64_t max_elements = std::uint64_t{1} << 20,
                                        std::uint64_t max_pairs = std::uint64_t{1} << 26,
                                        std::uint64_t full_unit_count_limit = std::uint64_t{1} << 12) {
  const K& k = a.tower();
  DivisionCrossCheck out;
  const auto size = nt::checked_pow(k.order(), static_cast<unsigned>(a.n()));
  if (!size || *size > max_elements) throw std::invalid_argument("division_cross_check: algebra exceeds the exhaustive cap");
  out.algebra_size = *size;
  out.by_index = is_division(a);

  // Zero divisors by direct multiplication.
  std::uint64_t pairs = 0;
  bool complete = true;
  for (std::uint64_t x = 1; x < *size && !out.zero_divisor_pair; ++x) {
    const auto ex = algebra_element_at(a, x);
    for (std::uint64_t y = 1; y < *size; ++y) {
      if (++pairs > max_pairs) {
        complete = false;
        break;
      }
      if (a.is_zero(a.multiply(ex, algebra_element_at(a, y)))) {
        out.zero_divisor_pair = std::make_pair(x, y);
        break;
      }
    }
    if (!complete) break;
  }
  out.zero_divisor = out.zero_divisor_pair ? SearchStatus::Found : (complete ? SearchStatus::NoneExists : SearchStatus::Exhausted);

  // A nonzero element without a right or left inverse.
  if (out.zero_divisor_pair) {
    const auto x = algebra_element_at(a, out.zero_divisor_pair->first);
    const auto one = a.one();
    bool has_inverse = false;
    for (std::uint64_t y = 0; y < *size && !has_inverse; ++y) {
      const auto ey = algebra_element_at(a, y);
      has_inverse = a.equal(a.multiply(x, ey), one) || a.equal(a.multiply(ey, x), one);
    }
    out.noninvertible_found = !has_inverse;
  }

  if (*size <= full_unit_count_limit) {
    const auto one = a.one();
    std::uint64_t units = 0, det_units = 0;
    for (std::uint64_t x = 1; x < *size; ++x) {
      const auto ex = algebra_element_at(a, x);
      for (std::uint64_t y = 1; y < *size; ++y) {
        const auto ey = algebra_element_at(a, y);
        if (a.equal(a.multiply(ex, ey), one) && a.equal(a.multiply(ey, ex), one)) {
          ++units;
          break;
        }
      }
      if (!k.is_zero(a.reduced_norm(ex))) ++det_units;
    }
    out.units_by_pairs = units;
    out.units_by_determinant = det_units;
  }

  const bool division_by_search = out.zero_divisor == SearchStatus::NoneExists;
  const bool division_by_units = !out.noninvertible_found && (!out.units_by_pairs || *out.units_by_pairs == *size - 1);
  out.consistent = out.by_index != Verdict::Unknown && out.zero_divisor != SearchStatus::Exhausted &&
                   (out.by_index == Verdict::Yes) == division_by_search && division_by_search == division_by_units &&
                   (!out.units_by_pairs || *out.units_by_pairs == *out.units_by_determinant);
  return out;
}

inline nlohmann::json to_json(const WedderburnResult& w) {
  nlohmann::json chain = nlohmann::json::array();
  for (auto v : w.chain) chain.push_back(to_string(v));
  return {{"status", to_string(w.status)},
          {"index", w.status == IndexStatus::Found ? nlohmann::json(w.index) : nlohmann::json(nullptr)},
          {"chain", chain},
          {"witnesses", w.witnesses}};
}

inline nlohmann::json to_json(const DivisionCrossCheck& d) {
  auto opt = [](const std::optional<std::uint64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"algebra_size", d.algebra_size},
          {"by_index", to_string(d.by_index)},
          {"zero_divisor", to_string(d.zero_divisor)},
          {"zero_divisor_pair", d.zero_divisor_pair ? nlohmann::json({d.zero_divisor_pair->first, d.zero_divisor_pair->second})
                                                    : nlohmann::json(nullptr)},
          {"noninvertible_found", d.noninvertible_found},
          {"units_by_pairs", opt(d.units_by_pairs)},
          {"units_by_determinant", opt(d.units_by_determinant)},
          {"consistent", d.consistent}};
}

}  // namespace cycalg

#endif  // CYCALG_ALGEBRA_HPP
