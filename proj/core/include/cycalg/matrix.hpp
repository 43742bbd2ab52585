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

#ifndef CYCALG_MATRIX_HPP
#define CYCALG_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cycalg/fields.hpp"

namespace cycalg {

/// Dense square matrix over a tower, row-major, 0-based.
template <class E>
struct Matrix {
  std::size_t n = 0;
  std::vector<E> a;

  E& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

template <CyclicTower K>
Matrix<typename K::Element> zero_matrix(const K& k, std::size_t n) {
  return {n, std::vector<typename K::Element>(n * n, k.zero())};
}

template <CyclicTower K>
Matrix<typename K::Element> identity_matrix(const K& k, std::size_t n) {
  auto m = zero_matrix(k, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

template <CyclicTower K>
Matrix<typename K::Element> mat_mul(const K& k, const Matrix<typename K::Element>& x,
                                    const Matrix<typename K::Element>& y) {
  if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
  auto out = zero_matrix(k, x.n);
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t l = 0; l < x.n; ++l) {
      if (k.is_zero(x(i, l))) continue;
      for (std::size_t j = 0; j < x.n; ++j) {
        if (k.is_zero(y(l, j))) continue;
        out(i, j) = k.add(out(i, j), k.mul(x(i, l), y(l, j)));
      }
    }
  }
  return out;
}

template <CyclicTower K>
bool mat_equal(const K& k, const Matrix<typename K::Element>& x, const Matrix<typename K::Element>& y) {
  if (x.n != y.n) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (!k.equal(x.a[i], y.a[i])) return false;
  }
  return true;
}

template <CyclicTower K>
bool mat_is_zero(const K& k, const Matrix<typename K::Element>& x) {
  for (const auto& e : x.a) {
    if (!k.is_zero(e)) return false;
  }
  return true;
}

namespace detail {

// Fraction-free elimination; each division is exact in the field.
template <CyclicTower K>
typename K::Element det_bareiss(const K& k, Matrix<typename K::Element> m) {
  const std::size_t n = m.n;
  if (n == 0) return k.one();
  bool negate = false;
  auto prev = k.one();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (k.is_zero(m(p, p))) {
      std::size_t r = p + 1;
      while (r < n && k.is_zero(m(r, p))) ++r;
      if (r == n) return k.zero();
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(r, c));
      negate = !negate;
    }
    const auto prev_inv = k.inv(prev);
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        auto t = k.sub(k.mul(m(p, p), m(i, j)), k.mul(m(i, p), m(p, j)));
        m(i, j) = k.mul(t, prev_inv);
      }
    }
    prev = m(p, p);
  }
  auto d = m(n - 1, n - 1);
  return negate ? k.neg(d) : d;
}

// Cofactor expansion along the first row; no division, so truncated
// arithmetic only loses the precision the products themselves lose.
template <CyclicTower K>
typename K::Element det_expand(const K& k, const Matrix<typename K::Element>& m) {
  const std::size_t n = m.n;
  if (n == 0) return k.one();
  if (n == 1) return m(0, 0);
  auto total = k.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (k.is_zero(m(0, c))) continue;
    Matrix<typename K::Element> minor{n - 1, {}};
    minor.a.reserve((n - 1) * (n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor.a.push_back(m(r, j));
      }
    }
    auto term = k.mul(m(0, c), det_expand(k, minor));
    total = (c % 2 == 0) ? k.add(total, term) : k.sub(total, term);
  }
  return total;
}

}  // namespace detail

/// Bareiss for exact towers, cofactor expansion otherwise.
template <CyclicTower K>
typename K::Element determinant(const K& k, const Matrix<typename K::Element>& m) {
  if constexpr (K::kExact) {
    return detail::det_bareiss(k, m);
  } else {
    if (m.n > 6) throw std::invalid_argument("determinant: expansion limited to n <= 6 over truncated towers");
    return detail::det_expand(k, m);
  }
}

/// Gauss-Jordan inverse; nullopt when singular (precision-singular over
/// truncated towers).
template <CyclicTower K>
std::optional<Matrix<typename K::Element>> inverse(const K& k, Matrix<typename K::Element> m) {
  const std::size_t n = m.n;
  auto inv = identity_matrix(k, n);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t best = n;
    for (std::size_t r = p; r < n; ++r) {
      if (k.is_zero(m(r, p))) continue;
      if constexpr (requires { k.valuation(m(r, p)); }) {
        if (best == n || k.valuation(m(r, p)) < k.valuation(m(best, p))) best = r;
      } else {
        best = r;
        break;
      }
    }
    if (best == n) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(p, c), m(best, c));
      std::swap(inv(p, c), inv(best, c));
    }
    const auto piv = k.inv(m(p, p));
    for (std::size_t c = 0; c < n; ++c) {
      m(p, c) = k.mul(m(p, c), piv);
      inv(p, c) = k.mul(inv(p, c), piv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == p || k.is_zero(m(r, p))) continue;
      const auto f = m(r, p);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = k.sub(m(r, c), k.mul(f, m(p, c)));
        inv(r, c) = k.sub(inv(r, c), k.mul(f, inv(p, c)));
      }
    }
  }
  return inv;
}

template <CyclicTower K>
bool is_invertible(const K& k, const Matrix<typename K::Element>& m) {
  return !k.is_zero(determinant(k, m));
}

/// JSON array of rows of element strings.
template <CyclicTower K>
nlohmann::json to_json(const K& k, const Matrix<typename K::Element>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(k.to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <CyclicTower K>
Matrix<typename K::Element> matrix_from_json(const K& k, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  Matrix<typename K::Element> m{j.size(), {}};
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != m.n) throw std::invalid_argument("matrix: rows must form a square array");
    for (const auto& e : row) {
      if (e.is_string()) m.a.push_back(k.parse(e.get<std::string>()));
      else if (e.is_number_integer()) m.a.push_back(k.from_int(e.get<long>()));
      else throw std::invalid_argument("matrix: entries must be strings or integers");
    }
  }
  return m;
}

}  // namespace cycalg

#endif  // CYCALG_MATRIX_HPP
