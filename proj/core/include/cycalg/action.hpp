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

#ifndef CYCALG_ACTION_HPP
#define CYCALG_ACTION_HPP

// The action of sigma on GL_n(K) whose fixed points are the embedded units
// of the cyclic algebra, its restriction to monomial matrices, and the
// induced action on the Weyl group.
//
// Permutation convention: a monomial matrix M has its column-c entry in
// row perm(c). Then the matrix of perm_a * perm_b (function composition)
// is the product of the matrices, so weyl_project is a homomorphism.
// Sigma acts on permutations by conjugation with c = (1 2 ... n).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cycalg/algebra.hpp"
#include "cycalg/fields.hpp"
#include "cycalg/matrix.hpp"
#include "cycalg/number_theory.hpp"
#include "cycalg/permutation.hpp"

namespace cycalg {

/// One application of sigma, without the invertibility check.
template <CyclicTower K>
Matrix<typename K::Element> sigma_act_once(const CyclicAlgebra<K>& a, const Matrix<typename K::Element>& m) {
  const K& k = a.tower();
  const std::size_t n = m.n;
  auto out = zero_matrix(k, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& src = m((i + n - 1) % n, (j + n - 1) % n);
      if (k.is_zero(src)) continue;
      auto e = k.sigma(src, 1);
      if (i == 0 && j > 0) e = k.mul(a.b_inv(), e);
      else if (i > 0 && j == 0) e = k.mul(a.b(), e);
      out(i, j) = std::move(e);
    }
  }
  return out;
}

/// sigma^power . M, applying the entry rule `power` times. Rejects
/// singular M (precision-singular over truncated towers).
template <CyclicTower K>
Matrix<typename K::Element> sigma_act(const CyclicAlgebra<K>& a, const Matrix<typename K::Element>& m, long long power = 1) {
  if (power < 0) throw std::invalid_argument("sigma_act: power must be >= 0");
  if (m.n != static_cast<std::size_t>(a.n())) throw std::invalid_argument("sigma_act: matrix size must equal n");
  if (!is_invertible(a.tower(), m)) throw std::invalid_argument("sigma_act: matrix is singular");
  auto out = m;
  for (long long i = 0; i < power; ++i) out = sigma_act_once(a, out);
  return out;
}

// --- monomial matrices ----------------------------------------------------

template <class E>
struct MonomialMatrix {
  Permutation perm;
  std::vector<E> scalars;  // scalars[c] sits at (perm(c), c)
};

template <CyclicTower K>
MonomialMatrix<typename K::Element> monomial_identity(const K& k, std::size_t n) {
  return {Permutation(n), std::vector<typename K::Element>(n, k.one())};
}

template <CyclicTower K>
Matrix<typename K::Element> to_dense(const K& k, const MonomialMatrix<typename K::Element>& m) {
  auto out = zero_matrix(k, m.perm.size());
  for (std::size_t c = 0; c < m.perm.size(); ++c) out(m.perm(c), c) = m.scalars[c];
  return out;
}

/// The monomial form of a dense matrix, if it has exactly one nonzero
/// entry in every row and column.
template <CyclicTower K>
std::optional<MonomialMatrix<typename K::Element>> to_monomial(const K& k, const Matrix<typename K::Element>& m) {
  std::vector<std::uint32_t> images(m.n);
  std::vector<typename K::Element> scalars;
  std::vector<bool> row_used(m.n, false);
  for (std::size_t c = 0; c < m.n; ++c) {
    std::optional<std::size_t> row;
    for (std::size_t r = 0; r < m.n; ++r) {
      if (k.is_zero(m(r, c))) continue;
      if (row) return std::nullopt;
      row = r;
    }
    if (!row || row_used[*row]) return std::nullopt;
    row_used[*row] = true;
    images[c] = static_cast<std::uint32_t>(*row);
    scalars.push_back(m(*row, c));
  }
  return MonomialMatrix<typename K::Element>{Permutation(std::move(images)), std::move(scalars)};
}

template <CyclicTower K>
MonomialMatrix<typename K::Element> monomial_mul(const K& k, const MonomialMatrix<typename K::Element>& x,
                                                 const MonomialMatrix<typename K::Element>& y) {
  MonomialMatrix<typename K::Element> out{x.perm * y.perm, {}};
  out.scalars.reserve(y.scalars.size());
  for (std::size_t c = 0; c < y.scalars.size(); ++c) out.scalars.push_back(k.mul(x.scalars[y.perm(c)], y.scalars[c]));
  return out;
}

template <CyclicTower K>
MonomialMatrix<typename K::Element> monomial_inv(const K& k, const MonomialMatrix<typename K::Element>& x) {
  MonomialMatrix<typename K::Element> out{x.perm.inverse(), std::vector<typename K::Element>(x.scalars.size(), k.zero())};
  for (std::size_t c = 0; c < x.scalars.size(); ++c) out.scalars[x.perm(c)] = k.inv(x.scalars[c]);
  return out;
}

template <CyclicTower K>
bool monomial_equal(const K& k, const MonomialMatrix<typename K::Element>& x, const MonomialMatrix<typename K::Element>& y) {
  if (x.perm != y.perm) return false;
  for (std::size_t c = 0; c < x.scalars.size(); ++c) {
    if (!k.equal(x.scalars[c], y.scalars[c])) return false;
  }
  return true;
}

/// sigma . M computed directly on the monomial form.
template <CyclicTower K>
MonomialMatrix<typename K::Element> monomial_sigma_act(const CyclicAlgebra<K>& a, const MonomialMatrix<typename K::Element>& m) {
  const K& k = a.tower();
  const std::size_t n = m.perm.size();
  std::vector<std::uint32_t> images(n);
  std::vector<typename K::Element> scalars;
  scalars.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = (j + n - 1) % n;
    const std::uint32_t row = static_cast<std::uint32_t>((m.perm(src) + 1) % n);
    images[j] = row;
    auto e = k.sigma(m.scalars[src], 1);
    if (row == 0 && j > 0) e = k.mul(a.b_inv(), e);
    else if (row > 0 && j == 0) e = k.mul(a.b(), e);
    scalars.push_back(std::move(e));
  }
  return {Permutation(std::move(images)), std::move(scalars)};
}

template <class E>
Permutation weyl_project(const MonomialMatrix<E>& m) {
  return m.perm;
}

/// c w c^{-1} with c = (1 2 ... n).
inline Permutation weyl_sigma_act(const Permutation& w) {
  const auto c = Permutation::long_cycle(w.size());
  return c * w * c.inverse();
}

template <CyclicTower K>
nlohmann::json to_json(const K& k, const MonomialMatrix<typename K::Element>& m) {
  nlohmann::json s = nlohmann::json::array();
  for (const auto& e : m.scalars) s.push_back(k.to_string(e));
  return {{"perm", m.perm.to_cycle_string()}, {"scalars", s}};
}

// --- verification harnesses -----------------------------------------------

struct FixedPointReport {
  std::string mode;                  // "exhaustive" or "sampled"
  std::uint64_t matrices = 0;        // matrices examined
  std::uint64_t fixed_invertible = 0;
  std::uint64_t embedded_units = 0;
  std::uint64_t symmetric_difference = 0;
  std::uint64_t samples = 0;
  std::uint64_t forward_failures = 0;  // embedded unit not fixed
  std::uint64_t reverse_failures = 0;  // fixed matrix not embedded
  bool equal = false;
};

inline nlohmann::json to_json(const FixedPointReport& r) {
  return {{"mode", r.mode},
          {"counts",
           {{"matrices", r.matrices},
            {"fixed_invertible", r.fixed_invertible},
            {"embedded_units", r.embedded_units},
            {"symmetric_difference", r.symmetric_difference},
            {"samples", r.samples},
            {"forward_failures", r.forward_failures},
            {"reverse_failures", r.reverse_failures}}},
          {"equal", r.equal}};
}

/// Enumerates every n x n matrix over a finite K and compares the
/// invertible sigma-fixed ones with the embedded algebra units.
template <FiniteCyclicTower K>
FixedPointReport fixed_points_exhaustive(const CyclicAlgebra<K>& a, std::uint64_t max_matrices) {
  const K& k = a.tower();
  const std::size_t n = static_cast<std::size_t>(a.n());
  const std::uint64_t q = k.order();
  const auto total = nt::checked_pow(q, static_cast<unsigned>(n * n));
  if (!total || *total > max_matrices) {
    throw std::invalid_argument("fixed_points_check: " + std::to_string(q) + "^" + std::to_string(n * n) +
                                " matrices exceed the exhaustive cap");
  }
  auto encode = [&](const Matrix<typename K::Element>& m) {
    std::uint64_t code = 0;
    for (std::size_t i = m.a.size(); i-- > 0;) code = code * q + k.index_of(m.a[i]);
    return code;
  };

  FixedPointReport r;
  r.mode = "exhaustive";
  r.matrices = *total;
  std::vector<std::uint64_t> fixed;
  auto m = zero_matrix(k, n);
  std::vector<std::uint64_t> digit(n * n, 0);
  // Entry (i, j) of sigma . M is determined by entry (i-1, j-1).
  auto is_fixed = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& src = m((i + n - 1) % n, (j + n - 1) % n);
        auto e = k.sigma(src, 1);
        if (!k.is_zero(e)) {
          if (i == 0 && j > 0) e = k.mul(a.b_inv(), e);
          else if (i > 0 && j == 0) e = k.mul(a.b(), e);
        }
        if (!k.equal(e, m(i, j))) return false;
      }
    }
    return true;
  };
  for (std::uint64_t code = 0; code < *total; ++code) {
    if (is_fixed() && !k.is_zero(determinant(k, m))) fixed.push_back(code);
    // Odometer increment over entries, lowest digit first.
    for (std::size_t p = 0; p < digit.size(); ++p) {
      if (++digit[p] < q) {
        m.a[p] = k.element_at(digit[p]);
        break;
      }
      digit[p] = 0;
      m.a[p] = k.element_at(0);
    }
  }
  r.fixed_invertible = fixed.size();

  std::vector<std::uint64_t> embedded;
  const auto algebra_size = *nt::checked_pow(q, static_cast<unsigned>(n));
  for (std::uint64_t idx = 0; idx < algebra_size; ++idx) {
    const auto x = algebra_element_at(a, idx);
    const auto mx = a.to_matrix(x);
    if (!k.is_zero(determinant(k, mx))) embedded.push_back(encode(mx));
  }
  std::sort(embedded.begin(), embedded.end());
  r.embedded_units = embedded.size();
  std::vector<std::uint64_t> diff;
  std::set_symmetric_difference(fixed.begin(), fixed.end(), embedded.begin(), embedded.end(), std::back_inserter(diff));
  r.symmetric_difference = diff.size();
  r.equal = diff.empty();
  return r;
}

/// Both inclusions on random elements: embedded units are fixed, and the
/// orbit sum of a random matrix (always fixed) is embedded.
template <CyclicTower K>
FixedPointReport fixed_points_sampled(const CyclicAlgebra<K>& a, std::mt19937_64& rng, std::uint64_t samples) {
  const K& k = a.tower();
  const std::size_t n = static_cast<std::size_t>(a.n());
  FixedPointReport r;
  r.mode = "sampled";
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto x = a.random(rng);
    const auto mx = a.to_matrix(x);
    if (k.is_zero(determinant(k, mx))) continue;
    ++r.samples;
    if (!mat_equal(k, sigma_act_once(a, mx), mx)) ++r.forward_failures;

    Matrix<typename K::Element> m{n, {}};
    for (std::size_t i = 0; i < n * n; ++i) m.a.push_back(k.random(rng));
    auto sum = m, cur = m;
    for (std::size_t i = 1; i < n; ++i) {
      cur = sigma_act_once(a, cur);
      for (std::size_t e = 0; e < sum.a.size(); ++e) sum.a[e] = k.add(sum.a[e], cur.a[e]);
    }
    if (!mat_equal(k, sigma_act_once(a, sum), sum) || !a.is_embedded(sum)) ++r.reverse_failures;
  }
  r.equal = r.forward_failures == 0 && r.reverse_failures == 0;
  return r;
}

struct ActionLawReport {
  std::uint64_t samples = 0;
  std::uint64_t order_failures = 0;           // sigma^n . M != M
  std::uint64_t homomorphism_failures = 0;    // sigma . (M M') != (sigma . M)(sigma . M')
};

inline nlohmann::json to_json(const ActionLawReport& r) {
  return {{"samples", r.samples}, {"order_failures", r.order_failures}, {"homomorphism_failures", r.homomorphism_failures}};
}

/// The action laws on random invertible pairs (singular draws are redrawn).
template <CyclicTower K>
ActionLawReport action_law_check(const CyclicAlgebra<K>& a, std::mt19937_64& rng, std::uint64_t samples) {
  const K& k = a.tower();
  const std::size_t n = static_cast<std::size_t>(a.n());
  auto draw = [&]() {
    for (;;) {
      Matrix<typename K::Element> m{n, {}};
      for (std::size_t i = 0; i < n * n; ++i) m.a.push_back(k.random(rng));
      if (is_invertible(k, m)) return m;
    }
  };
  ActionLawReport r;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto m = draw(), m2 = draw();
    ++r.samples;
    if (!mat_equal(k, sigma_act(a, m, a.n()), m)) ++r.order_failures;
    const auto lhs = sigma_act_once(a, mat_mul(k, m, m2));
    const auto rhs = mat_mul(k, sigma_act_once(a, m), sigma_act_once(a, m2));
    if (!mat_equal(k, lhs, rhs)) ++r.homomorphism_failures;
  }
  return r;
}

struct ConjugationReport {
  std::size_t n = 0;
  std::uint64_t permutations = 0;
  std::uint64_t mismatches = 0;
};

/// For every w in S_n: the Weyl class of sigma acting on the permutation
/// matrix of w, read off the dense entry rule, against c w c^{-1} built by
/// composing image tables by hand.
template <CyclicTower K>
ConjugationReport conjugation_law_check(const CyclicAlgebra<K>& a) {
  const K& k = a.tower();
  const std::size_t n = static_cast<std::size_t>(a.n());
  ConjugationReport r;
  r.n = n;
  const std::uint64_t total = factorial(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto w = Permutation::unrank(n, idx);
    const auto lifted = to_dense(k, MonomialMatrix<typename K::Element>{w, std::vector<typename K::Element>(n, k.one())});
    const auto acted = to_monomial(k, sigma_act_once(a, lifted));
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t back = (i + n - 1) % n;  // c^{-1}(i)
      img[i] = static_cast<std::uint32_t>((w(back) + 1) % n);
    }
    ++r.permutations;
    if (!acted || acted->perm != Permutation(img) || weyl_sigma_act(w) != Permutation(img)) ++r.mismatches;
  }
  return r;
}

}  // namespace cycalg

#endif  // CYCALG_ACTION_HPP
