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

#include "cycalg/norm_oracle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "cycalg/fields.hpp"

namespace cycalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoneExists: return "none_exists";
    case SearchStatus::Exhausted: return "exhausted";
  }
  return "exhausted";
}

namespace {

template <class K>
void check_target(const K& k, const typename K::Element& b) {
  if (k.is_zero(b)) throw std::invalid_argument("is_norm: b must be nonzero");
  if (!in_base_field(k, b)) throw std::invalid_argument("is_norm: b is not fixed by sigma");
}

// --- sums of two squares for Q(i)/Q ------------------------------------

struct Gaussian {
  mpz_class re = 1, im = 0;
};

Gaussian gmul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// x^2 + y^2 = p for a prime p = 1 mod 4 (Hermite-Serret descent).
Gaussian two_squares_prime(const mpz_class& p) {
  mpz_class c = 2, e = (p - 1) / 2, r;
  for (;; ++c) {
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (r == p - 1) break;
  }
  const mpz_class quarter = (p - 1) / 4;
  mpz_powm(r.get_mpz_t(), c.get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
  mpz_class a = p, b = r;
  while (b * b > p) {
    mpz_class t = a % b;
    a = b;
    b = t;
  }
  mpz_class rest = p - b * b, y;
  mpz_sqrt(y.get_mpz_t(), rest.get_mpz_t());
  if (y * y != rest) throw std::logic_error("two_squares_prime: descent failed");
  return {b, y};
}

struct FactorResult {
  std::vector<std::pair<mpz_class, unsigned>> factors;
  bool complete = true;
};

FactorResult factor_mpz(mpz_class v) {
  FactorResult out;
  if (v < 0) v = -v;
  auto pull = [&](const mpz_class& p) {
    unsigned e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  pull(2);
  for (unsigned long d = 3; d <= 1000000UL; d += 2) {
    if (mpz_class(d) * d > v) break;
    if (mpz_divisible_ui_p(v.get_mpz_t(), d)) pull(mpz_class(d));
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 30) > 0) out.factors.emplace_back(v, 1);
    else out.complete = false;
  }
  return out;
}

NormAnswer<CycElement> gaussian_norm(const CyclotomicTower& k, const CycElement& b) {
  NormAnswer<CycElement> ans;
  ans.method = "sum_of_two_squares";
  const auto q = k.to_rational(b);
  if (!q) throw std::invalid_argument("is_norm: b is not rational");
  if (*q < 0) {
    ans.verdict = Verdict::No;
    ans.detail = "negative rationals are not sums of two squares";
    return ans;
  }
  const mpz_class num = q->get_num(), den = q->get_den();
  const auto f = factor_mpz(num * den);
  if (!f.complete) {
    ans.detail = "could not factor numerator times denominator";
    return ans;
  }
  Gaussian acc;
  for (const auto& [p, e] : f.factors) {
    if (p % 4 == 3) {
      if (e % 2 != 0) {
        ans.verdict = Verdict::No;
        ans.detail = "prime " + p.get_str() + " = 3 mod 4 appears to an odd power";
        return ans;
      }
      mpz_class s;
      mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), e / 2);
      acc = gmul(acc, Gaussian{s, 0});
      continue;
    }
    const Gaussian base = p == 2 ? Gaussian{1, 1} : two_squares_prime(p);
    for (unsigned i = 0; i < e; ++i) acc = gmul(acc, base);
  }
  // num / den = (num den) / den^2 = Nm((x + y i) / den).
  const CycElement i = k.zeta();
  CycElement w = k.add(k.from_rational(mpq_class(acc.re, den)), k.mul(k.from_rational(mpq_class(acc.im, den)), i));
  if (!k.equal(norm(k, w), b)) throw std::logic_error("is_norm: two-squares witness failed verification");
  ans.verdict = Verdict::Yes;
  ans.witness = std::move(w);
  return ans;
}

}  // namespace

NormAnswer<FfElement> is_norm(const FiniteFieldTower& k, FfElement b) {
  check_target(k, b);
  NormAnswer<FfElement> ans;
  ans.method = "discrete_log";
  const std::uint64_t step = (k.order() - 1) / (k.base_order() - 1);
  const std::uint64_t e = k.log(b);
  if (e % step != 0) throw std::logic_error("is_norm: base-field element has unexpected logarithm");
  const FfElement w = k.unit_at(e / step);
  if (!k.equal(norm(k, w), b)) throw std::logic_error("is_norm: finite-field witness failed verification");
  ans.verdict = Verdict::Yes;
  ans.witness = w;
  return ans;
}

PreimageSearch<FfElement> norm_preimage_search(const FiniteFieldTower& k, FfElement b, std::uint64_t budget) {
  check_target(k, b);
  PreimageSearch<FfElement> out;
  const std::uint64_t limit = std::min<std::uint64_t>(budget, k.order());
  for (std::uint64_t i = 0; i < limit; ++i) {
    ++out.examined;
    const FfElement x = k.element_at(i);
    if (k.equal(norm(k, x), b)) {
      out.status = SearchStatus::Found;
      out.witness = x;
      return out;
    }
  }
  out.status = limit == k.order() ? SearchStatus::NoneExists : SearchStatus::Exhausted;
  return out;
}

PreimageSearch<CycElement> norm_preimage_search(const CyclotomicTower& k, const CycElement& b, long height,
                                                std::uint64_t max_candidates) {
  check_target(k, b);
  PreimageSearch<CycElement> out;
  const std::size_t phi = k.phi();
  std::vector<mpz_class> dens{1};
  if (b.den != 1) dens.push_back(b.den);
  std::vector<long> c(phi);
  for (long h = 0; h <= height; ++h) {
    std::fill(c.begin(), c.end(), -h);
    for (;;) {
      long top = 0;
      for (auto v : c) top = std::max(top, v < 0 ? -v : v);
      if (top == h) {
        std::vector<mpz_class> num(c.begin(), c.end());
        for (const auto& d : dens) {
          if (out.examined >= max_candidates) return out;
          ++out.examined;
          CycElement x = k.make(num, d);
          if (k.is_zero(x)) continue;
          if (k.equal(norm(k, x), b)) {
            out.status = SearchStatus::Found;
            out.witness = std::move(x);
            return out;
          }
        }
      }
      std::size_t i = 0;
      while (i < phi && c[i] == h) c[i++] = -h;
      if (i == phi) break;
      ++c[i];
    }
  }
  return out;
}

NormAnswer<CycElement> is_norm(const CyclotomicTower& k, const CycElement& b, long height) {
  check_target(k, b);
  if (k.degree() == 1) return {Verdict::Yes, b, "trivial_extension", ""};
  if (k.conductor() == 4 && k.degree() == 2) return gaussian_norm(k, b);
  NormAnswer<CycElement> ans;
  ans.method = "bounded_search";
  auto found = norm_preimage_search(k, b, height);
  if (found.status == SearchStatus::Found) {
    ans.verdict = Verdict::Yes;
    ans.witness = std::move(found.witness);
  } else {
    ans.detail = "no preimage up to height " + std::to_string(height);
  }
  return ans;
}

NormAnswer<PadicElement> is_norm(const PadicTower& k, const PadicElement& b) {
  check_target(k, b);
  NormAnswer<PadicElement> ans;
  const int n = k.degree();
  const std::int64_t v = k.valuation(b);
  if (((v % n) + n) % n != 0) {
    ans.verdict = Verdict::No;
    ans.method = "valuation";
    ans.detail = "v(b) = " + std::to_string(v) + " is not divisible by n";
    return ans;
  }
  ans.method = "hensel";
  if (n == 1) return {Verdict::Yes, b, "trivial_extension", ""};
  const FiniteFieldTower* res = k.residue_field();
  if (res == nullptr) {
    ans.detail = "residue field too large for the residue solve";
    return ans;
  }

  PadicElement u = b;
  u.val = 0;
  const auto start = is_norm(*res, k.residue(u));
  const PadicElement x0 = k.lift(*start.witness);
  const PadicElement one = k.one();

  // Trace-one correction: z = a c / Tr(c) has Tr(z) = a for a in L.
  PadicElement c = one;
  if (static_cast<std::uint64_t>(n) % k.prime() == 0) {
    PadicElement xi = one;
    const PadicElement x = k.generator_x();
    for (int i = 0; i < k.extension_degree(); ++i) {
      const auto tr = trace(k, xi);
      if (!k.is_zero(tr) && k.valuation(tr) == 0) {
        c = xi;
        break;
      }
      xi = k.mul(xi, x);
    }
  }
  const PadicElement c_scaled = k.mul(c, k.inv(trace(k, c)));

  PadicElement y = one;
  PadicElement r = k.mul(u, k.inv(norm(k, x0)));
  bool converged = false;
  for (int iter = 0; iter < 64; ++iter) {
    const PadicElement e = k.sub(r, one);
    if (k.is_zero(e)) {
      converged = true;
      break;
    }
    const std::int64_t depth = k.valuation(e);
    if (depth < 1) throw std::logic_error("is_norm: Hensel step lost the residue solution");
    PadicElement a = e;
    a.val = 0;
    PadicElement step = k.mul(a, c_scaled);
    step.val += depth;
    const PadicElement t = k.add(one, step);
    y = k.mul(y, t);
    r = k.mul(r, k.inv(norm(k, t)));
  }
  if (!converged) {
    ans.detail = "Hensel iteration did not converge";
    return ans;
  }
  PadicElement w = k.mul(x0, y);
  w.val += v / n;
  const PadicElement diff = k.sub(norm(k, w), b);
  if (!k.is_zero(diff) || k.valuation(diff) < k.absolute_precision(b)) {
    ans.detail = "precision exhausted: witness only verified to l^" + std::to_string(k.valuation(diff));
    return ans;
  }
  ans.verdict = Verdict::Yes;
  ans.witness = std::move(w);
  return ans;
}

PreimageSearch<PadicElement> norm_preimage_search(const PadicTower& k, const PadicElement& b) {
  auto ans = is_norm(k, b);
  PreimageSearch<PadicElement> out;
  out.examined = 1;
  if (ans.verdict == Verdict::Yes) {
    out.status = SearchStatus::Found;
    out.witness = std::move(ans.witness);
  } else if (ans.verdict == Verdict::No) {
    out.status = SearchStatus::NoneExists;
  }
  return out;
}

}  // namespace cycalg
