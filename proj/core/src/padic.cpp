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

#include "cycalg/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cycalg/number_theory.hpp"
#include "cycalg/poly_parse.hpp"

namespace cycalg {

namespace {

constexpr int kMaxPrecision = 4096;

bool is_exact(std::int64_t v) { return v >= PadicElement::kExact / 2; }

// Nonnegative residue.
void reduce_mod(mpz_class& v, const mpz_class& m) {
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
}

std::int64_t lvaluation(const mpz_class& v, std::uint64_t l) {
  if (v == 0) return PadicElement::kExact;
  mpz_class tmp = v;
  mpz_class lz = static_cast<unsigned long>(l);
  return static_cast<std::int64_t>(mpz_remove(tmp.get_mpz_t(), tmp.get_mpz_t(), lz.get_mpz_t()));
}

}  // namespace

PadicTower::PadicTower(std::uint64_t l, int d, int n, int prec, std::uint64_t seed) : seed_(seed) {
  if (!nt::is_prime(l)) throw std::invalid_argument("PadicTower: l must be prime");
  if (d < 1) throw std::invalid_argument("PadicTower: extension degree must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, l - 1);
  fp::Poly f;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw std::runtime_error("PadicTower: no irreducible modulus found");
    f.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i < d; ++i) f[static_cast<std::size_t>(i)] = coef(rng);
    f[static_cast<std::size_t>(d)] = 1;
    if (fp::is_irreducible(f, l)) break;
  }
  *this = PadicTower(l, d, n, prec, std::move(f), seed);
}

PadicTower PadicTower::with_modulus(std::uint64_t l, int d, int n, int prec, fp::Poly modulus) {
  return PadicTower(l, d, n, prec, std::move(modulus), std::nullopt);
}

PadicTower PadicTower::with_precision(int prec) const { return PadicTower(l_, d_, n_, prec, modulus_, seed_); }

PadicTower::PadicTower(std::uint64_t l, int d, int n, int prec, fp::Poly modulus, std::optional<std::uint64_t> seed)
    : l_(l), d_(d), n_(n), prec_(prec), modulus_(std::move(modulus)), seed_(seed) {
  if (!nt::is_prime(l_)) throw std::invalid_argument("PadicTower: l must be prime");
  if (d_ < 1 || n_ < 1 || d_ % n_ != 0) throw std::invalid_argument("PadicTower: need n >= 1 dividing d");
  if (prec_ < 1 || prec_ > kMaxPrecision) throw std::invalid_argument("PadicTower: precision must lie in [1, 4096]");
  for (auto c : modulus_) {
    if (c >= l_) throw std::invalid_argument("PadicTower: modulus coefficients must lie in [0, l)");
  }
  fp::trim(modulus_);
  if (fp::degree(modulus_) != d_ || modulus_.back() != 1) {
    throw std::invalid_argument("PadicTower: modulus must be monic of degree d");
  }
  if (!fp::is_irreducible(modulus_, l_)) {
    throw std::invalid_argument("PadicTower: modulus is reducible modulo l (extension would not be unramified)");
  }
  build();
}

mpz_class PadicTower::lpow(std::int64_t k) const {
  if (k < 0) throw std::domain_error("PadicTower::lpow: negative exponent");
  if (static_cast<std::size_t>(k) < lpow_.size()) return lpow_[static_cast<std::size_t>(k)];
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(l_), static_cast<unsigned long>(k));
  return r;
}

PadicTower::Vec PadicTower::ring_mul(const Vec& a, const Vec& b, const mpz_class& m) const {
  Vec prod(static_cast<std::size_t>(2 * d_ - 1), 0);
  for (int i = 0; i < d_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d_; ++j) prod[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    const mpz_class c = prod[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int j = 0; j < d_; ++j) {
      if (modulus_[static_cast<std::size_t>(j)] != 0) {
        prod[static_cast<std::size_t>(k - d_ + j)] -= c * static_cast<unsigned long>(modulus_[static_cast<std::size_t>(j)]);
      }
    }
  }
  prod.resize(static_cast<std::size_t>(d_));
  for (auto& v : prod) reduce_mod(v, m);
  return prod;
}

PadicTower::Vec PadicTower::ring_inv(const Vec& a, int digits) const {
  fp::Poly abar(static_cast<std::size_t>(d_), 0);
  const mpz_class lz = static_cast<unsigned long>(l_);
  for (int i = 0; i < d_; ++i) {
    mpz_class r = a[static_cast<std::size_t>(i)];
    reduce_mod(r, lz);
    abar[static_cast<std::size_t>(i)] = r.get_ui();
  }
  fp::trim(abar);
  auto vbar = fp::invmod(abar, modulus_, l_);
  if (!vbar) throw std::domain_error("PadicTower: element is not a unit");
  Vec v(static_cast<std::size_t>(d_), 0);
  for (std::size_t i = 0; i < vbar->size(); ++i) v[i] = static_cast<unsigned long>((*vbar)[i]);
  // Newton: v <- v (2 - a v), doubling the number of correct digits.
  int k = 1;
  while (k < digits) {
    k = std::min(2 * k, digits);
    const mpz_class m = lpow(k);
    Vec av = ring_mul(a, v, m);
    for (auto& c : av) c = -c;
    av[0] += 2;
    for (auto& c : av) reduce_mod(c, m);
    v = ring_mul(v, av, m);
  }
  return v;
}

void PadicTower::build() {
  lpow_.resize(static_cast<std::size_t>(2 * prec_ + 3));
  lpow_[0] = 1;
  for (std::size_t i = 1; i < lpow_.size(); ++i) lpow_[i] = lpow_[i - 1] * static_cast<unsigned long>(l_);

  const mpz_class full = lpow(prec_);
  const std::size_t d = static_cast<std::size_t>(d_);

  // Frobenius lift: the root of f congruent to x^l, by Newton iteration.
  fp::Poly x_to_l = fp::powmod(fp::Poly{0, 1}, l_, modulus_, l_);
  Vec y(d, 0);
  for (std::size_t i = 0; i < x_to_l.size(); ++i) y[i] = static_cast<unsigned long>(x_to_l[i]);
  auto eval = [&](const Vec& at, bool derivative, const mpz_class& m) {
    Vec acc(d, 0);
    for (int j = d_; j >= (derivative ? 1 : 0); --j) {
      acc = ring_mul(acc, at, m);
      mpz_class c = static_cast<unsigned long>(j == d_ ? 1 : modulus_[static_cast<std::size_t>(j)]);
      if (derivative) c *= j;
      acc[0] += c;
      reduce_mod(acc[0], m);
    }
    return acc;
  };
  if (d_ > 1) {
    for (int k = 1;;) {
      k = std::min(2 * k, prec_);
      const mpz_class m = lpow(k);
      Vec fy = eval(y, false, m);
      Vec step = ring_mul(fy, ring_inv(eval(y, true, m), k), m);
      for (std::size_t i = 0; i < d; ++i) {
        y[i] -= step[i];
        reduce_mod(y[i], m);
      }
      if (k == prec_) break;
    }
    Vec check = eval(y, false, full);
    for (const auto& c : check) {
      if (c != 0) throw std::logic_error("PadicTower: Frobenius lift failed to converge");
    }
  } else {
    y.assign(1, 1);  // degree one: Frobenius is the identity
  }

  // Frobenius matrix rows: images of x^i.
  std::vector<Vec> frob(d, Vec(d, 0));
  frob[0][0] = 1;
  for (std::size_t i = 1; i < d; ++i) frob[i] = ring_mul(frob[i - 1], y, full);
  auto apply_frob = [&](const Vec& v) {
    Vec out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[j] += v[i] * frob[i][j];
    }
    for (auto& c : out) reduce_mod(c, full);
    return out;
  };

  const int step = d_ / n_;
  Vec x(d, 0);
  if (d > 1) x[1] = 1;
  else x[0] = y[0];
  sigma_images_.assign(static_cast<std::size_t>(n_), std::vector<Vec>(d, Vec(d, 0)));
  Vec cur = x;
  for (int k = 0; k < n_; ++k) {
    auto& table = sigma_images_[static_cast<std::size_t>(k)];
    table[0][0] = 1;
    for (std::size_t i = 1; i < d; ++i) table[i] = ring_mul(table[i - 1], cur, full);
    for (int s = 0; s < step; ++s) cur = apply_frob(cur);
  }

  if (auto order = nt::checked_pow(l_, static_cast<unsigned>(d_)); order && *order <= FiniteFieldTower::kMaxOrder) {
    auto q = nt::checked_pow(l_, static_cast<unsigned>(step));
    residue_ = std::make_shared<const FiniteFieldTower>(FiniteFieldTower::with_modulus(*q, n_, modulus_));
  }
}

PadicTower::Element PadicTower::make(Vec coeffs, std::int64_t shift, std::int64_t abs) const {
  coeffs.resize(static_cast<std::size_t>(d_), 0);
  Element out;
  if (is_exact(abs)) {
    std::int64_t c = PadicElement::kExact;
    for (const auto& v : coeffs) c = std::min(c, lvaluation(v, l_));
    if (is_exact(c)) return Element{};
    out.val = shift + c;
    out.rel = prec_;
    const mpz_class div = lpow(c), m = lpow(prec_);
    for (auto& v : coeffs) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
      reduce_mod(v, m);
    }
    out.unit = std::move(coeffs);
    return out;
  }
  const std::int64_t span = abs - shift;
  if (span <= 0) return Element{abs, 0, {}};
  const mpz_class m = lpow(span);
  std::int64_t c = PadicElement::kExact;
  for (auto& v : coeffs) {
    reduce_mod(v, m);
    c = std::min(c, lvaluation(v, l_));
  }
  if (is_exact(c)) return Element{abs, 0, {}};
  out.val = shift + c;
  out.rel = static_cast<int>(std::min<std::int64_t>(span - c, prec_));
  const mpz_class div = lpow(c), mr = lpow(out.rel);
  for (auto& v : coeffs) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
    reduce_mod(v, mr);
  }
  out.unit = std::move(coeffs);
  return out;
}

std::int64_t PadicTower::absolute_precision(const Element& a) const {
  return is_zero(a) ? a.val : a.val + a.rel;
}

PadicTower::Element PadicTower::from_int(long v) const {
  return make(Vec{mpz_class(v)}, 0, PadicElement::kExact);
}

PadicTower::Element PadicTower::from_rational(const mpq_class& v) const {
  Element num = make(Vec{v.get_num()}, 0, PadicElement::kExact);
  if (v.get_den() == 1) return num;
  return mul(num, inv(make(Vec{v.get_den()}, 0, PadicElement::kExact)));
}

PadicTower::Element PadicTower::from_integer_coefficients(const std::vector<mpz_class>& coeffs) const {
  Vec c = coeffs;
  // Reduce modulo f over the integers.
  for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(d_);) {
    const mpz_class top = c[k];
    if (top == 0) continue;
    for (int j = 0; j <= d_; ++j) {
      const unsigned long fj = j == d_ ? 1UL : static_cast<unsigned long>(modulus_[static_cast<std::size_t>(j)]);
      c[k - static_cast<std::size_t>(d_) + static_cast<std::size_t>(j)] -= top * fj;
    }
  }
  c.resize(static_cast<std::size_t>(d_), 0);
  return make(std::move(c), 0, PadicElement::kExact);
}

PadicTower::Element PadicTower::generator_x() const {
  return from_integer_coefficients({mpz_class(0), mpz_class(1)});
}

PadicTower::Element PadicTower::add(const Element& a, const Element& b) const {
  const bool za = is_zero(a), zb = is_zero(b);
  if (za && is_exact(a.val)) return b;
  if (zb && is_exact(b.val)) return a;
  const std::int64_t abs = std::min(absolute_precision(a), absolute_precision(b));
  if (za && zb) return Element{abs, 0, {}};
  if (za) return truncate(b, abs);
  if (zb) return truncate(a, abs);
  const std::int64_t shift = std::min(a.val, b.val);
  Vec sum(static_cast<std::size_t>(d_), 0);
  const mpz_class sa = lpow(a.val - shift), sb = lpow(b.val - shift);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.unit[i] * sa + b.unit[i] * sb;
  return make(std::move(sum), shift, abs);
}

PadicTower::Element PadicTower::truncate(const Element& a, std::int64_t abs) const {
  if (is_zero(a)) return Element{std::min(a.val, abs), 0, {}};
  if (abs <= a.val) return Element{abs, 0, {}};
  if (abs >= a.val + a.rel) return a;
  Element out = a;
  out.rel = static_cast<int>(abs - a.val);
  const mpz_class m = lpow(out.rel);
  for (auto& v : out.unit) reduce_mod(v, m);
  return out;
}

PadicTower::Element PadicTower::neg(const Element& a) const {
  if (is_zero(a)) return a;
  Element out = a;
  const mpz_class m = lpow(a.rel);
  for (auto& v : out.unit) {
    v = -v;
    reduce_mod(v, m);
  }
  return out;
}

PadicTower::Element PadicTower::mul(const Element& a, const Element& b) const {
  const bool za = is_zero(a), zb = is_zero(b);
  if (za || zb) {
    if ((za && is_exact(a.val)) || (zb && is_exact(b.val))) return Element{};
    return Element{a.val + b.val, 0, {}};
  }
  Element out;
  out.val = a.val + b.val;
  out.rel = std::min(a.rel, b.rel);
  out.unit = ring_mul(a.unit, b.unit, lpow(out.rel));
  return out;
}

PadicTower::Element PadicTower::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("PadicTower: inverse of an element that is zero to the working precision");
  Element out;
  out.val = -a.val;
  out.rel = a.rel;
  out.unit = ring_inv(a.unit, a.rel);
  return out;
}

PadicTower::Element PadicTower::sigma(const Element& a, long long power) const {
  long long k = power % n_;
  if (k < 0) k += n_;
  if (k == 0 || is_zero(a)) return a;
  const auto& table = sigma_images_[static_cast<std::size_t>(k)];
  const mpz_class m = lpow(a.rel);
  Vec out(static_cast<std::size_t>(d_), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a.unit[i] == 0) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += a.unit[i] * table[i][j];
  }
  for (auto& v : out) reduce_mod(v, m);
  Element r;
  r.val = a.val;
  r.rel = a.rel;
  r.unit = std::move(out);
  return r;
}

FfElement PadicTower::residue(const Element& a) const {
  if (!residue_) throw std::domain_error("PadicTower: residue field exceeds the table limit");
  if (is_zero(a)) {
    if (a.val < 1) throw std::domain_error("PadicTower: residue of a zero with no known digits");
    return residue_->zero();
  }
  if (a.val < 0) throw std::domain_error("PadicTower: residue of a non-integral element");
  if (a.val > 0) return residue_->zero();
  fp::Poly c(static_cast<std::size_t>(d_), 0);
  const mpz_class lz = static_cast<unsigned long>(l_);
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_class r = a.unit[i];
    reduce_mod(r, lz);
    c[i] = r.get_ui();
  }
  fp::trim(c);
  return residue_->from_coefficients(c);
}

PadicTower::Element PadicTower::lift(FfElement a) const {
  if (!residue_) throw std::domain_error("PadicTower: residue field exceeds the table limit");
  const auto c = residue_->coefficients(a);
  Vec v;
  for (auto x : c) v.emplace_back(static_cast<unsigned long>(x));
  return from_integer_coefficients(v);
}

std::string PadicTower::to_string(const Element& a) const {
  const std::string lstr = std::to_string(l_);
  if (is_zero(a)) return is_exact(a.val) ? "0" : "O(" + lstr + "^" + std::to_string(a.val) + ")";
  std::vector<std::string> parts;
  for (const auto& u : a.unit) {
    mpq_class c(u);
    if (a.val >= 0) c *= lpow(a.val);
    else c /= lpow(-a.val);
    c.canonicalize();
    parts.push_back(c.get_str());
  }
  return format_polynomial(parts, 'x') + "+O(" + lstr + "^" + std::to_string(absolute_precision(a)) + ")";
}

PadicTower::Element PadicTower::parse(std::string_view text) const {
  std::optional<std::int64_t> abs;
  std::string_view body = text;
  if (auto pos = text.find("O("); pos != std::string_view::npos) {
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("PadicTower: unterminated O(...) term");
    const std::string inner(text.substr(pos + 2, close - pos - 2));
    const auto caret = inner.find('^');
    const std::string base = inner.substr(0, caret);
    if (std::stoull(base) != l_) throw std::invalid_argument("PadicTower: O-term must be a power of l");
    abs = caret == std::string::npos ? 1 : std::stoll(inner.substr(caret + 1));
    body = text.substr(0, pos);
    while (!body.empty() && (body.back() == ' ' || body.back() == '+')) body.remove_suffix(1);
    if (body.empty()) return Element{*abs, 0, {}};
  }
  const auto rat = parse_polynomial(body, 'x');
  mpz_class den = 1;
  for (const auto& c : rat) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Vec nums;
  for (const auto& c : rat) nums.push_back(c.get_num() * (den / c.get_den()));
  Element x = from_integer_coefficients(nums);
  if (den != 1) x = mul(x, inv(make(Vec{den}, 0, PadicElement::kExact)));
  return abs ? truncate(x, *abs) : x;
}

PadicTower::Element PadicTower::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> digit(0, l_ - 1);
  Vec c(static_cast<std::size_t>(d_), 0);
  for (auto& v : c) {
    for (int k = prec_ - 1; k >= 0; --k) v = v * static_cast<unsigned long>(l_) + static_cast<unsigned long>(digit(rng));
  }
  return make(std::move(c), 0, prec_);
}

PadicTower::Element PadicTower::random_with_valuation(std::mt19937_64& rng, std::int64_t v) const {
  for (;;) {
    Element x = random(rng);
    if (!is_zero(x) && x.val == 0) {
      x.val = v;
      return x;
    }
  }
}

nlohmann::json PadicTower::to_json() const {
  nlohmann::json j;
  j["kind"] = "PadicUnramified";
  j["parameters"] = {{"l", l_}, {"d", d_}, {"n", n_}, {"prec", prec_}};
  j["modulus"] = modulus_;
  j["seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json(nullptr);
  return j;
}

}  // namespace cycalg
