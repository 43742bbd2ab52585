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

#include "cycalg/localex.hpp"

#include <gmpxx.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "cycalg/fields.hpp"
#include "cycalg/norm_oracle.hpp"
#include "cycalg/number_theory.hpp"

namespace cycalg {

namespace {

PadicElement newton_root_of_unity(const PadicTower& k, PadicElement x, std::uint64_t order) {
  const PadicElement one = k.one();
  const PadicElement big_n = k.from_int(static_cast<long>(order));
  for (int iter = 0; iter < 64; ++iter) {
    const PadicElement xm1 = power(k, x, static_cast<long long>(order - 1));
    const PadicElement f = k.sub(k.mul(xm1, x), one);
    if (k.is_zero(f)) return x;
    x = k.sub(x, k.mul(f, k.inv(k.mul(big_n, xm1))));
  }
  throw std::runtime_error("root of unity lift did not converge");
}

bool has_exact_order(const PadicTower& k, const PadicElement& b, std::uint64_t order) {
  const PadicElement one = k.one();
  if (!k.equal(power(k, b, static_cast<long long>(order)), one)) return false;
  for (auto r : nt::prime_divisors(order)) {
    if (k.equal(power(k, b, static_cast<long long>(order / r)), one)) return false;
  }
  return true;
}

RootAudit audit_root(const PadicTower& k, std::uint64_t order, const std::string& label) {
  RootAudit out;
  out.label = label;
  out.order = order;
  out.precision = k.precision();
  const PadicElement b = root_of_unity(k, order);
  out.b = k.to_string(b);
  out.b_order_verified = has_exact_order(k, b, order);
  const int n = k.degree();
  bool blocked = false;
  for (int w = 1; w < n; ++w) {
    const PadicElement bw = power(k, b, w);
    const auto ans = is_norm(k, bw);
    PowerResult r;
    r.w = w;
    r.verdict = to_string(ans.verdict);
    r.method = ans.method;
    r.detail = ans.detail;
    if (ans.witness) {
      r.witness = k.to_string(*ans.witness);
      r.witness_valid = k.equal(norm(k, *ans.witness), bw);
    }
    out.per_w_results.push_back(r);
    if (ans.verdict == Verdict::Unknown) blocked = true;
    if (ans.verdict == Verdict::Yes && !blocked && !out.wedderburn_index) out.wedderburn_index = w;
  }
  if (!out.wedderburn_index && !blocked) out.wedderburn_index = n;
  out.division = !out.wedderburn_index ? "unknown" : (*out.wedderburn_index == n ? "yes" : "no");
  return out;
}

// Reruns with doubled precision while the oracle reports unknown.
RootAudit audit_root_adaptive(const LocalExampleParams& params, int prec, std::uint64_t seed, std::uint64_t order,
                              const std::string& label) {
  PadicTower k(params.l, params.d_ext, params.n, prec, seed);
  for (;;) {
    RootAudit r = audit_root(k, order, label);
    if (r.division != "unknown" || k.precision() * 2 > kLocalMaxPrecision) return r;
    k = k.with_precision(k.precision() * 2);
  }
}

bool sound(const RootAudit& r) {
  for (const auto& w : r.per_w_results) {
    if (!w.witness_valid) return false;
  }
  return true;
}

std::string agreement(const std::string& division, bool claimed) {
  if (division == "unknown") return "unknown";
  return (division == "yes") == claimed ? "true" : "false";
}

}  // namespace

LocalExampleParams LocalExampleParams::make(std::uint64_t l, std::uint64_t p, int k, int n) {
  if (!nt::is_prime(l)) throw std::invalid_argument("localex: l must be prime");
  if (!nt::is_prime(p)) throw std::invalid_argument("localex: p must be prime");
  if (p == l) throw std::invalid_argument("localex: p and l must be distinct");
  if (k < 1) throw std::invalid_argument("localex: level k must be >= 1");
  if (n <= 1) throw std::invalid_argument("localex: n must be > 1");
  if ((l - 1) % static_cast<std::uint64_t>(n) != 0) throw std::invalid_argument("localex: n must divide l - 1");
  LocalExampleParams out;
  out.l = l;
  out.p = p;
  out.k = k;
  out.n = n;
  out.m = (l - 1) / static_cast<std::uint64_t>(n);
  out.g = nt::gcd(static_cast<std::uint64_t>(n), out.m);
  const auto pk = nt::checked_pow(p, static_cast<unsigned>(k));
  if (!pk) throw std::invalid_argument("localex: p^k overflows");
  out.d_ext = static_cast<int>(*nt::multiplicative_order(l % *pk, *pk));
  if (out.d_ext % n != 0) {
    throw std::invalid_argument("localex: n = " + std::to_string(n) + " does not divide d_ext = ord_{p^k}(l) = " +
                                std::to_string(out.d_ext));
  }
  const auto order = nt::checked_pow(l, static_cast<unsigned>(out.d_ext));
  if (!order || *order > FiniteFieldTower::kMaxOrder) {
    throw std::invalid_argument("localex: residue field l^d_ext exceeds the table limit of 2^22");
  }
  return out;
}

nlohmann::json to_json(const LocalExampleParams& p) {
  return {{"l", p.l}, {"p", p.p}, {"k", p.k}, {"n", p.n}, {"m", p.m}, {"g", p.g}, {"d_ext", p.d_ext}};
}

Lemma42Report lemma42_check(std::uint64_t l, std::uint64_t n) {
  if (n < 1 || (l - 1) % n != 0) throw std::invalid_argument("lemma42_check: n must divide l - 1");
  Lemma42Report r;
  r.l = l;
  r.n = n;
  r.m = (l - 1) / n;
  r.g = nt::gcd(n, r.m);
  for (auto d : nt::divisors(n * n)) {
    ++r.divisors_checked;
    const std::uint64_t lhs = r.g * (n * n / d);
    if ((l - 1) % lhs != 0) continue;
    ++r.hypotheses_met;
    if (d < n) r.counterexamples.push_back(d);
  }
  return r;
}

Lemma42Sweep lemma42_sweep(std::uint64_t max_l) {
  Lemma42Sweep s;
  s.max_l = max_l;
  for (std::uint64_t l = 2; l <= max_l; ++l) {
    if (!nt::is_prime(l)) continue;
    for (auto n : nt::divisors(l - 1)) {
      auto r = lemma42_check(l, n);
      ++s.pairs;
      s.divisors_checked += r.divisors_checked;
      if (!r.counterexamples.empty()) s.failures.push_back(std::move(r));
    }
  }
  return s;
}

nlohmann::json to_json(const Lemma42Report& r) {
  return {{"l", r.l},
          {"n", r.n},
          {"m", r.m},
          {"g", r.g},
          {"divisors_checked", r.divisors_checked},
          {"hypotheses_met", r.hypotheses_met},
          {"counterexamples", r.counterexamples}};
}

nlohmann::json to_json(const Lemma42Sweep& s) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) failures.push_back(to_json(f));
  return {{"max_l", s.max_l}, {"pairs", s.pairs}, {"divisors_checked", s.divisors_checked}, {"failures", failures}};
}

PadicElement teichmuller_lift(const PadicTower& k, FfElement a) {
  const FiniteFieldTower* res = k.residue_field();
  if (res == nullptr) throw std::domain_error("teichmuller_lift: residue field too large");
  if (res->is_zero(a)) return k.zero();
  return newton_root_of_unity(k, k.lift(a), res->order() - 1);
}

PadicElement root_of_unity(const PadicTower& k, std::uint64_t order) {
  const std::uint64_t l = k.prime();
  if (order < 1 || (l - 1) % order != 0) throw std::invalid_argument("root_of_unity: order must divide l - 1");
  const std::uint64_t c = nt::pow_mod(nt::primitive_root(l), (l - 1) / order, l);
  return newton_root_of_unity(k, k.from_int(static_cast<long>(c)), l - 1);
}

Prop43Report audit_prop43(const LocalExampleParams& params, int prec, std::uint64_t seed) {
  Prop43Report r;
  r.params = params;
  const std::uint64_t n = static_cast<std::uint64_t>(params.n);
  r.roots.push_back(audit_root_adaptive(params, prec, seed, params.g * n, "mu_gn"));
  r.roots.push_back(audit_root_adaptive(params, prec, seed, n, "mu_n"));
  r.agrees_with_paper = agreement(r.roots.front().division, r.expected_division);
  r.witnesses_sound = sound(r.roots[0]) && sound(r.roots[1]);
  return r;
}

std::optional<std::uint64_t> choose_auxiliary_prime(std::uint64_t l, int n) {
  std::optional<std::uint64_t> best;
  std::uint64_t best_d = 0;
  for (std::uint64_t p = 2; p < 2000; ++p) {
    if (p == l || !nt::is_prime(p)) continue;
    const auto d = *nt::multiplicative_order(l % p, p);
    if (d % static_cast<std::uint64_t>(n) != 0) continue;
    const auto order = nt::checked_pow(l, static_cast<unsigned>(d));
    if (!order || *order > FiniteFieldTower::kMaxOrder) continue;
    if (!best || d < best_d) {
      best = p;
      best_d = d;
    }
  }
  return best;
}

Cor45Report audit_cor45(std::uint64_t l, int n, int prec, std::optional<std::uint64_t> p, std::uint64_t seed) {
  if (!p) p = choose_auxiliary_prime(l, n);
  if (!p) throw std::invalid_argument("audit_cor45: no auxiliary prime p with n | ord_p(l) and a small residue field");
  Cor45Report r;
  r.params = LocalExampleParams::make(l, *p, 1, n);
  r.coprime = r.params.g == 1;
  r.root = audit_root_adaptive(r.params, prec, seed, static_cast<std::uint64_t>(n), "mu_n");
  r.agrees_with_paper = agreement(r.root.division, r.coprime);
  r.witnesses_sound = sound(r.root);
  return r;
}

ProportionReport proportion_check(std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("proportion_check: n must be >= 1");
  ProportionReport r;
  r.n = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (nt::gcd(i, n) == 1) ++r.generators;
  }
  r.phi = nt::euler_phi(n);
  mpq_class q(static_cast<unsigned long>(r.phi), static_cast<unsigned long>(n));
  q.canonicalize();
  r.proportion = q.get_str();
  r.counts_agree = r.generators == r.phi;

  if (n > 12) return r;
  // Unramified model of degree n over Q_3; b = 3^v u with u a rational unit.
  const PadicTower k(3, static_cast<int>(n), static_cast<int>(n), 16, seed);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> unit(1, 1000000);
  const long ln = static_cast<long>(n);
  for (long v = -ln; v <= 2 * ln; ++v) {
    for (int rep = 0; rep < 3; ++rep) {
      long u = unit(rng);
      while (u % 3 == 0) u = unit(rng);
      PadicElement b = k.from_int(u);
      b.val += v;
      std::optional<std::uint64_t> index;
      bool blocked = false;
      for (std::uint64_t w = 1; w <= n && !index && !blocked; ++w) {
        const auto ans = is_norm(k, power(k, b, static_cast<long long>(w)));
        if (ans.verdict == Verdict::Yes) index = w;
        if (ans.verdict == Verdict::Unknown) blocked = true;
      }
      const std::uint64_t vn = static_cast<std::uint64_t>(((v % ln) + ln) % ln);
      const std::uint64_t expected = n / nt::gcd(vn, n);
      ++r.valuation_samples;
      if (!index || *index != expected) ++r.valuation_mismatches;
    }
  }
  r.valuation_rule_checked = true;
  return r;
}

nlohmann::json to_json(const RootAudit& r) {
  nlohmann::json per_w = nlohmann::json::array();
  for (const auto& w : r.per_w_results) {
    per_w.push_back({{"w", w.w},
                     {"verdict", w.verdict},
                     {"method", w.method},
                     {"witness", w.witness ? nlohmann::json(*w.witness) : nlohmann::json(nullptr)},
                     {"witness_valid", w.witness_valid},
                     {"detail", w.detail}});
  }
  return {{"label", r.label},
          {"order", r.order},
          {"b", r.b},
          {"b_order_verified", r.b_order_verified},
          {"precision", r.precision},
          {"per_w_results", per_w},
          {"wedderburn_index", r.wedderburn_index ? nlohmann::json(*r.wedderburn_index) : nlohmann::json(nullptr)},
          {"division", r.division}};
}

nlohmann::json to_json(const Prop43Report& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& x : r.roots) roots.push_back(to_json(x));
  return {{"params", to_json(r.params)},
          {"roots", roots},
          {"expected_division", r.expected_division},
          {"agrees_with_paper", r.agrees_with_paper},
          {"witnesses_sound", r.witnesses_sound}};
}

nlohmann::json to_json(const Cor45Report& r) {
  return {{"params", to_json(r.params)},
          {"coprime", r.coprime},
          {"root", to_json(r.root)},
          {"agrees_with_paper", r.agrees_with_paper},
          {"witnesses_sound", r.witnesses_sound}};
}

nlohmann::json to_json(const ProportionReport& r) {
  return {{"n", r.n},
          {"generators", r.generators},
          {"phi", r.phi},
          {"proportion", r.proportion},
          {"counts_agree", r.counts_agree},
          {"valuation_rule_checked", r.valuation_rule_checked},
          {"valuation_samples", r.valuation_samples},
          {"valuation_mismatches", r.valuation_mismatches}};
}

}  // namespace cycalg
