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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycalg/action.hpp"
#include "cycalg/algebra.hpp"
#include "cycalg/cohomology.hpp"
#include "cycalg/cyclotomic.hpp"
#include "cycalg/finite_field.hpp"
#include "cycalg/localex.hpp"
#include "cycalg/matrix.hpp"
#include "cycalg/norm_oracle.hpp"
#include "cycalg/padic.hpp"
#include "cycalg/partitions.hpp"

namespace cycalg::cli {
namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Global {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::uint64_t max_exhaustive = std::uint64_t{1} << 20;
  int prec = kLocalDefaultPrecision;
};

struct FieldOptions {
  std::string field = "ff";
  std::uint64_t q = 3;
  int n = 2;
  std::uint64_t m = 4;
  std::uint64_t s = 3;
  std::uint64_t l = 5;
  int d = 0;  // defaults to n
  std::string b = "1";
};

struct Result {
  json body;
  bool ok = true;
};

// --- output ------------------------------------------------------------------

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path + "/" + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "/" + std::to_string(i), rows);
  } else {
    rows.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit(std::ostream& out, const Global& g, const json& report) {
  if (g.format == "pretty") {
    out << report.dump(2) << "\n";
  } else if (g.format == "csv") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
  } else {
    out << report.dump() << "\n";
  }
}

// --- tower construction ------------------------------------------------------

template <class F>
Result with_tower(const FieldOptions& o, const Global& g, F&& body) {
  if (o.field == "ff") {
    const FiniteFieldTower k(o.q, o.n, g.seed);
    return body(k);
  }
  if (o.field == "cyclo") {
    const CyclotomicTower k(o.m, o.s);
    return body(k);
  }
  if (o.field == "padic") {
    const PadicTower k(o.l, o.d == 0 ? o.n : o.d, o.n, g.prec, g.seed);
    return body(k);
  }
  throw UsageError("--field must be one of ff, cyclo, padic");
}

template <CyclicTower K>
json describe(const K& k) {
  return k.to_json();
}

template <CyclicTower K>
typename K::Element parse_b(const K& k, const FieldOptions& o) {
  return k.parse(o.b);
}

Permutation parse_cycles(const std::string& text, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw UsageError("permutation must be written in cycle notation, e.g. (1 2)(3 4)");
    const auto close = text.find(')', i);
    if (close == std::string::npos) throw UsageError("unbalanced parenthesis in permutation");
    std::istringstream in(text.substr(i + 1, close - i - 1));
    std::vector<std::uint32_t> cycle;
    std::uint32_t v = 0;
    while (in >> v) cycle.push_back(v);
    if (!in.eof()) throw UsageError("permutation cycles must contain positive integers");
    if (!cycle.empty()) cycles.push_back(cycle);
    i = close + 1;
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

FiniteFieldTower finite_tower(const FieldOptions& o, const Global& g) {
  if (o.field != "ff") throw UsageError("target group is infinite over --field " + o.field + "; use --field ff");
  return FiniteFieldTower(o.q, o.n, g.seed);
}

// --- subcommands -------------------------------------------------------------

Result cmd_pn(std::int64_t n, bool list) {
  if (n < 1) throw UsageError("pn: n must be >= 1");
  if (n > 100000) throw UsageError("pn: n must be <= 100000");
  const auto un = static_cast<std::uint32_t>(n);
  Result r;
  r.body = {{"n", n}, {"pn", count_pn(un)}};
  if (list) {
    json parts = json::array();
    for (const auto& p : enumerate_pn(un)) parts.push_back(p);
    r.body["partitions"] = parts;
  }
  if (n <= 8) {
    const auto classes = torsion_classes_bruteforce(un);
    r.body["bruteforce_classes"] = classes.size();
    r.ok = classes.size() == count_pn(un);
  }
  if (n >= 2) r.body["bounds"] = to_json(bound_report(un));
  return r;
}

std::optional<MonomialMatrix<FfElement>> pick_twist(const NormalizerGroup<FiniteFieldTower>& nrm, const Permutation& image) {
  for (auto i : enumerate_Z1(nrm)) {
    auto f = nrm.element_at(i);
    if (f.perm == image) return f;
  }
  return std::nullopt;
}

template <class G>
json cocycle_list(const G& grp, const std::vector<std::uint64_t>& z1) {
  json list = json::array();
  for (auto i : z1) list.push_back(grp.to_json(grp.element_at(i)));
  return list;
}

Result cmd_cohomology(bool classify, const std::string& target, const FieldOptions& o, const Global& g,
                      const std::string& twist, bool list) {
  Result r;
  auto run_group = [&](const auto& grp) {
    const auto z1 = enumerate_Z1(grp);
    json body = {{"target", target}, {"n", grp.n()}, {"group_order", grp.size()}, {"z1", z1.size()}};
    if (classify) {
      const auto h1 = h1_classify(grp, z1);
      const auto j = to_json(grp, h1, list);
      body["classes"] = j["classes"];
      body["class_list"] = j["class_list"];
      bool rebuilt = true;
      for (const auto& c : h1.classes) rebuilt = rebuilt && semidirect_reconstruction_holds(grp, grp.element_at(c.representative));
      body["reconstruction_holds"] = rebuilt;
      r.ok = rebuilt;
    } else if (list || z1.size() <= 64) {
      body["cocycles"] = cocycle_list(grp, z1);
    }
    return body;
  };

  if (target == "W") {
    if (o.n < 1 || o.n > 8) throw UsageError("--n must lie in [1, 8] for target W");
    const WeylGroup w(static_cast<std::size_t>(o.n));
    r.body = run_group(w);
    if (classify && o.n <= 7) {
      const auto t = h1w_via_torsion(static_cast<std::size_t>(o.n));
      r.body["torsion"] = to_json(t);
      r.ok = r.ok && t.bijection_verified && t.classes_match;
    }
    return r;
  }
  const auto k = finite_tower(o, g);
  r.body = {{"field", k.to_json()}};
  if (target == "T") {
    r.body.update(run_group(TorusGroup<FiniteFieldTower>(k)));
    return r;
  }
  const CyclicAlgebra<FiniteFieldTower> a(k, parse_b(k, o));
  r.body["b"] = k.to_string(a.b());
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  if (target == "N") {
    r.body.update(run_group(nrm));
    if (classify && o.n == 2) r.body["two_class"] = to_json(two_class_check(a));
    return r;
  }
  if (target == "Tg") {
    const auto image = parse_cycles(twist, static_cast<std::size_t>(o.n));
    const auto gcoc = pick_twist(nrm, image);
    if (!gcoc) throw UsageError("no cocycle in Z^1(N) projects to " + image.to_cycle_string());
    const TorusGroup<FiniteFieldTower> torus(k);
    const TwistedTorusGroup<FiniteFieldTower> tw(torus, nrm, *gcoc);
    r.body.update(run_group(tw));
    r.body["twist"] = nrm.to_json(*gcoc);
    const auto rep = twist_check(nrm, *gcoc);
    r.body["twist_check"] = to_json(rep);
    r.ok = r.ok && rep.action_axioms_hold && rep.bijection_holds;
    return r;
  }
  throw UsageError("--target must be one of T, N, W, Tg");
}

Result cmd_pstar(const FieldOptions& o, const Global& g) {
  const auto k = finite_tower(o, g);
  const CyclicAlgebra<FiniteFieldTower> a(k, parse_b(k, o));
  const auto rep = verify_pstar_injective(a);
  Result r;
  r.body = {{"field", k.to_json()}, {"b", k.to_string(a.b())}};
  r.body.update(to_json(rep));
  // Twisting by each class representative.
  const NormalizerGroup<FiniteFieldTower> nrm(a);
  const auto z1 = enumerate_Z1(nrm);
  const auto h1 = h1_classify(nrm, z1);
  json twists = json::array();
  bool twists_ok = true;
  for (const auto& c : h1.classes) {
    const auto t = twist_check(nrm, nrm.element_at(c.representative));
    twists_ok = twists_ok && t.action_axioms_hold && t.bijection_holds;
    twists.push_back(to_json(t));
  }
  r.body["twists"] = twists;
  r.ok = rep.injective && rep.bounded_by_pn && rep.projections_are_cocycles && twists_ok;
  return r;
}

template <CyclicTower K>
Matrix<typename K::Element> random_invertible(const K& k, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<typename K::Element> m{n, {}};
    for (std::size_t i = 0; i < n * n; ++i) m.a.push_back(k.random(rng));
    if (is_invertible(k, m)) return m;
  }
}

Result cmd_embed(const FieldOptions& o, const Global& g, const std::string& element) {
  return with_tower(o, g, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const CyclicAlgebra<K> a(k, parse_b(k, o));
    std::mt19937_64 rng(g.seed);
    const auto x = element.empty() ? a.random(rng) : a.from_json(json::parse(element));
    const auto m = a.to_matrix(x);
    const auto rn = a.reduced_norm(x);
    Result r;
    const bool round_trip = a.equal(a.from_first_row(m), x);
    r.body = {{"field", describe(k)},
              {"b", k.to_string(a.b())},
              {"element", a.to_json(x)},
              {"matrix", to_json(k, m)},
              {"reduced_norm", k.to_string(rn)},
              {"reduced_norm_in_base", in_base_field(k, rn)},
              {"round_trip", round_trip},
              {"embedded", a.is_embedded(m)},
              {"fixed_by_action", mat_equal(k, sigma_act_once(a, m), m)}};
    r.ok = round_trip && a.is_embedded(m) && in_base_field(k, rn) && (k.is_zero(rn) || mat_equal(k, sigma_act_once(a, m), m));
    return r;
  });
}

Result cmd_act(const FieldOptions& o, const Global& g, const std::string& matrix, long long power, std::uint64_t samples) {
  if (power < 0) throw UsageError("--power must be >= 0");
  return with_tower(o, g, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const CyclicAlgebra<K> a(k, parse_b(k, o));
    std::mt19937_64 rng(g.seed);
    const auto m = matrix.empty() ? random_invertible(k, static_cast<std::size_t>(a.n()), rng)
                                  : matrix_from_json(k, json::parse(matrix));
    if (m.n != static_cast<std::size_t>(a.n())) throw UsageError("--matrix must be n x n");
    if (!is_invertible(k, m)) throw UsageError("--matrix must be invertible");
    const auto out = sigma_act(a, m, power);
    const auto laws = action_law_check(a, rng, samples);
    Result r;
    r.body = {{"field", describe(k)},
              {"b", k.to_string(a.b())},
              {"matrix", to_json(k, m)},
              {"power", power},
              {"result", to_json(k, out)},
              {"fixed", mat_equal(k, sigma_act_once(a, m), m)},
              {"laws", to_json(laws)}};
    r.ok = laws.order_failures == 0 && laws.homomorphism_failures == 0;
    return r;
  });
}

Result cmd_fixcheck(const FieldOptions& o, const Global& g, std::uint64_t samples) {
  return with_tower(o, g, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const CyclicAlgebra<K> a(k, parse_b(k, o));
    std::mt19937_64 rng(g.seed);
    FixedPointReport rep;
    if constexpr (FiniteCyclicTower<K>) {
      const auto total = nt::checked_pow(k.order(), static_cast<unsigned>(a.n() * a.n()));
      rep = total && *total <= g.max_exhaustive ? fixed_points_exhaustive(a, g.max_exhaustive)
                                                : fixed_points_sampled(a, rng, samples);
    } else {
      rep = fixed_points_sampled(a, rng, samples);
    }
    Result r;
    r.body = {{"field", describe(k)}, {"b", k.to_string(a.b())}};
    r.body.update(to_json(rep));
    r.ok = rep.equal;
    return r;
  });
}

Result cmd_wedderburn(const FieldOptions& o, const Global& g) {
  return with_tower(o, g, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const CyclicAlgebra<K> a(k, parse_b(k, o));
    const auto w = wedderburn_index(a);
    Result r;
    r.body = {{"field", describe(k)}, {"b", k.to_string(a.b())}, {"wedderburn", to_json(w)}};
    const Verdict div = w.status == IndexStatus::Found ? (w.index == a.n() ? Verdict::Yes : Verdict::No) : Verdict::Unknown;
    r.body["division"] = to_string(div);
    if constexpr (FiniteCyclicTower<K>) {
      const auto size = nt::checked_pow(k.order(), static_cast<unsigned>(a.n()));
      if (size && *size <= g.max_exhaustive) {
        const auto x = division_cross_check(a, g.max_exhaustive);
        r.body["cross_check"] = to_json(x);
        r.ok = x.consistent;
      }
      r.ok = r.ok && div == Verdict::No;
    }
    return r;
  });
}

Result cmd_localex(std::uint64_t l, std::uint64_t p, int k, int n, const Global& g) {
  LocalExampleParams params;
  try {
    params = LocalExampleParams::make(l, p, k, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Result r;
  const auto lemma = lemma42_check(l, static_cast<std::uint64_t>(n));
  const auto prop = audit_prop43(params, g.prec, g.seed);
  const auto cor = audit_cor45(l, n, g.prec, p, g.seed);
  const auto prop_ratio = proportion_check(static_cast<std::uint64_t>(n), g.seed);
  json disagreements = json::array();
  if (!lemma.counterexamples.empty()) disagreements.push_back("lemma42");
  if (prop.agrees_with_paper == "false") disagreements.push_back("prop43");
  if (cor.agrees_with_paper == "false") disagreements.push_back("cor45");
  r.body = {{"params", to_json(params)},
            {"lemma42", to_json(lemma)},
            {"prop43", to_json(prop)},
            {"cor45", to_json(cor)},
            {"proportion", to_json(prop_ratio)},
            {"disagreements", disagreements},
            {"disagrees_with_paper", !disagreements.empty()},
            {"witnesses_sound", prop.witnesses_sound && cor.witnesses_sound}};
  r.ok = prop.witnesses_sound && cor.witnesses_sound && prop_ratio.counts_agree && prop_ratio.valuation_mismatches == 0;
  return r;
}

void add_field_options(CLI::App* sub, FieldOptions& o) {
  sub->add_option("--field", o.field, "Tower model: ff, cyclo or padic")->check(CLI::IsMember({"ff", "cyclo", "padic"}));
  sub->add_option("--q", o.q, "ff: base field order");
  sub->add_option("--n", o.n, "Degree of the tower");
  sub->add_option("--m", o.m, "cyclo: conductor");
  sub->add_option("--s", o.s, "cyclo: sigma is zeta -> zeta^s");
  sub->add_option("--l", o.l, "padic: residue characteristic");
  sub->add_option("--d", o.d, "padic: absolute degree (defaults to n)");
  sub->add_option("--b", o.b, "The element b of the base field");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic algebras, nonabelian H^1 and local norm audits"};
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}))->capture_default_str();
  app.add_option("--max-exhaustive", g.max_exhaustive, "Cap on exhaustively enumerated objects")->capture_default_str();
  app.add_option("--prec", g.prec, "l-adic precision")->check(CLI::Range(1, kLocalMaxPrecision))->capture_default_str();

  std::int64_t pn_n = 0;
  bool pn_list = false;
  auto* pn = app.add_subcommand("pn", "Partitions of n into divisors of n");
  pn->add_option("n", pn_n, "n >= 1")->required();
  pn->add_flag("--list", pn_list, "List the partitions");

  FieldOptions fo;
  std::string target = "W", twist;
  bool list = false;
  auto* z1 = app.add_subcommand("z1", "Enumerate cocycles");
  auto* h1 = app.add_subcommand("h1", "Classify cocycles");
  for (auto* sub : {z1, h1}) {
    add_field_options(sub, fo);
    sub->add_option("--target", target, "T, N, W or Tg")->check(CLI::IsMember({"T", "N", "W", "Tg"}));
    sub->add_option("--twist", twist, "Tg: Weyl image of the twisting cocycle, e.g. \"(1 2)\"");
    sub->add_flag("--list", list, "List cocycles or class members");
  }
  auto* pstar = app.add_subcommand("pstar-check", "Injectivity of H^1(N) -> H^1(W)");
  add_field_options(pstar, fo);

  std::string element, matrix;
  long long power = 1;
  std::uint64_t samples = 200;
  auto* embed = app.add_subcommand("embed", "Embed an algebra element as a matrix");
  add_field_options(embed, fo);
  embed->add_option("--element", element, "JSON array of n coefficients (default: random)");
  auto* act = app.add_subcommand("act", "Apply the sigma action to a matrix");
  add_field_options(act, fo);
  act->add_option("--matrix", matrix, "JSON array of rows (default: random invertible)");
  act->add_option("--power", power, "Number of applications");
  act->add_option("--samples", samples, "Random pairs for the law check");
  auto* fix = app.add_subcommand("fixcheck", "Fixed points against embedded units");
  add_field_options(fix, fo);
  fix->add_option("--samples", samples, "Samples when the exhaustive cap is exceeded");
  auto* wed = app.add_subcommand("wedderburn", "Wedderburn index and division verdict");
  add_field_options(wed, fo);

  std::uint64_t ll = 0, lp = 0;
  int lk = 1, ln = 0;
  auto* loc = app.add_subcommand("localex", "Audit the local example");
  loc->add_option("--l", ll, "Prime l")->required();
  loc->add_option("--p", lp, "Prime p != l")->required();
  loc->add_option("--k", lk, "Level k");
  loc->add_option("--n", ln, "Degree n, dividing l - 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    Result r;
    std::string command;
    if (*pn) {
      command = "pn";
      r = cmd_pn(pn_n, pn_list);
    } else if (*z1) {
      command = "z1";
      r = cmd_cohomology(false, target, fo, g, twist, list);
    } else if (*h1) {
      command = "h1";
      r = cmd_cohomology(true, target, fo, g, twist, list);
    } else if (*pstar) {
      command = "pstar-check";
      r = cmd_pstar(fo, g);
    } else if (*embed) {
      command = "embed";
      r = cmd_embed(fo, g, element);
    } else if (*act) {
      command = "act";
      r = cmd_act(fo, g, matrix, power, samples);
    } else if (*fix) {
      command = "fixcheck";
      r = cmd_fixcheck(fo, g, samples);
    } else if (*wed) {
      command = "wedderburn";
      r = cmd_wedderburn(fo, g);
    } else {
      command = "localex";
      r = cmd_localex(ll, lp, lk, ln, g);
    }
    json report = {{"schema_version", kSchemaVersion}, {"command", command}, {"seed", g.seed}};
    report.update(r.body);
    report["ok"] = r.ok;
    emit(out, g, report);
    return r.ok ? kOk : kCheckFailed;
  } catch (const json::exception& e) {
    err << "error: malformed JSON argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace cycalg::cli
