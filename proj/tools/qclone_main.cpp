// Copyright (c) 2026 the qclone authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "qclone/cloning.hpp"
#include "qclone/commutant.hpp"
#include "qclone/diagram.hpp"
#include "qclone/random.hpp"
#include "qclone/extendibility.hpp"
#include "qclone/serialize.hpp"
#include "qclone/spectral.hpp"
#include "qclone/tensor_rep.hpp"

namespace {

using nlohmann::json;
using namespace qclone;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCap = 4;

json fraction_json(const Rational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()},
          {"text", rational_to_string(r)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int error_out(int code, const std::string& kind, const std::string& message) {
  emit({{"schema", 1}, {"error", {{"kind", kind}, {"message", message}}}});
  return code;
}

struct Options {
  int d = 2;
  int n = 2;
  int nmax = 9;
  int dmax = 9;
  int samples = 16;
  int trials = 8;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string family = "P";
  std::string level = "fast";
  std::vector<double> p;
  std::vector<double> a;
  std::string pDiagram, qDiagram;
};

Family family_from_name(const std::string& name, int wall) {
  if (name == "S") return Family::symmetric();
  if (name == "P") return Family::partition_monoid();
  if (name == "B") return Family::brauer();
  if (name == "WB") return Family::walled_brauer(wall);
  if (name == "U") return Family::uniform_block();
  throw qclone::ParseError("unknown family '" + name +
                           "' (expected S, P, B, WB, or U)");
}

int cmd_region_two_clone(const Options& opt) {
  json ellipses = json::array();
  for (int i = 1; i <= opt.samples; ++i) {
    double lambda = static_cast<double>(opt.d) * i / opt.samples;
    EllipseParams e = ellipse_params(lambda, opt.d);
    ellipses.push_back(
        {{"lambda", e.lambda}, {"a", e.a}, {"b", e.b}, {"c", e.c}});
  }
  emit({{"schema", 1}, {"d", opt.d}, {"ellipses", ellipses}});
  return kExitOk;
}

int cmd_region_member(const Options& opt) {
  if (opt.p.empty())
    return error_out(kExitUsage, "usage", "--p requires at least one entry");
  RegionResult res = region_membership(opt.p, opt.d, 40, 8, opt.seed);
  const double tol = 1e-7;
  std::string status = res.margin > tol
                           ? "outside"
                           : (res.margin > -tol ? "boundary" : "inside");
  json out = {{"schema", 1},
              {"d", opt.d},
              {"p", opt.p},
              {"inside", res.inside},
              {"status", status},
              {"margin", res.margin},
              {"witness", res.witness}};
  if (opt.p.size() == 2) {
    Region1to2Result two = region_1to2(opt.p[0], opt.p[1], opt.d);
    out["twoCloneInside"] = two.inside;
    if (two.lambdaWitness) out["lambdaWitness"] = *two.lambdaWitness;
  }
  emit(out);
  return res.inside ? kExitOk : kExitInfeasible;
}

int cmd_region_boundary(const Options& opt) {
  Rng rng = make_rng(opt.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  json points = json::array();
  for (int s = 0; s < opt.samples; ++s) {
    std::vector<double> a(opt.n);
    double tot = 0;
    for (double& x : a) {
      x = -std::log(std::max(1e-12, unif(rng)));
      tot += x;
    }
    for (double& x : a) x /= tot;
    std::vector<double> p = region_boundary_point(a, opt.d);
    RegionResult check = region_membership(p, opt.d, 0, 4, opt.seed + s);
    points.push_back({{"p", p}, {"margin", check.margin}, {"witness", a}});
  }
  emit({{"schema", 1}, {"d", opt.d}, {"n", opt.n}, {"boundary", points}});
  return kExitOk;
}

json cptp_json(const CptpReport& rep) {
  return {{"psd", rep.psd},
          {"minEig", rep.minEig},
          {"traceCondResidual", rep.traceCondResidual}};
}

int emit_channel(const Mat& choi, int N, int d, const Options& opt) {
  CptpReport rep = cptp_check(choi, d, ipow(d, N));
  FidelityPoint marg = marginal_report(choi, N, d, opt.trials, opt.seed);
  json out = {{"schema", 1},
              {"d", d},
              {"n", N},
              {"cptp", cptp_json(rep)},
              {"p", marg.p},
              {"f", marg.f},
              {"maxFitResidual", marg.maxFitResidual},
              {"choi", json::parse(operator_to_json(
                           choi, TensorSpace{d, N + 1}))}};
  emit(out);
  if (!rep.psd || rep.traceCondResidual > 1e-8) return kExitVerification;
  return kExitOk;
}

int cmd_channel_symmetric(const Options& opt) {
  return emit_channel(optimal_symmetric_channel(opt.n, opt.d), opt.n, opt.d,
                      opt);
}

int cmd_channel_asymmetric(const Options& opt) {
  if (opt.a.empty())
    return error_out(kExitUsage, "usage", "--a requires at least one entry");
  double tot = 0;
  for (double x : opt.a) {
    if (x < 0)
      return error_out(kExitUsage, "usage",
                       "direction entries must be nonnegative");
    tot += x;
  }
  if (std::abs(tot - 1.0) > 1e-9)
    return error_out(kExitUsage, "usage", "direction must sum to 1");
  return emit_channel(optimal_asymmetric_channel(opt.a, opt.d),
                      static_cast<int>(opt.a.size()), opt.d, opt);
}

int cmd_extend_table(const Options& opt) {
  if (opt.format == "csv") {
    std::cout << "N";
    for (int d = 2; d <= opt.dmax; ++d) std::cout << ",d=" << d;
    std::cout << "\n";
    for (int N = 2; N <= opt.nmax; ++N) {
      std::cout << N;
      for (int d = 2; d <= opt.dmax; ++d)
        std::cout << "," << rational_to_string(p_closed(N, d));
      std::cout << "\n";
    }
    return kExitOk;
  }
  json rows = json::array();
  for (int N = 2; N <= opt.nmax; ++N) {
    json row = json::array();
    for (int d = 2; d <= opt.dmax; ++d) row.push_back(fraction_json(p_closed(N, d)));
    rows.push_back({{"N", N}, {"p", row}});
  }
  emit({{"schema", 1}, {"nmax", opt.nmax}, {"dmax", opt.dmax}, {"table", rows}});
  return kExitOk;
}

int cmd_extend_verify(const Options& opt) {
  Rational closed = p_closed(opt.n, opt.d);
  DualResult dual = dual_numeric(opt.n, opt.d);
  RationalSparseOp ms = matching_state(opt.n, opt.d);
  auto [primal, exact] = isotropic_fit_exact(ms.pair_marginal(0, 1));
  bool dualAgrees = std::abs(dual.value - static_cast<double>(closed)) < 1e-6;
  bool primalOk = primal <= closed;
  json out = {{"schema", 1},
              {"n", opt.n},
              {"d", opt.d},
              {"closed", fraction_json(closed)},
              {"dualNumeric", dual.value},
              {"dualXStar", dual.xStar},
              {"primalMatching", fraction_json(primal)},
              {"primalExactFit", exact},
              {"agree", dualAgrees && primalOk && exact}};
  emit(out);
  return (dualAgrees && primalOk && exact) ? kExitOk : kExitVerification;
}

int cmd_extend_state33(const Options&) {
  RationalSparseOp rho = optimal_state_3_3();
  auto [p, exact] = isotropic_fit_exact(rho.pair_marginal(0, 1));
  double minEig = lambda_min(rho.to_dense());
  json out = {{"schema", 1},
              {"trace", fraction_json(rho.trace())},
              {"marginalP", fraction_json(p)},
              {"marginalExact", exact},
              {"minEig", minEig},
              {"psd", minEig > -1e-10}};
  emit(out);
  return kExitOk;
}

int cmd_algebra_compose(const Options& opt) {
  Diagram p = Diagram::parse(opt.pDiagram);
  Diagram q = Diagram::parse(opt.qDiagram);
  Family fam = family_from_name(opt.family, p.k() / 2);
  if (!is_member(p, fam) || !is_member(q, fam))
    return error_out(kExitInfeasible, "infeasible",
                     "diagram is not a member of family " + opt.family);
  auto [result, loops] = compose(p, q);
  emit({{"schema", 1},
        {"result", result.to_string_full()},
        {"loops", loops}});
  return kExitOk;
}

int cmd_selftest(const Options& opt) {
  int passed = 0, failed = 0;
  json checks = json::array();
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"pass", ok}});
    (ok ? passed : failed) += 1;
  };
  check("brauer count k=3",
        enumerate_family(Family::brauer(), 3).size() == 15);
  check("partition count k=2",
        enumerate_family(Family::partition_monoid(), 2).size() == 15);
  auto [comp, loops] = compose(Diagram::parse("1,3|2,6|4,5"),
                               Diagram::parse("1,2|3,5|4,6"));
  check("composition example",
        comp.to_string() == "1,2|3,6|4,5" && loops == 1);
  check("q-norm unit direction", std::abs(q_norm({1, 0}, 2) - 1.0) < 1e-10);
  check("q-norm symmetric direction",
        std::abs(q_norm({0.5, 0.5}, 2) - 2.0 / 3) < 1e-9);
  {
    std::vector<double> a{0.7, 0.3};
    Mat choi = optimal_asymmetric_channel(a, 2);
    FidelityPoint fp = marginal_report(choi, 2, 2, 4, opt.seed);
    double sat = a[0] * fp.f[0] + a[1] * fp.f[1];
    check("asymmetric saturation",
          std::abs(sat - upper_bound(a, 2, CloneMode::Universal)) < 1e-8);
  }
  check("two-clone boundary point", region_1to2(1.0, 0.0, 2).inside &&
                                        !region_1to2(1.0, 1.0, 2).inside);
  check("sigma partial trace", sigma_partial_trace_check(1, 2, 3, 2).ok);
  check("dual (3,2)",
        std::abs(dual_numeric(3, 2).value - 1.0 / 3) < 1e-6);
  {
    auto fit = isotropic_fit_exact(matching_state(4, 2).pair_marginal(0, 1));
    check("matching state (4,2)", fit.second && fit.first == Rational(1, 3));
  }
  check("central elements S_3",
        central_element_check(3, 2, CentralAlgebra::Symmetric).ok);
  if (opt.level == "full") {
    check("dual (3,3) = 7/19",
          std::abs(dual_numeric(3, 3).value - 7.0 / 19) < 1e-6);
    bool state33Ok = true;
    try {
      optimal_state_3_3();
    } catch (const VerificationError&) {
      state33Ok = false;
    }
    check("optimal state (3,3)", state33Ok);
    auto rep = commutant_dimension(Family::symmetric(), 3, 2, 20, opt.seed);
    check("commutant S_3 d=2",
          rep.diagramSpanRank == 5 && rep.maxCommutatorNorm < 1e-10);
    check("central elements Brauer",
          central_element_check(3, 3, CentralAlgebra::Brauer).ok);
    check("dual closed (5,3)",
          dual_closed(5, 3).value == Rational(7, 31));
  }
  emit({{"schema", 1},
        {"level", opt.level},
        {"passed", passed},
        {"failed", failed},
        {"checks", checks}});
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagram-algebra toolkit for cloning bounds and extendibility"};
  app.require_subcommand(1);
  Options opt;
  if (const char* cap = std::getenv("QCLONE_DENSE_CAP"); cap != nullptr)
    (void)cap;  // handled inside the library

  auto* region = app.add_subcommand("region", "Achievable shrink-factor regions");
  region->require_subcommand(1);
  auto* twoClone = region->add_subcommand("two-clone", "Ellipse family");
  twoClone->add_option("--d", opt.d)->required();
  twoClone->add_option("--samples", opt.samples);
  auto* member = region->add_subcommand("member", "Region membership");
  member->add_option("--d", opt.d)->required();
  member->add_option("--p", opt.p, "comma-separated shrink factors")
      ->required()
      ->delimiter(',');
  member->add_option("--seed", opt.seed);
  auto* boundary = region->add_subcommand("boundary", "Boundary samples");
  boundary->add_option("--d", opt.d)->required();
  boundary->add_option("--n", opt.n)->required();
  boundary->add_option("--samples", opt.samples);
  boundary->add_option("--seed", opt.seed);

  auto* channel = app.add_subcommand("channel", "Optimal cloning channels");
  channel->require_subcommand(1);
  auto* sym = channel->add_subcommand("symmetric", "Symmetric cloner");
  sym->add_option("--n", opt.n)->required();
  sym->add_option("--d", opt.d)->required();
  sym->add_option("--trials", opt.trials);
  sym->add_option("--seed", opt.seed);
  auto* asym = channel->add_subcommand("asymmetric", "Asymmetric cloner");
  asym->add_option("--d", opt.d)->required();
  asym->add_option("--a", opt.a, "direction vector")->required()->delimiter(',');
  asym->add_option("--trials", opt.trials);
  asym->add_option("--seed", opt.seed);

  auto* extend = app.add_subcommand("extend", "Pairwise isotropic extendibility");
  extend->require_subcommand(1);
  auto* table = extend->add_subcommand("table", "Closed-form p(N,d) table");
  table->add_option("--nmax", opt.nmax);
  table->add_option("--dmax", opt.dmax);
  table->add_option("--format", opt.format)
      ->check(CLI::IsMember({"json", "csv"}));
  auto* verify = extend->add_subcommand("verify", "Primal/dual cross-check");
  verify->add_option("--n", opt.n)->required();
  verify->add_option("--d", opt.d)->required();
  auto* state33 = extend->add_subcommand("state33", "Exact N=3, d=3 optimizer");
  (void)state33;

  auto* algebra = app.add_subcommand("algebra", "Diagram monoid operations");
  algebra->require_subcommand(1);
  auto* composeCmd = algebra->add_subcommand("compose", "Compose two diagrams");
  composeCmd->add_option("--family", opt.family);
  composeCmd->add_option("--k", opt.n);
  composeCmd->add_option("--p", opt.pDiagram)->required();
  composeCmd->add_option("--q", opt.qDiagram)->required();

  auto* selftest = app.add_subcommand("selftest", "Run invariant suites");
  selftest->add_option("--level", opt.level)
      ->check(CLI::IsMember({"fast", "full"}));
  selftest->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit({{"schema", 1},
          {"error", {{"kind", "usage"}, {"message", e.what()}}}});
    return kExitUsage;
  }

  try {
    if (twoClone->parsed()) return cmd_region_two_clone(opt);
    if (member->parsed()) return cmd_region_member(opt);
    if (boundary->parsed()) return cmd_region_boundary(opt);
    if (sym->parsed()) return cmd_channel_symmetric(opt);
    if (asym->parsed()) return cmd_channel_asymmetric(opt);
    if (table->parsed()) return cmd_extend_table(opt);
    if (verify->parsed()) return cmd_extend_verify(opt);
    if (state33->parsed()) return cmd_extend_state33(opt);
    if (composeCmd->parsed()) return cmd_algebra_compose(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const qclone::ParseError& e) {
    return error_out(kExitUsage, "parse", e.what());
  } catch (const DimensionError& e) {
    return error_out(kExitUsage, "dimension", e.what());
  } catch (const CapExceeded& e) {
    return error_out(kExitCap, "cap", e.what());
  } catch (const VerificationError& e) {
    return error_out(kExitVerification, "verification", e.what());
  }
  return kExitUsage;
}
