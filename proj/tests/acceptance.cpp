// Acceptance gate: one line per criterion, PASS/FAIL, exit 0 only if all pass.
// Every tolerance and workload size is pinned here as a named constant.

#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "pwcanon/denest.hpp"
#include "pwcanon/normalform.hpp"
#include "pwcanon/oracle.hpp"
#include "pwcanon/parser.hpp"
#include "pwcanon/perf.hpp"
#include "pwcanon/printer.hpp"
#include "test_support.hpp"

using namespace pwcanon;

namespace {

// ---- pinned workloads and tolerances -------------------------------------
constexpr double kZeroCollapseBudgetMs = 1.0;     // criterion 1
constexpr int kEvalAgreementProbes = 200;         // criterion 4
constexpr int kPropertySuiteOps = 500;            // criteria 5 and 6
constexpr double kPropertySuiteBudgetSec = 10.0;  // criterion 5
constexpr int kPropertyMinConstructed = 100;      // criterion 5
constexpr int kPropertyMinMutated = 100;          // criterion 5
constexpr int kOracleDegreeBound = 4;             // criterion 5
constexpr int kRingLawTriples = 200;              // criterion 7
constexpr std::size_t kCountSizes[] = {100, 1000, 10000};    // criterion 8
constexpr std::size_t kTimingSizes[] = {1000, 2000, 4000};   // criterion 8
constexpr int kTimingReps = 5;                    // criterion 8
constexpr double kDoublingRatioLimit = 2.5;       // criterion 8
constexpr std::size_t kLocatorBreakpoints = 100000;  // criterion 9
constexpr int kLocatorProbes = 1000;              // criterion 9
constexpr int kLocatorScanChecks = 10;            // criterion 9
constexpr int kRoundTripOps = 200;                // criterion 10

int g_failures = 0;

void report(int idx, bool ok, const std::string& label) {
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", idx, label.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

Polynomial poly(std::vector<int> ints) {
  std::vector<Rational> c(ints.begin(), ints.end());
  return Polynomial(std::move(c));
}

PiecewiseOperator abs_op() {
  return make(BreakpointSet({Rational(0)}),
              {neg(variable()), constant(Rational(0)), variable()});
}

bool is_zero_single(const PiecewiseOperator& p) {
  return p.breakpoint_count() == 0 && structural_equal(p.end_piece().fn, from_poly(Polynomial()));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- criteria -------------------------------------------------------------

void criterion_1() {
  PiecewiseOperator squared = pw_mul(abs_op(), abs_op());
  PiecewiseOperator plain_square = make(BreakpointSet(), {mul(variable(), variable())});
  PiecewiseOperator diff = pw_sub(squared, plain_square);

  PiecewiseOperator out = canonical_form(diff);  // warmup, also the correctness check
  double best = 1e9;
  for (int r = 0; r < 3; ++r)
    best = std::min(best, time_ms([&] { out = canonical_form(diff); }));

  bool ok = is_zero_single(out) && best < kZeroCollapseBudgetMs;
  report(1, ok,
         "lifted |x|*|x| - x^2 collapses to the single-piece zero operator (" + fmt(best) +
             " ms, budget " + fmt(kZeroCollapseBudgetMs) + " ms)");
}

void criterion_2() {
  PiecewiseOperator spurious =
      make(BreakpointSet({Rational(0)}),
           {from_poly(Polynomial()), from_poly(poly({0, 0, 1})), from_poly(Polynomial())});

  bool fixed_point = structural_equal(pseudonormalform(spurious), spurious);
  PiecewiseOperator cf = canonical_form(spurious);
  bool collapsed = is_zero_single(cf);

  report(2, fixed_point && collapsed,
         "a spurious point discontinuity is a pseudo-normal-form fixed point yet "
         "canonicalizes to zero");
}

void criterion_3() {
  PwExprPtr inner_t = pw_cases(
      {Rational(1)},
      {pw_leaf(from_poly(poly({-3, 0, 1}))), pw_leaf(from_poly(poly({-5}))),
       pw_leaf(from_poly(poly({-12, 16, -7, 1})))});
  PwExprPtr inner_abs = pw_cases(
      {Rational(0)},
      {pw_leaf(neg(variable())), pw_leaf(constant(Rational(0))), pw_leaf(variable())});
  PwExprPtr nested =
      pw_cases({Rational(3)}, {inner_t, pw_leaf(from_poly(poly({3}))), inner_abs});

  PiecewiseOperator expected =
      make(BreakpointSet({Rational(1), Rational(3)}),
           {from_poly(poly({-3, 0, 1})), from_poly(poly({-5})),
            from_poly(poly({-12, 16, -7, 1})), from_poly(poly({3})), from_poly(poly({0, 1}))});

  report(3, structural_equal(canonical_form(nested), expected),
         "the nested five-branch display flattens to exactly the expected operator on {1,3}");
}

void criterion_4() {
  bool ok = evaluate(abs_op(), Rational(-5)) == Value::defined(Rational(5));

  std::mt19937_64 rng(20260816);
  for (int i = 0; ok && i < kEvalAgreementProbes; ++i) {
    GeneratorConfig cfg;
    cfg.breakpoints = static_cast<std::size_t>(i % 9);
    cfg.max_degree = 4;
    PiecewiseOperator p = random_operator(cfg, rng);
    Rational lambda = (i % 4 == 0 && cfg.breakpoints > 0)
                          ? p.breakpoints()[static_cast<std::size_t>(i) % cfg.breakpoints]
                          : testsup::random_rational(rng, -40, 60, 4);
    if (!(evaluate(p, lambda) == testsup::scan_evaluate(p, lambda))) ok = false;
  }
  report(4, ok,
         "evaluation selects with the argument and substitutes it (abs(-5)=5 plus " +
             std::to_string(kEvalAgreementProbes) + " random scan agreements)");
}

void criterion_5() {
  std::mt19937_64 rng(5001);
  int constructed = 0, mutated_pairs = 0, agreements = 0;
  bool ok = true;

  double elapsed_ms = time_ms([&] {
    for (int i = 0; ok && i < kPropertySuiteOps; ++i) {
      GeneratorConfig cfg;
      cfg.breakpoints = static_cast<std::size_t>(i % 9);
      cfg.max_degree = 4;
      OperatorRecipe recipe = random_recipe(cfg, rng);
      PiecewiseOperator p = materialize(recipe);

      PiecewiseOperator q = p;
      int expected = -1;  // -1: no ground truth, else 0/1
      switch (i % 5) {
        case 0:
        case 1: {
          BreakpointSet extra = testsup::random_points(rng, 1 + i % 4);
          q = refine(testsup::reshuffled(recipe, rng), extra);
          expected = 1;
          ++constructed;
          break;
        }
        case 2:
        case 3:
          q = materialize(testsup::mutated(recipe, rng));
          expected = 0;
          ++mutated_pairs;
          break;
        default:
          q = random_operator(cfg, rng);
          break;
      }

      bool via_canon = equiv_piecewise(p, q);
      bool via_oracle = extensional_equiv_oracle(p, q, kOracleDegreeBound);
      if (via_canon != via_oracle) ok = false;
      if (expected >= 0 && via_canon != (expected == 1)) ok = false;
      ++agreements;
    }
  });

  ok = ok && agreements == kPropertySuiteOps && constructed >= kPropertyMinConstructed &&
       mutated_pairs >= kPropertyMinMutated && elapsed_ms < kPropertySuiteBudgetSec * 1000.0;
  report(5, ok,
         "canonical equivalence matches the evaluation oracle on " +
             std::to_string(agreements) + "/" + std::to_string(kPropertySuiteOps) + " pairs (" +
             std::to_string(constructed) + " constructed-equivalent, " +
             std::to_string(mutated_pairs) + " mutated, " + fmt(elapsed_ms / 1000.0) +
             " s, budget " + fmt(kPropertySuiteBudgetSec) + " s)");
}

void criterion_6() {
  std::mt19937_64 rng(6001);
  const PolynomialDomain dom;
  bool ok = true;

  for (int i = 0; ok && i < kPropertySuiteOps; ++i) {
    GeneratorConfig cfg;
    cfg.breakpoints = static_cast<std::size_t>(i % 9);
    cfg.max_degree = 4;
    OperatorRecipe recipe = random_recipe(cfg, rng);
    if (i % 2 == 0) recipe = testsup::smeared(recipe, rng);
    PiecewiseOperator p = materialize(recipe);

    PiecewiseOperator cf = canonical_form(p);
    if (!structural_equal(canonical_form(cf), cf)) ok = false;

    PiecewiseOperator pn = pseudonormalform(p);
    if (!structural_equal(pseudonormalform(pn), pn)) ok = false;

    for (std::size_t k = 0; ok && k < p.piece_count(); ++k) {
      PieceFunction once = dom.canonicalize(p.piece(k));
      if (!structural_equal(dom.canonicalize(once), once)) ok = false;
    }
  }
  report(6, ok,
         "canonical form, pseudo normal form, and piece canonicalization are idempotent on " +
             std::to_string(kPropertySuiteOps) + " operators");
}

void criterion_7() {
  std::mt19937_64 rng(7001);
  bool ok = true;
  for (int i = 0; ok && i < kRingLawTriples; ++i) {
    GeneratorConfig cfg;
    cfg.breakpoints = static_cast<std::size_t>(i % 4);
    cfg.max_degree = 2;
    PiecewiseOperator a = random_operator(cfg, rng);
    PiecewiseOperator b = random_operator(cfg, rng);
    PiecewiseOperator c = random_operator(cfg, rng);

    if (!equiv_piecewise(pw_add(a, b), pw_add(b, a))) ok = false;
    if (!equiv_piecewise(pw_mul(a, b), pw_mul(b, a))) ok = false;
    if (!equiv_piecewise(pw_add(pw_add(a, b), c), pw_add(a, pw_add(b, c)))) ok = false;
    if (!equiv_piecewise(pw_mul(pw_mul(a, b), c), pw_mul(a, pw_mul(b, c)))) ok = false;
    if (!equiv_piecewise(pw_mul(a, pw_add(b, c)), pw_add(pw_mul(a, b), pw_mul(a, c))))
      ok = false;
  }
  report(7, ok,
         "lifted addition and multiplication satisfy the ring laws on " +
             std::to_string(kRingLawTriples) + " random triples");
}

void criterion_8() {
  std::mt19937_64 rng(8001);
  bool counts_ok = true;
  for (std::size_t d : kCountSizes) {
    GeneratorConfig cfg;
    cfg.breakpoints = d;
    cfg.min_degree = 3;  // fixed degree: cost must scale in the piece count alone
    cfg.max_degree = 3;
    PiecewiseOperator p = random_operator(cfg, rng);
    perf::reset();
    canonical_form(p);
    if (perf::counters().canonicalize_calls != 2 * d + 1) counts_ok = false;
  }

  // one operator per size, built outside the timed region; a warmup pass per
  // size, then the sizes interleaved across rounds so drift hits all equally
  std::vector<PiecewiseOperator> inputs;
  for (std::size_t d : kTimingSizes) {
    GeneratorConfig cfg;
    cfg.breakpoints = d;
    cfg.min_degree = 3;
    cfg.max_degree = 3;
    inputs.push_back(random_operator(cfg, rng));
    canonical_form(inputs.back());
  }
  std::vector<std::vector<double>> times(inputs.size());
  for (int r = 0; r < kTimingReps; ++r)
    for (std::size_t s = 0; s < inputs.size(); ++s)
      times[s].push_back(time_ms([&] { canonical_form(inputs[s]); }));

  std::vector<double> medians;
  for (auto& reps : times) {
    std::sort(reps.begin(), reps.end());
    medians.push_back(reps[reps.size() / 2]);
  }
  double r1 = medians[1] / medians[0];
  double r2 = medians[2] / medians[1];
  bool timing_ok = r1 <= kDoublingRatioLimit && r2 <= kDoublingRatioLimit;

  report(8, counts_ok && timing_ok,
         "canonicalization does exactly 2d+1 piece passes and doubling d scales time by " +
             fmt(r1) + " and " + fmt(r2) + " (limit " + fmt(kDoublingRatioLimit) + ")");
}

void criterion_9() {
  std::mt19937_64 rng(9001);
  GeneratorConfig cfg;
  cfg.breakpoints = kLocatorBreakpoints;
  cfg.min_degree = 0;
  cfg.max_degree = 0;
  PiecewiseOperator p = random_operator(cfg, rng);

  const std::uint64_t pieces = 2 * static_cast<std::uint64_t>(kLocatorBreakpoints) + 1;
  const std::uint64_t budget = std::bit_width(pieces - 1) + 1;  // ceil(log2(pieces)) + 1

  bool ok = true;
  std::uint64_t worst = 0;
  const BreakpointSet bps = p.breakpoints();
  for (int i = 0; ok && i < kLocatorProbes; ++i) {
    Rational lambda = (i % 10 == 0)
                          ? bps[static_cast<std::size_t>(rng() % kLocatorBreakpoints)]
                          : testsup::random_rational(rng, -100, 500000, 4);
    perf::reset();
    RegionLocator where = chi(p, lambda);
    std::uint64_t used = perf::counters().order_comparisons;
    worst = std::max(worst, used);
    if (used > budget) ok = false;

    if (i < kLocatorScanChecks) {
      std::size_t idx = 0;
      RegionLocator slow = RegionLocator::open_region(bps.size());
      for (; idx < bps.size(); ++idx) {
        if (lambda < bps[idx]) {
          slow = RegionLocator::open_region(idx);
          break;
        }
        if (lambda == bps[idx]) {
          slow = RegionLocator::at_breakpoint(idx);
          break;
        }
      }
      if (!(where == slow)) ok = false;
    }
  }
  report(9, ok,
         "piece location over " + std::to_string(kLocatorBreakpoints) + " breakpoints uses at most " +
             std::to_string(worst) + " comparisons per probe (budget " + std::to_string(budget) +
             ", " + std::to_string(kLocatorProbes) + " probes)");
}

void criterion_10(const std::string& cli) {
  std::mt19937_64 rng(10001);
  bool ok = true;
  for (int i = 0; ok && i < kRoundTripOps; ++i) {
    GeneratorConfig cfg;
    cfg.breakpoints = static_cast<std::size_t>(i % 7);
    PiecewiseOperator p = canonical_form(random_operator(cfg, rng));
    if (!structural_equal(canonical_form(parse(print(p))), p)) ok = false;
  }

  std::string detail = "exercised in-process only (no CLI path given)";
  if (!cli.empty()) {
    namespace fs = std::filesystem;
    auto path = [&](const char* stem) {
      return (fs::temp_directory_path() / (std::string("pwcanon_accept_") + stem + ".txt"))
          .string();
    };
    std::string sq_pw = path("sq_pw"), sq = path("sq"), line = path("line"), bad = path("bad");
    testsup::write_file(sq_pw, "pw { x < 0 : x*x ; x = 0 : 0 ; otherwise : x*x }");
    testsup::write_file(sq, "x^2");
    testsup::write_file(line, "x");
    testsup::write_file(bad, "pw { x < 0 : 1 }");

    auto equivalent = testsup::run_command(testsup::quoted(cli) + " equiv " +
                                           testsup::quoted(sq_pw) + " " + testsup::quoted(sq));
    auto different = testsup::run_command(testsup::quoted(cli) + " equiv " +
                                          testsup::quoted(sq_pw) + " " + testsup::quoted(line));
    auto malformed = testsup::run_command(testsup::quoted(cli) + " equiv " +
                                          testsup::quoted(bad) + " " + testsup::quoted(sq));
    if (equivalent.status != 0 || equivalent.out != "true") ok = false;
    if (different.status != 1 || different.out != "false") ok = false;
    if (malformed.status != 2) ok = false;
    detail = "command exit statuses 0/1/2 verified";
  } else {
    ok = false;  // the gate requires the command-line binary
  }

  report(10, ok,
         "printing and parsing round-trip " + std::to_string(kRoundTripOps) +
             " canonical operators; " + detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);

  if (g_failures > 0) {
    std::printf("%d of 10 criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
