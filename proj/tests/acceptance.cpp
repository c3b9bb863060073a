// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failing criteria.

#include "generators.hpp"
#include "gcflab/gcf.hpp"
#include "gcflab/raney.hpp"
#include "gcflab/rcf.hpp"
#include "gcflab/substitution.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

using namespace gcflab;
using Clock = std::chrono::steady_clock;

namespace {

const Mat2 kBeta1{3, 0, 0, 1};
const Mat2 kBeta2{1, 0, 0, 3};
const Mat2 kBeta3{2, 1, 1, 2};

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

GCFInput pd_13() {
  return GCFInput::from_substitution(Substitution::parse("a->ab;b->aa"), 'a',
                                     NumericAssignment::parse("a=1,b=3"));
}

std::vector<GCFInput> random_suite(std::size_t lists, std::size_t substitutions,
                                   std::size_t len) {
  std::mt19937_64 rng(0x5EED5EEDull);
  std::vector<GCFInput> suite;
  suite.reserve(lists + substitutions);
  for (std::size_t i = 0; i < lists; ++i)
    suite.push_back(testing::random_list_input(rng, len));
  for (std::size_t i = 0; i < substitutions; ++i)
    suite.push_back(testing::random_substitution_input(rng));
  return suite;
}

// ---- criterion bodies ------------------------------------------------------

Check criterion_1_worked_run() {
  Check c;
  raney::RunResult warmup = raney::run(raney::Config(kBeta2), "RLLR");
  auto start = Clock::now();
  raney::RunResult r = raney::run(raney::Config(kBeta2), "RLLR");
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  c.expect(r.output == "LLRRRR", "output is " + r.output);
  c.expect(r.final_config.mat() == kBeta1, "final state " + to_csv(r.final_config.mat()));
  c.expect(warmup.output == r.output, "non-deterministic run");
  c.expect(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return c;
}

Check criterion_2_pending_input() {
  Check c;
  raney::RunResult r = raney::run(raney::Config(kBeta1), Word(11, 'L'));
  c.expect(r.output == "LLL", "output is " + r.output);
  c.expect(r.final_config.mat() == Mat2{3, 0, 2, 1},
           "final configuration " + to_csv(r.final_config.mat()));
  c.expect(r.final_config.mat() == kBeta1 * raney::lr_product("LL"),
           "final configuration is not the two-letter queue");
  return c;
}

Check criterion_3_table_derivation() {
  Check c;
  std::vector<raney::Config> states = raney::enumerate_states(3);
  c.expect(states.size() == 3, "state count " + std::to_string(states.size()));
  std::vector<raney::Edge> edges = raney::derive_table(3, 4);
  c.expect(edges.size() == 10, "edge count " + std::to_string(edges.size()));

  auto has = [&](const Mat2& from, const Word& in, const Word& out, const Mat2& to) {
    raney::Edge e{raney::Config(from), in, out, raney::Config(to)};
    return std::count(edges.begin(), edges.end(), e) == 1;
  };
  c.expect(has(kBeta1, "LLL", "L", kBeta1) && has(kBeta1, "R", "RRR", kBeta1) &&
               has(kBeta1, "LR", "R", kBeta3) && has(kBeta1, "LLR", "RLL", kBeta2) &&
               has(kBeta2, "L", "LLL", kBeta2) && has(kBeta2, "RRR", "R", kBeta2) &&
               has(kBeta2, "RL", "L", kBeta3) && has(kBeta2, "RRL", "LRR", kBeta1) &&
               has(kBeta3, "L", "LR", kBeta1) && has(kBeta3, "R", "RL", kBeta2),
           "edge set differs from the reference table");
  return c;
}

Check criterion_4_first_symbolic_computation() {
  Check c;
  rcf::LetterEncoding enc =
      rcf::LetterEncoding::from_assignment(NumericAssignment::parse("a=1,b=3"));
  rcf::NormalForm nf = rcf::normalize("abaaaba", enc);
  c.expect(nf.prefix == "R" + Word(4, 'L') + "R" + Word(10, 'L'),
           "prefix is " + nf.prefix);
  c.expect(nf.residual == kBeta2 * kBeta2 * raney::right() * raney::swap(),
           "residual is " + to_string(nf.residual));
  rcf::QuotientReport report = rcf::confirmed_quotients(nf);
  c.expect(report.confirmed == std::vector<Integer>{1, 4, 1},
           "confirmed quotients differ");
  c.expect(report.next_lower_bound == 10,
           "next bound " + to_string(report.next_lower_bound));
  return c;
}

Check criterion_5_second_symbolic_computation() {
  Check c;
  rcf::LetterEncoding enc =
      rcf::LetterEncoding::from_assignment(NumericAssignment::parse("a=1,b=3"));
  Word t = folding_word(3);
  c.expect(t.size() == 15, "folding word length " + std::to_string(t.size()));
  rcf::NormalForm nf = rcf::normalize(t, enc);
  c.expect(nf.prefix == "R" + Word(4, 'L') + "R" + Word(17, 'L') + "RLRL" + "RR" +
                            Word(3, 'L'),
           "prefix is " + nf.prefix);
  const Mat2& L = raney::left();
  c.expect(nf.residual == kBeta1 * kBeta1 * L * L * kBeta2 * kBeta2 * kBeta2 *
                              raney::right() * raney::swap(),
           "residual is " + to_string(nf.residual));
  rcf::QuotientReport report = rcf::confirmed_quotients(nf);
  c.expect(report.confirmed == std::vector<Integer>{1, 4, 1, 17, 1, 1, 1, 1, 2},
           "confirmed quotients differ");
  c.expect(report.next_lower_bound == 3,
           "next bound " + to_string(report.next_lower_bound));
  return c;
}

Check criterion_6_determinant_identity(const std::vector<GCFInput>& suite) {
  Check c;
  auto start = Clock::now();
  // the stream asserts the identity at every step; reaching the target depth
  // without an InternalError is the pass condition
  try {
    for (const GCFInput& input : suite) {
      ConvergentStream stream(input);
      while (stream.current().n < 5000) stream.advance();
    }
    ConvergentStream pd(pd_13());
    while (pd.current().n < 5000) pd.advance();
  } catch (const std::exception& e) {
    c.expect(false, e.what());
  }
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(s < 30.0, "took " + std::to_string(s) + " s");
  return c;
}

Check criterion_7_series_identity() {
  Check c;
  std::mt19937_64 rng(0xABCDEFull);
  for (int trial = 0; trial < 20 && c.ok; ++trial) {
    GCFInput input = testing::random_list_input(rng, 503);
    ConvergentStream stream(input);
    std::vector<Integer> p{stream.current().p}, q{stream.current().q};
    while (stream.current().n < 501) {
      stream.advance();
      p.push_back(stream.current().p);
      q.push_back(stream.current().q);
    }
    const Rational head = make_rational(input.b(0), input.a(1));
    const Rational a0(input.a(0));
    Rational sum(1), prod(1);
    for (std::size_t n = 1; n <= 500; ++n) {
      if (n >= 2) {
        const std::size_t k = n - 1;
        prod *= -make_rational(input.b(k) * q[k - 1], q[k + 1]);
        sum += prod;
      }
      if (a0 + head * sum != make_rational(p[n], q[n])) {
        c.expect(false, "mismatch at trial " + std::to_string(trial) + ", n = " +
                            std::to_string(n));
        break;
      }
    }
  }
  return c;
}

Check criterion_8_growth_and_rho_bounds(const std::vector<GCFInput>& suite) {
  Check c;
  for (std::size_t idx = 0; idx < suite.size() && c.ok; ++idx) {
    const GCFInput& input = suite[idx];
    const Integer alpha = input.alpha();
    const Integer beta = input.beta();
    const Integer upper_mul = alpha + beta;            // |rho| < beta/(alpha+beta)
    const Integer lower_mul = alpha + 2 * beta * beta; // |rho| > alpha/(alpha+2 beta^2)
    const Integer root_factor = 4 * beta * beta * beta;

    ConvergentStream stream(input);
    Integer q_nm2, q_nm1 = stream.current().q;  // q_0
    Integer pow2 = 1;                           // 2^(n-2) once n = 2
    Integer factor_n = root_factor;             // (4 beta^3)^n at n = 1
    while (stream.current().n < 5000 && c.ok) {
      stream.advance();
      const std::size_t n = stream.current().n;
      const Integer& q = stream.current().q;

      if (n >= 2) {
        // q_n >= 2^((n-2)/2), the shifted form of q_{n+1} >= 2^((n-1)/2)
        c.expect(q * q >= pow2, "growth lower bound fails at n = " + std::to_string(n) +
                                    " (input " + std::to_string(idx) + ")");
        pow2 <<= 1;
        // rho_{n-1} bounds via exact cross multiplication
        const std::size_t k = n - 1;
        const Integer num = input.b(k) * q_nm2;  // |rho_k| = num / q_{k+1}
        c.expect(num * upper_mul < beta * q,
                 "rho upper bound fails at k = " + std::to_string(k) + " (input " +
                     std::to_string(idx) + ")");
        c.expect(num * lower_mul > alpha * q,
                 "rho lower bound fails at k = " + std::to_string(k) + " (input " +
                     std::to_string(idx) + ")");
      }
      c.expect(q * q <= factor_n, "growth upper bound fails at n = " + std::to_string(n) +
                                      " (input " + std::to_string(idx) + ")");
      factor_n *= root_factor;
      q_nm2 = q_nm1;
      q_nm1 = q;
    }
  }
  return c;
}

Check criterion_9_enclosure_contract() {
  Check c;
  std::mt19937_64 rng(0xC0FFEEull);
  std::vector<GCFInput> inputs{pd_13(), testing::random_list_input(rng, 320),
                               testing::random_substitution_input(rng)};
  for (const GCFInput& input : inputs) {
    ConvergentStream stream(input);
    std::vector<Integer> q{stream.current().q};
    std::vector<Rational> v{make_rational(stream.current().p, stream.current().q)};
    std::vector<Integer> prod{1};
    Integer running = 1;
    while (stream.current().n < 300) {
      running *= input.b(stream.current().n);
      stream.advance();
      q.push_back(stream.current().q);
      v.push_back(make_rational(stream.current().p, stream.current().q));
      prod.push_back(running);
    }
    Rational prev_lo, prev_hi;
    for (std::size_t n = 1; n + 1 < v.size() && c.ok; ++n) {
      Rational lo = std::min(v[n], v[n + 1]);
      Rational hi = std::max(v[n], v[n + 1]);
      c.expect(hi - lo == make_rational(prod[n + 1], q[n] * q[n + 1]),
               "width differs from b_0..b_n/(q_n q_{n+1}) at n = " + std::to_string(n));
      if (n > 1)
        c.expect(lo >= prev_lo && hi <= prev_hi,
                 "enclosures not nested at n = " + std::to_string(n));
      prev_lo = std::move(lo);
      prev_hi = std::move(hi);
    }
  }

  auto start = Clock::now();
  Enclosure e = evaluate(pd_13(), parse_rational("1e-100"));
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(e.depth <= 2000, "depth " + std::to_string(e.depth));
  c.expect(e.width() <= parse_rational("1e-100"), "width too large");
  c.expect(s < 10.0, "evaluation took " + std::to_string(s) + " s");
  return c;
}

Check criterion_10_cross_check() {
  Check c;
  auto start = Clock::now();
  rcf::CrossCheckReport report =
      rcf::cross_check(12, 4096, NumericAssignment::parse("a=1,b=3"));
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(!report.discrepancy, "the two pipelines disagree");
  c.expect(report.agreed >= 40, "only " + std::to_string(report.agreed) +
                                    " common confirmed quotients");
  c.expect(s < 60.0, "took " + std::to_string(s) + " s");
  return c;
}

Check criterion_11_quadratic_approximants() {
  Check c;
  GCFInput pd = pd_13();
  const Rational width = parse_rational("1e-30");
  for (std::size_t k = 1; k <= 50 && c.ok; ++k) {
    Quadratic quad = quadratic_approximant(pd, k, width);
    c.expect(quad.root.width() <= width, "enclosure too wide at k = " + std::to_string(k));
    const Rational f_lo = quadratic_eval(quad.A, quad.B, quad.C, quad.root.lo);
    const Rational f_hi = quadratic_eval(quad.A, quad.B, quad.C, quad.root.hi);
    c.expect(f_lo <= 0 && f_hi >= 0,
             "no bracketed sign change at k = " + std::to_string(k));

    GCFInput periodic = pd.periodic_continuation(k);
    ConvergentStream stream(periodic);
    while (stream.current().n < 200 * k) stream.advance();
    Rational value = make_rational(stream.current().p, stream.current().q);
    c.expect(quad.root.contains(value),
             "periodic evaluation escapes the enclosure at k = " + std::to_string(k));
  }
  return c;
}

Check criterion_12_substitution_suite() {
  Check c;
  Substitution pd = Substitution::parse("a->ab;b->aa");

  const std::size_t n = std::size_t(1) << 14;
  c.expect(folding_limit_prefix(n) == pd.fixed_point_prefix('a', n),
           "folding limit differs from the fixed point at 2^14 letters");

  LetterFrequencies freqs = letter_frequencies(pd, 'a', std::size_t(1) << 16);
  c.expect(freqs.exact && freqs.values.at('a') == make_rational(2, 3) &&
               freqs.values.at('b') == make_rational(1, 3),
           "exact frequencies are not (2/3, 1/3)");
  c.expect(abs(freqs.empirical.at('a') - make_rational(2, 3)) <= make_rational(1, 100) &&
               abs(freqs.empirical.at('b') - make_rational(1, 3)) <= make_rational(1, 100),
           "empirical frequencies deviate by more than 0.01");

  StammerBound bound = stammer_bound(pd, 'a');
  c.expect(bound.bound == make_rational(4, 3), "bound is " + to_string(bound.bound));

  Word prefix = pd.fixed_point_prefix('a', std::size_t(1) << 12);
  std::vector<StammerHit> hits = stammer_scan(prefix, make_rational(4, 3), 1);
  c.expect(hits.size() >= 5, "only " + std::to_string(hits.size()) + " hits");
  for (std::size_t i = 1; i < hits.size(); ++i)
    c.expect(hits[i - 1].w.size() < hits[i].w.size(), "hit lengths not increasing");
  return c;
}

Check criterion_13_diagnostics() {
  Check c;
  DiagnosticsStream rows(pd_13(), 2000);
  std::size_t flagged_early = 0;
  while (auto row = rows.next()) {
    if (!divides(row->d, row->P)) {
      c.expect(false, "d does not divide P at n = " + std::to_string(row->n));
      break;
    }
    if (row->n >= 40)
      c.expect(row->baker_ratio.to_double() <= 1.5,
               "baker ratio exceeds 1.5 at n = " + std::to_string(row->n));
    if (row->margin <= 1) {
      if (row->n >= 10)
        c.expect(false, "margin <= 1 at n = " + std::to_string(row->n));
      else
        ++flagged_early;  // flagged, not failed: only guaranteed for large n
    }
  }
  if (flagged_early > 0)
    c.detail += " (" + std::to_string(flagged_early) + " early rows flagged)";
  return c;
}

} // namespace

int main() {
  std::vector<GCFInput> suite = random_suite(85, 15, 5003);

  struct Entry {
    int id;
    std::string name;
    std::function<Check()> body;
  };
  const std::vector<Entry> entries{
      {1, "transducer run reproduction", criterion_1_worked_run},
      {2, "pending-input reproduction", criterion_2_pending_input},
      {3, "determinant-3 table derivation", criterion_3_table_derivation},
      {4, "first symbolic computation", criterion_4_first_symbolic_computation},
      {5, "second symbolic computation", criterion_5_second_symbolic_computation},
      {6, "determinant identity at depth 5000",
       [&] { return criterion_6_determinant_identity(suite); }},
      {7, "series partial sums", criterion_7_series_identity},
      {8, "growth and rho bounds",
       [&] { return criterion_8_growth_and_rho_bounds(suite); }},
      {9, "enclosure contract", criterion_9_enclosure_contract},
      {10, "transducer/interval cross-check", criterion_10_cross_check},
      {11, "quadratic approximants", criterion_11_quadratic_approximants},
      {12, "substitution suite", criterion_12_substitution_suite},
      {13, "diagnostics", criterion_13_diagnostics},
  };

  int failures = 0;
  for (const Entry& entry : entries) {
    auto start = Clock::now();
    Check c;
    try {
      c = entry.body();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << entry.id << "  "
              << entry.name << "  (" << std::fixed << std::setprecision(2) << s << " s)";
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
    if (!c.ok) ++failures;
  }
  return failures;
}
