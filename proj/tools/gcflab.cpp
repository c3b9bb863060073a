// gcflab: exact-arithmetic experiments with generalized continued fractions
// driven by substitution sequences. Subcommands: convergents, diagnose,
// raney, rcf, stammer, quadratic. Exit codes: 0 success, 1 internal
// invariant violation or cross-check disagreement, 2 usage or parse error.

#include "gcflab/errors.hpp"
#include "gcflab/gcf.hpp"
#include "gcflab/raney.hpp"
#include "gcflab/rcf.hpp"
#include "gcflab/substitution.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace gcflab;

struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    os = &file;
  }
};

GCFInput input_from_options(const std::string& rule, const std::string& assign,
                            char seed) {
  Substitution s = Substitution::parse(rule);
  return GCFInput::from_substitution(s, seed, NumericAssignment::parse(assign));
}

int cmd_convergents(const std::string& rule, const std::string& assign, char seed,
                    std::size_t depth, const std::string& format,
                    const std::string& out_path) {
  GCFInput input = input_from_options(rule, assign, seed);
  OutputTarget out;
  out.open(out_path);

  std::vector<ConvergentPair> cs = convergents(input, depth);
  if (format == "csv") {
    *out.os << "n,p,q,value\n";
    for (const ConvergentPair& c : cs)
      *out.os << c.n << ',' << to_string(c.p) << ',' << to_string(c.q) << ','
              << Real::of(make_rational(c.p, c.q)).str() << '\n';
  } else {
    for (const ConvergentPair& c : cs)
      *out.os << "{\"n\":" << c.n << ",\"p\":\"" << to_string(c.p) << "\",\"q\":\""
              << to_string(c.q) << "\",\"value\":\""
              << Real::of(make_rational(c.p, c.q)).str() << "\"}\n";
  }
  return 0;
}

int cmd_diagnose(const std::string& rule, const std::string& assign, char seed,
                 std::size_t depth, const std::string& format,
                 const std::string& out_path) {
  GCFInput input = input_from_options(rule, assign, seed);
  OutputTarget out;
  out.open(out_path);

  DiagnosticsStream rows(input, depth);
  if (format == "csv") *out.os << diagnostics_csv_header() << '\n';
  while (auto row = rows.next()) {
    *out.os << (format == "csv" ? diagnostics_csv_row(*row) : diagnostics_json_row(*row))
            << '\n';
    // d_n < q_n/d_n is only guaranteed for large n; flag rather than fail
    if (row->margin <= 1)
      std::cerr << "note: margin <= 1 at n=" << row->n << " (d=" << to_string(row->d)
                << ", q/d=" << to_string(Integer(row->q / row->d)) << ")\n";
  }
  return 0;
}

int cmd_raney_states(long det) {
  for (const raney::Config& s : raney::enumerate_states(det))
    std::cout << to_csv(s.mat()) << '\n';
  return 0;
}

int cmd_raney_table(long det, std::size_t max_input, const std::string& format,
                    const std::string& out_path) {
  OutputTarget out;
  out.open(out_path);
  std::vector<raney::Config> states = raney::enumerate_states(det);
  std::vector<raney::Edge> edges = raney::derive_table(det, max_input);
  if (format == "json")
    *out.os << raney::table_to_json(det, states, edges) << '\n';
  else
    *out.os << raney::table_to_graph(edges);
  return 0;
}

int cmd_raney_run(long det, const std::string& state_csv, const std::string& input) {
  raney::Config state{mat2_from_csv(state_csv)};
  if (det != 0 && state.mat().det() != det)
    throw std::invalid_argument("state determinant is " + to_string(state.mat().det()) +
                                ", not " + std::to_string(det));
  raney::Config config = state;
  for (std::size_t i = 0; i < input.size(); ++i) {
    raney::StepResult step = raney::feed(config, input[i]);
    std::cout << "step " << i + 1 << ": read " << input[i] << " emit "
              << (step.output.empty() ? "-" : step.output) << " config "
              << to_csv(step.next.mat()) << '\n';
    config = std::move(step.next);
  }
  raney::RunResult whole = raney::run(state, input);
  std::cout << "output: " << whole.output << "\nfinal: " << to_csv(whole.final_config.mat())
            << '\n';
  return 0;
}

int cmd_rcf(std::size_t foldings, std::size_t depth, bool crosscheck,
            const std::string& assign_text, const std::string& format,
            const std::string& out_path) {
  NumericAssignment assign = NumericAssignment::parse(assign_text);
  OutputTarget out;
  out.open(out_path);

  if (crosscheck) {
    rcf::CrossCheckReport report = rcf::cross_check(foldings, depth, assign);
    if (format == "json") {
      *out.os << rcf::report_to_json(report) << '\n';
    } else {
      auto print_list = [&](const rcf::QuotientReport& r) {
        *out.os << r.source << " confirmed:";
        for (const Integer& q : r.confirmed) *out.os << ' ' << to_string(q);
        *out.os << "\n" << r.source << " next >= " << to_string(r.next_lower_bound) << '\n';
      };
      print_list(report.transducer);
      print_list(report.interval);
      *out.os << "agreed: " << report.agreed << '\n'
              << "discrepancy: " << (report.discrepancy ? "true" : "false") << '\n';
    }
    return report.discrepancy ? 1 : 0;
  }

  rcf::LetterEncoding enc = rcf::LetterEncoding::from_assignment(assign);
  rcf::NormalForm nf = rcf::normalize(folding_word(foldings), enc);
  rcf::QuotientReport report = rcf::confirmed_quotients(nf);
  if (format == "json") {
    *out.os << rcf::report_to_json(report) << '\n';
  } else {
    *out.os << "confirmed:";
    for (const Integer& q : report.confirmed) *out.os << ' ' << to_string(q);
    *out.os << "\nnext >= " << to_string(report.next_lower_bound) << '\n'
            << "residual: " << to_string(nf.residual) << '\n';
  }
  return 0;
}

int cmd_stammer(const std::string& rule, char seed, std::size_t length,
                const std::string& exponent_text, std::size_t min_len,
                const std::string& out_path) {
  Substitution s = Substitution::parse(rule);
  Rational r = parse_rational(exponent_text);
  OutputTarget out;
  out.open(out_path);

  Word prefix = s.fixed_point_prefix(seed, length);
  std::vector<StammerHit> hits = stammer_scan(prefix, r, min_len);
  StammerBound bound = stammer_bound(s, seed);
  *out.os << "bound: " << to_string(bound.bound) << " (k=" << bound.k << ", j=" << bound.j
          << ", witness length " << bound.witness_len << ")\n";

  *out.os << "len,exponent,word\n";
  for (const StammerHit& hit : hits) {
    std::string shown = hit.w.size() <= 32 ? hit.w : hit.w.substr(0, 29) + "...";
    *out.os << hit.w.size() << ',' << to_string(hit.exponent) << ',' << shown << '\n';
  }
  return 0;
}

int cmd_quadratic(const std::string& rule, const std::string& assign, char seed,
                  std::size_t period, const std::string& width_text, bool alt_form,
                  const std::string& out_path) {
  GCFInput input = input_from_options(rule, assign, seed);
  Rational width = parse_rational(width_text);
  OutputTarget out;
  out.open(out_path);

  Quadratic quad = quadratic_approximant(input, period, width);
  *out.os << "polynomial: (" << to_string(quad.A) << ") x^2 + (" << to_string(quad.B)
          << ") x + (" << to_string(quad.C) << ")\n"
          << "root in [" << Real::of(quad.root.lo).str() << ", "
          << Real::of(quad.root.hi).str() << "]\n";
  if (alt_form) {
    QuadraticCoeffs alt = quadratic_alt_coeffs(input, period);
    *out.os << "alt polynomial: (" << to_string(alt.A) << ") x^2 + (" << to_string(alt.B)
            << ") x + (" << to_string(alt.C) << ")\n";
  }
  return 0;
}

char seed_from(const std::string& seed_text) {
  if (seed_text.size() != 1)
    throw std::invalid_argument("seed must be a single letter: '" + seed_text + "'");
  return seed_text[0];
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized-continued-fraction laboratory"};
  app.require_subcommand(1);

  // convergents
  auto* conv = app.add_subcommand("convergents", "print p_n, q_n up to a depth");
  std::string conv_rule, conv_assign, conv_seed = "a", conv_format = "csv", conv_out;
  std::size_t conv_depth = 8;
  conv->add_option("--rule", conv_rule, "substitution rules, e.g. a->ab;b->aa")->required();
  conv->add_option("--assign", conv_assign, "letter values, e.g. a=1,b=3")->required();
  conv->add_option("--seed", conv_seed, "fixed-point seed letter (default a)");
  conv->add_option("--depth", conv_depth, "largest index n");
  conv->add_option("--format", conv_format)->check(CLI::IsMember({"csv", "json"}));
  conv->add_option("--out", conv_out, "output path (default stdout)");

  // diagnose
  auto* diag = app.add_subcommand("diagnose", "per-depth gcd/growth diagnostics");
  std::string diag_rule, diag_assign, diag_seed = "a", diag_format = "csv", diag_out;
  std::size_t diag_depth = 64;
  diag->add_option("--rule", diag_rule)->required();
  diag->add_option("--assign", diag_assign)->required();
  diag->add_option("--seed", diag_seed);
  diag->add_option("--depth", diag_depth, "largest row index (>= 2)");
  diag->add_option("--format", diag_format)->check(CLI::IsMember({"csv", "json"}));
  diag->add_option("--out", diag_out);

  // raney states|table|run
  auto* raney_cmd = app.add_subcommand("raney", "balanced-matrix transducers");
  raney_cmd->require_subcommand(1);
  auto* states = raney_cmd->add_subcommand("states", "doubly balanced states");
  long states_det = 3;
  states->add_option("--det", states_det, "determinant (>= 2)")->required();
  auto* table = raney_cmd->add_subcommand("table", "derive the transducer table");
  long table_det = 3;
  std::size_t table_max_input = 8;
  std::string table_format = "graph", table_out;
  table->add_option("--det", table_det)->required();
  table->add_option("--max-input", table_max_input, "input-word horizon");
  table->add_option("--format", table_format)->check(CLI::IsMember({"graph", "json"}));
  table->add_option("--out", table_out);
  auto* run_cmd = raney_cmd->add_subcommand("run", "trace one input word");
  long run_det = 0;
  std::string run_state, run_input;
  run_cmd->add_option("--det", run_det, "expected determinant (optional check)");
  run_cmd->add_option("--state", run_state, "start state a,b,c,d")->required();
  run_cmd->add_option("--input", run_input, "word over {L,R}")->required();

  // rcf
  auto* rcf_cmd = app.add_subcommand("rcf", "confirmed regular-cf quotients");
  std::size_t rcf_foldings = 3, rcf_depth = 64;
  bool rcf_crosscheck = false;
  std::string rcf_assign = "a=1,b=3", rcf_format = "text", rcf_out;
  rcf_cmd->add_option("--foldings", rcf_foldings, "folding generation");
  rcf_cmd->add_option("--depth", rcf_depth, "enclosure depth for the interval arm");
  rcf_cmd->add_flag("--crosscheck", rcf_crosscheck, "compare both extraction arms");
  rcf_cmd->add_option("--assign", rcf_assign, "letter values (default a=1,b=3)");
  rcf_cmd->add_option("--format", rcf_format)->check(CLI::IsMember({"text", "json"}));
  rcf_cmd->add_option("--out", rcf_out);

  // stammer
  auto* stam = app.add_subcommand("stammer", "repetition structure of a fixed point");
  std::string stam_rule, stam_seed = "a", stam_exponent = "4/3", stam_out;
  std::size_t stam_length = 4096, stam_min_len = 1;
  stam->add_option("--rule", stam_rule)->required();
  stam->add_option("--seed", stam_seed);
  stam->add_option("--length", stam_length, "prefix length to scan");
  stam->add_option("--exponent", stam_exponent, "required exponent r > 1");
  stam->add_option("--min-len", stam_min_len, "smallest repeated-word length");
  stam->add_option("--out", stam_out);

  // quadratic
  auto* quad = app.add_subcommand("quadratic", "periodic-continuation quadratic");
  std::string quad_rule, quad_assign, quad_seed = "a", quad_width = "1e-30", quad_out;
  std::size_t quad_period = 1;
  bool quad_alt = false;
  quad->add_option("--rule", quad_rule)->required();
  quad->add_option("--assign", quad_assign)->required();
  quad->add_option("--seed", quad_seed);
  quad->add_option("--period", quad_period, "period length k >= 1")->required();
  quad->add_option("--width", quad_width, "root enclosure width");
  quad->add_flag("--alt-form", quad_alt, "also print the alternative coefficients");
  quad->add_option("--out", quad_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (conv->parsed())
      return cmd_convergents(conv_rule, conv_assign, seed_from(conv_seed), conv_depth,
                             conv_format, conv_out);
    if (diag->parsed())
      return cmd_diagnose(diag_rule, diag_assign, seed_from(diag_seed), diag_depth,
                          diag_format, diag_out);
    if (raney_cmd->parsed()) {
      if (states->parsed()) return cmd_raney_states(states_det);
      if (table->parsed())
        return cmd_raney_table(table_det, table_max_input, table_format, table_out);
      if (run_cmd->parsed()) return cmd_raney_run(run_det, run_state, run_input);
    }
    if (rcf_cmd->parsed())
      return cmd_rcf(rcf_foldings, rcf_depth, rcf_crosscheck, rcf_assign, rcf_format,
                     rcf_out);
    if (stam->parsed())
      return cmd_stammer(stam_rule, seed_from(stam_seed), stam_length, stam_exponent,
                         stam_min_len, stam_out);
    if (quad->parsed())
      return cmd_quadratic(quad_rule, quad_assign, seed_from(quad_seed), quad_period,
                           quad_width, quad_alt, quad_out);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
