#pragma once

#include "gcflab/arith.hpp"
#include "gcflab/real.hpp"
#include "gcflab/substitution.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

namespace gcflab {

/// One coefficient sequence of a generalized continued fraction: an explicit
/// finite list, a periodic continuation of a finite list, or the fixed point
/// of a substitution under a numeric assignment. Value semantics; the
/// substitution-backed prefix cache is shared between copies and is not
/// synchronized (streams are single-consumer).
class SequenceSource {
public:
  static SequenceSource from_list(std::vector<Integer> values);
  static SequenceSource periodic(std::vector<Integer> period);
  static SequenceSource from_substitution(Substitution s, char seed,
                                          NumericAssignment assign);

  /// n-th value; throws when a finite list is exhausted.
  Integer at(std::size_t n) const;
  /// Smallest/largest value the source can emit (for lists: attained values
  /// from `from` onward; for substitutions: the assignment range).
  Integer min_from(std::size_t from) const;
  Integer max_from(std::size_t from) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// A generalized continued fraction a_0 + b_0/(a_1 + b_1/(...)) with
/// coefficient bounds alpha <= a_n, b_n <= beta (a_0 exempt, may be 0).
class GCFInput {
public:
  static GCFInput from_lists(std::vector<Integer> a, std::vector<Integer> b);
  /// a = b = the substitution fixed point mapped through the assignment.
  static GCFInput from_substitution(const Substitution& s, char seed,
                                    const NumericAssignment& assign);
  static GCFInput from_sources(SequenceSource a, SequenceSource b, Integer alpha,
                               Integer beta);
  /// Periodic continuation with period k of this input's leading coefficients.
  GCFInput periodic_continuation(std::size_t k) const;

  Integer a(std::size_t n) const;  // validated: a_0 >= 0, a_n >= 1 for n >= 1
  Integer b(std::size_t n) const;  // validated: b_n >= 1
  const Integer& alpha() const { return alpha_; }
  const Integer& beta() const { return beta_; }

private:
  GCFInput(SequenceSource a, SequenceSource b, Integer alpha, Integer beta);
  SequenceSource a_, b_;
  Integer alpha_, beta_;
};

struct ConvergentPair {
  std::size_t n = 0;
  Integer p, q;
};

/// Streams the convergents p_n/q_n of an input via the second-order
/// recurrence, asserting the determinant identity
///   p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1) b_0...b_{n-1}
/// exactly at every step (InternalError on violation). Single-consumer.
class ConvergentStream {
public:
  explicit ConvergentStream(GCFInput input);

  const ConvergentPair& current() const { return cur_; }
  const ConvergentPair& advance();

  const Integer& p_prev() const { return prev_p_; }  // p_{n-1}
  const Integer& q_prev() const { return prev_q_; }  // q_{n-1}
  /// b_0 ... b_{n-1} for the current n (empty product = 1).
  const Integer& partial_numerator_product() const { return product_; }
  const GCFInput& input() const { return input_; }

private:
  void check_determinant_identity() const;
  GCFInput input_;
  ConvergentPair cur_;
  Integer prev_p_, prev_q_;
  Integer product_;
};

std::vector<ConvergentPair> convergents(const GCFInput& input, std::size_t n_max);

/// rho_k = -b_k q_{k-1} / q_{k+1}, exact; requires k >= 1.
Rational rho(const GCFInput& input, std::size_t k);

/// a_0 + (b_0/a_1)(1 + sum_{k=1}^{n-1} rho_1...rho_k); equals p_n/q_n exactly.
Rational series_partial(const GCFInput& input, std::size_t n);

/// Closed interval with exact rational endpoints containing the value of the
/// continued fraction.
struct Enclosure {
  Rational lo, hi;
  std::size_t depth = 0;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// The sandwich [p_n/q_n, p_{n+1}/q_{n+1}] (ordered); requires n >= 1.
Enclosure enclosure(const GCFInput& input, std::size_t n);

/// Smallest depth n >= 1 whose enclosure width is <= eps.
Enclosure evaluate(const GCFInput& input, const Rational& eps);

/// Integer quadratic A x^2 + B x + C with A >= 1 whose unique positive root
/// is the value of the purely periodic continuation of period k, bracketed
/// to the requested width. The coefficients come from the fixed point of the
/// period-k matrix product: A = q_{k-1}, B = b_{k-1} q_{k-2} - p_{k-1},
/// C = -b_{k-1} p_{k-2}.
struct Quadratic {
  Integer A, B, C;
  Enclosure root;
};

Quadratic quadratic_approximant(const GCFInput& input, std::size_t k,
                                const Rational& root_width);

struct QuadraticCoeffs {
  Integer A, B, C;
};

/// Alternative coefficient convention (q_{k-1}, q_k - p_{k-1}, -p_k), kept
/// for side-by-side comparison; disagrees with the fixed-point polynomial
/// already at k = 1.
QuadraticCoeffs quadratic_alt_coeffs(const GCFInput& input, std::size_t k);

/// Evaluates f(x) = A x^2 + B x + C exactly.
Rational quadratic_eval(const Integer& A, const Integer& B, const Integer& C,
                        const Rational& x);

/// Per-depth Diophantine diagnostics. Exact fields are exact; Real fields
/// are 256-bit presentation values.
struct DiagnosticsRow {
  std::size_t n = 0;
  Integer p, q;
  Integer d;        // gcd(p_n, q_n)
  Integer P;        // b_0 ... b_{n-1}
  Real q_root;      // q_n^(1/n)
  Real baker_ratio; // log q_{n+1} / log q_n
  Rational err;     // bound on |theta - p_n/q_n|: b_0...b_n / (q_n q_{n+1})
  Real eff_exp;     // -log(err) / log(q_n/d_n); inf when q_n = d_n
  Rational margin;  // (q_n/d_n)/d_n; margin > 1 witnesses d_n < q_n/d_n
};

/// Rows n = 2..n_max (q_2 >= 2 keeps every logarithm well defined).
/// Asserts d_n | P_n and the q_n^(1/n) <= 2 beta^(3/2) growth bound per row.
/// Requires n_max >= 2. Single-consumer.
class DiagnosticsStream {
public:
  DiagnosticsStream(GCFInput input, std::size_t n_max);
  std::optional<DiagnosticsRow> next();

private:
  ConvergentStream stream_;
  std::size_t n_max_;
  std::size_t next_n_;
  Integer root_bound_;       // (4 beta^3)^n for the next row
  Integer root_bound_step_;  // 4 beta^3
};

/// Column header n,p,q,d,P,q_root,baker_ratio,err,eff_exp,margin.
std::string diagnostics_csv_header();
/// One CSV line (no newline): exact integers in decimal, derived reals with
/// 30 significant digits.
std::string diagnostics_csv_row(const DiagnosticsRow& row);
/// One JSON object, same keys as the CSV columns.
std::string diagnostics_json_row(const DiagnosticsRow& row);

void write_csv(std::ostream& os, DiagnosticsStream& rows);
/// One JSON object per line, same keys as the CSV columns.
void write_jsonl(std::ostream& os, DiagnosticsStream& rows);

} // namespace gcflab
