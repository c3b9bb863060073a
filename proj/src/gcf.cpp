#include "gcflab/gcf.hpp"

#include "gcflab/errors.hpp"

#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <utility>

namespace gcflab {

struct SequenceSource::Impl {
  enum class Kind { list, periodic, substitution } kind;
  std::vector<Integer> values;  // list or period
  std::optional<FixedPointStream> stream;
  std::optional<NumericAssignment> assign;
};

SequenceSource SequenceSource::from_list(std::vector<Integer> values) {
  if (values.empty()) throw std::invalid_argument("sequence: empty list");
  SequenceSource s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Impl::Kind::list;
  s.impl_->values = std::move(values);
  return s;
}

SequenceSource SequenceSource::periodic(std::vector<Integer> period) {
  if (period.empty()) throw std::invalid_argument("sequence: empty period");
  SequenceSource s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Impl::Kind::periodic;
  s.impl_->values = std::move(period);
  return s;
}

SequenceSource SequenceSource::from_substitution(Substitution sub, char seed,
                                                 NumericAssignment assign) {
  for (char letter : sub.alphabet()) assign.at(letter);  // must cover the alphabet
  SequenceSource s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->kind = Impl::Kind::substitution;
  s.impl_->stream.emplace(std::move(sub), seed);
  s.impl_->assign = std::move(assign);
  return s;
}

Integer SequenceSource::at(std::size_t n) const {
  switch (impl_->kind) {
    case Impl::Kind::list:
      if (n >= impl_->values.size())
        throw std::invalid_argument("sequence exhausted at index " + std::to_string(n));
      return impl_->values[n];
    case Impl::Kind::periodic:
      return impl_->values[n % impl_->values.size()];
    case Impl::Kind::substitution:
      return impl_->assign->at(impl_->stream->prefix(n + 1)[n]);
  }
  throw std::logic_error("unreachable");
}

Integer SequenceSource::min_from(std::size_t from) const {
  if (impl_->kind == Impl::Kind::substitution) return impl_->assign->min_value();
  Integer m = impl_->values.back();
  for (std::size_t i = std::min(from, impl_->values.size() - 1); i < impl_->values.size(); ++i)
    if (impl_->values[i] < m) m = impl_->values[i];
  return m;
}

Integer SequenceSource::max_from(std::size_t from) const {
  if (impl_->kind == Impl::Kind::substitution) return impl_->assign->max_value();
  Integer m = impl_->values.back();
  for (std::size_t i = std::min(from, impl_->values.size() - 1); i < impl_->values.size(); ++i)
    if (impl_->values[i] > m) m = impl_->values[i];
  return m;
}

GCFInput::GCFInput(SequenceSource a, SequenceSource b, Integer alpha, Integer beta)
    : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ < 1 || beta_ < alpha_)
    throw std::invalid_argument("input bounds must satisfy 1 <= alpha <= beta");
}

GCFInput GCFInput::from_lists(std::vector<Integer> a, std::vector<Integer> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("input lists must be nonempty");
  SequenceSource sa = SequenceSource::from_list(std::move(a));
  SequenceSource sb = SequenceSource::from_list(std::move(b));
  // a_0 is exempt from the alphabet bounds.
  Integer alpha = std::min(sa.min_from(1), sb.min_from(0));
  Integer beta = std::max(sa.max_from(1), sb.max_from(0));
  return GCFInput(std::move(sa), std::move(sb), std::move(alpha), std::move(beta));
}

GCFInput GCFInput::from_substitution(const Substitution& s, char seed,
                                     const NumericAssignment& assign) {
  SequenceSource src = SequenceSource::from_substitution(s, seed, assign);
  return GCFInput(src, src, assign.min_value(), assign.max_value());
}

GCFInput GCFInput::from_sources(SequenceSource a, SequenceSource b, Integer alpha,
                                Integer beta) {
  return GCFInput(std::move(a), std::move(b), std::move(alpha), std::move(beta));
}

GCFInput GCFInput::periodic_continuation(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("periodic continuation requires period >= 1");
  std::vector<Integer> pa, pb;
  pa.reserve(k);
  pb.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    pa.push_back(a(i));
    pb.push_back(b(i));
  }
  return GCFInput(SequenceSource::periodic(std::move(pa)),
                  SequenceSource::periodic(std::move(pb)), alpha_, beta_);
}

Integer GCFInput::a(std::size_t n) const {
  Integer v = a_.at(n);
  if (n == 0 ? v < 0 : v < 1)
    throw std::invalid_argument("a_" + std::to_string(n) + " out of range: " + to_string(v));
  return v;
}

Integer GCFInput::b(std::size_t n) const {
  Integer v = b_.at(n);
  if (v < 1)
    throw std::invalid_argument("b_" + std::to_string(n) + " out of range: " + to_string(v));
  return v;
}

ConvergentStream::ConvergentStream(GCFInput input) : input_(std::move(input)) {
  cur_.n = 0;
  cur_.p = input_.a(0);
  cur_.q = 1;
  prev_p_ = 1;
  prev_q_ = 0;
  product_ = 1;
  check_determinant_identity();
}

const ConvergentPair& ConvergentStream::advance() {
  const Integer a_next = input_.a(cur_.n + 1);
  const Integer b_cur = input_.b(cur_.n);
  Integer p_next = a_next * cur_.p + b_cur * prev_p_;
  Integer q_next = a_next * cur_.q + b_cur * prev_q_;
  prev_p_ = std::move(cur_.p);
  prev_q_ = std::move(cur_.q);
  cur_.p = std::move(p_next);
  cur_.q = std::move(q_next);
  product_ *= b_cur;
  ++cur_.n;
  if (cur_.n >= 2 && cur_.q <= prev_q_)
    throw InternalError("denominators not increasing at n = " + std::to_string(cur_.n));
  check_determinant_identity();
  return cur_;
}

void ConvergentStream::check_determinant_identity() const {
  // p_n q_{n-1} - p_{n-1} q_n = (-1)^(n-1) b_0...b_{n-1}, exactly, at every n.
  Integer lhs = cur_.p * prev_q_ - prev_p_ * cur_.q;
  if (cur_.n % 2 == 0) {
    if (lhs != -product_)
      throw InternalError("determinant identity violated at n = " + std::to_string(cur_.n));
  } else {
    if (lhs != product_)
      throw InternalError("determinant identity violated at n = " + std::to_string(cur_.n));
  }
}

std::vector<ConvergentPair> convergents(const GCFInput& input, std::size_t n_max) {
  ConvergentStream stream(input);
  std::vector<ConvergentPair> out;
  out.reserve(n_max + 1);
  out.push_back(stream.current());
  while (stream.current().n < n_max) out.push_back(stream.advance());
  return out;
}

Rational rho(const GCFInput& input, std::size_t k) {
  if (k < 1) throw std::invalid_argument("rho requires k >= 1");
  ConvergentStream stream(input);
  Integer q_km1;
  while (stream.current().n < k + 1) {
    if (stream.current().n == k - 1) q_km1 = stream.current().q;
    stream.advance();
  }
  Rational r = make_rational(input.b(k) * q_km1, stream.current().q);
  return -r;
}

Rational series_partial(const GCFInput& input, std::size_t n) {
  if (n < 1) throw std::invalid_argument("series_partial requires n >= 1");
  ConvergentStream stream(input);
  std::vector<Integer> q;
  q.reserve(n + 1);
  q.push_back(stream.current().q);
  while (stream.current().n < n) q.push_back(stream.advance().q);

  Rational sum(1);
  Rational prod(1);
  for (std::size_t k = 1; k <= n - 1; ++k) {
    prod *= -make_rational(input.b(k) * q[k - 1], q[k + 1]);
    sum += prod;
  }
  return Rational(input.a(0)) + make_rational(input.b(0), input.a(1)) * sum;
}

Enclosure enclosure(const GCFInput& input, std::size_t n) {
  if (n < 1) throw std::invalid_argument("enclosure requires n >= 1");
  ConvergentStream stream(input);
  Rational v_n;
  while (stream.current().n < n + 1) {
    if (stream.current().n == n) v_n = make_rational(stream.current().p, stream.current().q);
    stream.advance();
  }
  Rational v_next = make_rational(stream.current().p, stream.current().q);
  Enclosure e;
  e.depth = n;
  if (v_n <= v_next) {
    e.lo = std::move(v_n);
    e.hi = std::move(v_next);
  } else {
    e.lo = std::move(v_next);
    e.hi = std::move(v_n);
  }
  return e;
}

Enclosure evaluate(const GCFInput& input, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("evaluate requires eps > 0");
  ConvergentStream stream(input);
  stream.advance();  // n = 1
  Rational prev = make_rational(stream.current().p, stream.current().q);
  for (;;) {
    const ConvergentPair& c = stream.advance();
    Rational v = make_rational(c.p, c.q);
    Rational lo = std::min(prev, v);
    Rational hi = std::max(prev, v);
    if (hi - lo <= eps) return Enclosure{std::move(lo), std::move(hi), c.n - 1};
    prev = std::move(v);
  }
}

Rational quadratic_eval(const Integer& A, const Integer& B, const Integer& C,
                        const Rational& x) {
  return Rational(A) * x * x + Rational(B) * x + Rational(C);
}

Quadratic quadratic_approximant(const GCFInput& input, std::size_t k,
                                const Rational& root_width) {
  if (k < 1) throw std::invalid_argument("quadratic_approximant requires k >= 1");
  if (root_width <= 0) throw std::invalid_argument("root width must be positive");

  ConvergentStream stream(input);
  while (stream.current().n < k - 1) stream.advance();
  const Integer b_last = input.b(k - 1);

  Quadratic quad;
  quad.A = stream.current().q;           // q_{k-1} >= 1, never degenerate
  quad.B = b_last * stream.q_prev() - stream.current().p;
  quad.C = -b_last * stream.p_prev();

  if (quad.C == 0) {
    // Happens only when p_{k-2} = 0 (k = 2 with a_0 = 0): the quadratic
    // factors as x (A x + B); the fixed point is -B/A when positive.
    if (quad.B >= 0)
      throw std::domain_error("quadratic_approximant: no positive root");
    Rational root = make_rational(-quad.B, quad.A);
    quad.root = Enclosure{root, root, 0};
    return quad;
  }

  // C < 0, so f(0) < 0 and f is eventually positive: bisect on a sign change.
  Rational lo(0);
  Rational hi = Rational(1) + make_rational(abs(quad.B) + abs(quad.C), quad.A);
  std::size_t steps = 0;
  while (hi - lo > root_width) {
    Rational mid = (lo + hi) / 2;
    int sign = sgn(quadratic_eval(quad.A, quad.B, quad.C, mid));
    if (sign == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    (sign < 0 ? lo : hi) = mid;
    ++steps;
  }
  quad.root = Enclosure{std::move(lo), std::move(hi), steps};
  return quad;
}

QuadraticCoeffs quadratic_alt_coeffs(const GCFInput& input, std::size_t k) {
  if (k < 1) throw std::invalid_argument("quadratic_alt_coeffs requires k >= 1");
  ConvergentStream stream(input);
  while (stream.current().n < k) stream.advance();
  return {stream.q_prev(), stream.current().q - stream.p_prev(), -stream.current().p};
}

DiagnosticsStream::DiagnosticsStream(GCFInput input, std::size_t n_max)
    : stream_(std::move(input)), n_max_(n_max), next_n_(2) {
  if (n_max < 2) throw std::invalid_argument("diagnostics requires depth >= 2");
  const Integer beta = stream_.input().beta();
  root_bound_step_ = 4 * beta * beta * beta;            // (2 beta^(3/2))^2
  root_bound_ = root_bound_step_ * root_bound_step_;    // value at n = 2
}

std::optional<DiagnosticsRow> DiagnosticsStream::next() {
  if (next_n_ > n_max_) return std::nullopt;
  while (stream_.current().n < next_n_) stream_.advance();

  DiagnosticsRow row;
  row.n = next_n_;
  row.p = stream_.current().p;
  row.q = stream_.current().q;
  row.P = stream_.partial_numerator_product();
  row.d = gcd(row.p, row.q);
  if (!divides(row.d, row.P))
    throw InternalError("gcd does not divide the partial numerator product at n = " +
                        std::to_string(row.n));
  // q_n^(1/n) <= 2 beta^(3/2), checked as q_n^2 <= (4 beta^3)^n
  if (row.q * row.q > root_bound_)
    throw InternalError("denominator growth bound violated at n = " +
                        std::to_string(row.n));
  root_bound_ *= root_bound_step_;

  stream_.advance();  // expose q_{n+1} and b_0...b_n
  const Integer& q_next = stream_.current().q;
  row.err = make_rational(stream_.partial_numerator_product(), row.q * q_next);
  row.q_root = Real::nth_root(row.q, static_cast<unsigned long>(row.n));
  row.baker_ratio = Real::log_of(q_next) / Real::log_of(row.q);

  Integer q_over_d;
  mpz_divexact(q_over_d.get_mpz_t(), row.q.get_mpz_t(), row.d.get_mpz_t());
  row.margin = make_rational(q_over_d, row.d);
  row.eff_exp = (q_over_d == 1) ? Real::infinity()
                                : -Real::log_of(row.err) / Real::log_of(q_over_d);
  ++next_n_;
  return row;
}

std::string diagnostics_csv_header() {
  return "n,p,q,d,P,q_root,baker_ratio,err,eff_exp,margin";
}

std::string diagnostics_csv_row(const DiagnosticsRow& row) {
  return std::to_string(row.n) + ',' + to_string(row.p) + ',' + to_string(row.q) + ',' +
         to_string(row.d) + ',' + to_string(row.P) + ',' + row.q_root.str() + ',' +
         row.baker_ratio.str() + ',' + Real::of(row.err).str() + ',' + row.eff_exp.str() +
         ',' + Real::of(row.margin).str();
}

std::string diagnostics_json_row(const DiagnosticsRow& row) {
  nlohmann::ordered_json j;
  j["n"] = row.n;
  j["p"] = to_string(row.p);
  j["q"] = to_string(row.q);
  j["d"] = to_string(row.d);
  j["P"] = to_string(row.P);
  j["q_root"] = row.q_root.str();
  j["baker_ratio"] = row.baker_ratio.str();
  j["err"] = Real::of(row.err).str();
  j["eff_exp"] = row.eff_exp.str();
  j["margin"] = Real::of(row.margin).str();
  return j.dump();
}

void write_csv(std::ostream& os, DiagnosticsStream& rows) {
  os << diagnostics_csv_header() << '\n';
  while (auto row = rows.next()) os << diagnostics_csv_row(*row) << '\n';
}

void write_jsonl(std::ostream& os, DiagnosticsStream& rows) {
  while (auto row = rows.next()) os << diagnostics_json_row(*row) << '\n';
}

} // namespace gcflab
