#include "gcflab/rcf.hpp"

#include "gcflab/raney.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gcflab::rcf {

LetterEncoding LetterEncoding::from_assignment(const NumericAssignment& assign) {
  LetterEncoding enc;
  for (const auto& [letter, v] : assign.values()) enc.matrices_[letter] = Mat2{v, v, 1, 0};
  return enc;
}

const Mat2& LetterEncoding::at(char letter) const {
  auto it = matrices_.find(letter);
  if (it == matrices_.end())
    throw std::invalid_argument(std::string("letter '") + letter + "' has no encoding");
  return it->second;
}

std::vector<Mat2> encode(const Word& w, const LetterEncoding& enc) {
  std::vector<Mat2> out;
  out.reserve(w.size());
  for (char c : w) out.push_back(enc.at(c));
  return out;
}

Normalizer::Normalizer(LetterEncoding enc)
    : enc_(std::move(enc)), residual_(Mat2::identity()) {}

void Normalizer::feed(char letter) {
  raney::EmitResult e = raney::emit(raney::Config(residual_ * enc_.at(letter)));
  prefix_ += e.output;
  residual_ = e.residual.mat();
}

NormalForm normalize(const Word& w, const LetterEncoding& enc) {
  Normalizer norm(enc);
  for (char c : w) norm.feed(c);
  return norm.normal_form();
}

std::vector<Integer> lr_to_quotients(const Word& lr) {
  std::vector<Integer> quotients;
  if (lr.empty()) return quotients;
  if (lr[0] == 'L') quotients.push_back(0);  // empty leading R run
  std::size_t i = 0;
  while (i < lr.size()) {
    char c = lr[i];
    if (c != 'L' && c != 'R')
      throw std::invalid_argument(std::string("letter '") + c + "' is not L or R");
    std::size_t j = i;
    while (j < lr.size() && lr[j] == c) ++j;
    quotients.push_back(Integer(static_cast<unsigned long>(j - i)));
    i = j;
  }
  return quotients;
}

QuotientReport confirmed_quotients(const NormalForm& nf) {
  QuotientReport report;
  report.source = "transducer";
  std::vector<Integer> runs = lr_to_quotients(nf.prefix);
  if (runs.empty()) {
    report.next_lower_bound = 0;
    return report;
  }
  report.next_lower_bound = runs.back();
  runs.pop_back();  // the last run may still be extended by further input
  report.confirmed = std::move(runs);
  return report;
}

namespace {

// Shared expansion loop; reports the disagreeing floors when they exist.
struct IntervalExpansion {
  std::vector<Integer> quotients;
  bool stopped_on_disagreement = false;
  Integer floor_lo, floor_hi;
};

IntervalExpansion expand_interval(const Enclosure& e) {
  if (!(e.lo > 0) || e.lo > e.hi)
    throw std::invalid_argument("interval_quotients requires 0 < lo <= hi");
  IntervalExpansion out;
  Rational lo = e.lo, hi = e.hi;
  for (;;) {
    Integer flo = floor_of(lo), fhi = floor_of(hi);
    if (flo != fhi) {
      out.stopped_on_disagreement = true;
      out.floor_lo = std::move(flo);
      out.floor_hi = std::move(fhi);
      return out;
    }
    out.quotients.push_back(flo);
    Rational rem_lo = lo - Rational(flo);
    Rational rem_hi = hi - Rational(fhi);
    if (rem_lo == 0 || rem_hi == 0) return out;  // exact integer endpoint
    lo = 1 / rem_hi;  // reciprocals swap the interval orientation
    hi = 1 / rem_lo;
  }
}

} // namespace

std::vector<Integer> interval_quotients(const Enclosure& e) {
  return expand_interval(e).quotients;
}

QuotientReport interval_report(const Enclosure& e) {
  IntervalExpansion x = expand_interval(e);
  QuotientReport report;
  report.source = "interval";
  report.confirmed = std::move(x.quotients);
  report.next_lower_bound =
      x.stopped_on_disagreement ? std::min(x.floor_lo, x.floor_hi) : Integer(0);
  return report;
}

namespace {

nlohmann::ordered_json quotients_to_json(const std::vector<Integer>& qs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Integer& q : qs) {
    if (mpz_fits_slong_p(q.get_mpz_t()))
      arr.push_back(mpz_get_si(q.get_mpz_t()));
    else
      arr.push_back(q.get_str());
  }
  return arr;
}

nlohmann::ordered_json report_json(const QuotientReport& r) {
  nlohmann::ordered_json j;
  j["confirmed"] = quotients_to_json(r.confirmed);
  if (mpz_fits_slong_p(r.next_lower_bound.get_mpz_t()))
    j["next_lower_bound"] = mpz_get_si(r.next_lower_bound.get_mpz_t());
  else
    j["next_lower_bound"] = r.next_lower_bound.get_str();
  j["source"] = r.source;
  return j;
}

} // namespace

std::string report_to_json(const QuotientReport& r) { return report_json(r).dump(); }

CrossCheckReport cross_check(std::size_t foldings, std::size_t gcf_depth,
                             const NumericAssignment& assign) {
  if (gcf_depth < 1) throw std::invalid_argument("cross_check requires gcf_depth >= 1");

  CrossCheckReport report;
  LetterEncoding enc = LetterEncoding::from_assignment(assign);
  report.transducer = confirmed_quotients(normalize(folding_word(foldings), enc));

  Substitution period_doubling = Substitution::parse("a->ab;b->aa");
  GCFInput input = GCFInput::from_substitution(period_doubling, 'a', assign);
  report.interval = interval_report(enclosure(input, gcf_depth));

  const std::size_t common =
      std::min(report.transducer.confirmed.size(), report.interval.confirmed.size());
  report.agreed = 0;
  while (report.agreed < common &&
         report.transducer.confirmed[report.agreed] == report.interval.confirmed[report.agreed])
    ++report.agreed;
  report.discrepancy = report.agreed < common;
  return report;
}

std::string report_to_json(const CrossCheckReport& r) {
  nlohmann::ordered_json j;
  j["transducer"] = report_json(r.transducer);
  j["interval"] = report_json(r.interval);
  j["agreed"] = r.agreed;
  j["discrepancy"] = r.discrepancy;
  return j.dump();
}

} // namespace gcflab::rcf
