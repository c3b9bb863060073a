#pragma once

#include "gcflab/gcf.hpp"
#include "gcflab/mat2.hpp"
#include "gcflab/substitution.hpp"
#include "gcflab/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace gcflab::rcf {

/// Letter -> [[v, v], [1, 0]] for the letter's assigned value v.
class LetterEncoding {
public:
  static LetterEncoding from_assignment(const NumericAssignment& assign);
  const Mat2& at(char letter) const;
  const std::map<char, Mat2>& matrices() const { return matrices_; }

private:
  std::map<char, Mat2> matrices_;
};

/// Letterwise matrix images, order preserved.
std::vector<Mat2> encode(const Word& w, const LetterEncoding& enc);

struct NormalForm {
  Word prefix;    // fully confirmed L/R emission
  Mat2 residual;  // unemittable remainder; prefix * residual = full product
};

/// Incremental product-and-emit pipeline: multiplies letter matrices one at
/// a time and strips L/R factors greedily after each step. The emitted
/// prefix only ever grows. Single-consumer.
class Normalizer {
public:
  explicit Normalizer(LetterEncoding enc);
  void feed(char letter);
  const Word& prefix() const { return prefix_; }
  const Mat2& residual() const { return residual_; }
  NormalForm normal_form() const { return {prefix_, residual_}; }

private:
  LetterEncoding enc_;
  Word prefix_;
  Mat2 residual_;
};

NormalForm normalize(const Word& w, const LetterEncoding& enc);

/// Maximal-run lengths of an L/R word, read as regular continued fraction
/// quotients: R^c0 L^c1 R^c2 ... -> [c0, c1, c2, ...]. A leading L run
/// yields a leading quotient 0.
std::vector<Integer> lr_to_quotients(const Word& lr);

struct QuotientReport {
  std::vector<Integer> confirmed;  // final: never change under input extension
  Integer next_lower_bound;        // the first unconfirmed quotient is >= this
  std::string source;              // "transducer" | "interval"
};

/// All complete runs of the prefix except the last become confirmed
/// quotients; the last run length is only a lower bound on the next one.
QuotientReport confirmed_quotients(const NormalForm& nf);

/// Simultaneous regular-continued-fraction expansion of both endpoints;
/// quotients are kept only while both floors agree, stopping at the first
/// disagreement or when an endpoint becomes an exact integer.
std::vector<Integer> interval_quotients(const Enclosure& e);
QuotientReport interval_report(const Enclosure& e);

std::string report_to_json(const QuotientReport& r);

struct CrossCheckReport {
  QuotientReport transducer;
  QuotientReport interval;
  std::size_t agreed = 0;    // longest common prefix of the two confirmed lists
  bool discrepancy = false;  // true iff they disagree within the common length
};

/// Runs the two independent extraction pipelines for the period doubling
/// instance (folding word of the given generation vs. the depth-n enclosure)
/// and compares their confirmed quotients.
CrossCheckReport cross_check(std::size_t foldings, std::size_t gcf_depth,
                             const NumericAssignment& assign);

std::string report_to_json(const CrossCheckReport& r);

} // namespace gcflab::rcf
