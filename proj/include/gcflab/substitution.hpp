#pragma once

#include "gcflab/arith.hpp"
#include "gcflab/word.hpp"

#include <map>
#include <string_view>
#include <vector>

namespace gcflab {

/// A substitution on a finite alphabet of single-character letters: a total
/// mapping letter -> nonempty word over the same alphabet.
class Substitution {
public:
  explicit Substitution(std::map<char, Word> rules);

  /// Parses the rule notation "a->ab;b->aa".
  static Substitution parse(std::string_view text);

  const std::map<char, Word>& rules() const { return rules_; }
  std::vector<char> alphabet() const;
  const Word& image(char letter) const;
  bool has_letter(char letter) const { return rules_.count(letter) != 0; }

  /// Concatenation of the images of the letters of w, in order.
  Word apply(const Word& w) const;

  /// First n letters of the unique fixed point beginning with seed.
  /// Requires seed to be a prefix of its own image and the fixed point to
  /// reach length n.
  Word fixed_point_prefix(char seed, std::size_t n) const;

private:
  std::map<char, Word> rules_;
};

/// Resumable generator of fixed-point prefixes: prefix(n) extends the cached
/// word as needed and stays stable under extension. Single-consumer.
class FixedPointStream {
public:
  FixedPointStream(Substitution s, char seed);
  /// A reference to the internal buffer, grown to at least min_len letters.
  const Word& prefix(std::size_t min_len);

private:
  Substitution sub_;
  Word buf_;
  std::size_t expanded_ = 0;  // letters of buf_ whose images are already in buf_
};

/// Occurrence counts: entry (i, j) = occurrences of letters[i] in the image
/// of letters[j]; letters sorted ascending.
struct IncidenceMatrix {
  std::vector<char> letters;
  std::vector<std::vector<Integer>> counts;
};

IncidenceMatrix incidence_matrix(const Substitution& s);

/// True iff some power k <= |alphabet|^2 of the incidence matrix is
/// entrywise positive (that range of powers is decisive).
bool is_primitive(const Substitution& s);

struct LetterFrequencies {
  bool exact = false;
  Integer eigenvalue;                  // dominant eigenvalue, when exact
  std::map<char, Rational> values;     // exact frequencies, or the empirical ones
  std::map<char, Rational> empirical;  // counts over `horizon` letters
  std::size_t horizon = 0;
};

/// Exact frequencies (normalized positive eigenvector) when the dominant
/// eigenvalue of the incidence matrix is a rational integer; otherwise
/// empirical frequencies over the given prefix length. Requires primitivity.
LetterFrequencies letter_frequencies(const Substitution& s, char seed,
                                     std::size_t empirical_horizon);

/// w |-> w p reverse(w)
Word fold(const Word& w, const Word& p);

/// The g-th folding word over {a, b}: "a", "aba", "abaaaba", ...
/// (length 2^(g+1) - 1).
Word folding_word(std::size_t generation);

/// First n letters of the period doubling sequence built by iterated folding.
Word folding_limit_prefix(std::size_t n);

struct StammerHit {
  Word w;
  Rational exponent;  // maximal m/|w| with the m-letter periodic extension of w a prefix
};

/// All prefixes w of `prefix` with min_len <= |w| and w^r still a prefix of
/// `prefix`; for each, the maximal exponent achievable inside `prefix`.
/// Ordered by |w| increasing. Requires r > 1.
std::vector<StammerHit> stammer_scan(const Word& prefix, const Rational& r,
                                     std::size_t min_len);

struct StammerBound {
  std::size_t k = 0;            // minimal k with seed a prefix of s^k(seed)
  std::size_t j = 0;            // minimal j with a second seed occurrence in s^(jk)(seed)
  std::size_t witness_len = 0;  // |s^(jk)(seed)|
  Rational bound;               // 1 + 1/(witness_len - 1)
};

/// Repetition exponent guaranteed for the fixed point of a primitive
/// substitution. Throws std::runtime_error when the search horizon (j_cap
/// iterations or max_len letters) is exceeded.
StammerBound stammer_bound(const Substitution& s, char seed, std::size_t j_cap = 32,
                           std::size_t max_len = 1u << 24);

/// Letter -> positive integer value, e.g. parsed from "a=1,b=3".
class NumericAssignment {
public:
  explicit NumericAssignment(std::map<char, Integer> values);
  static NumericAssignment parse(std::string_view text);

  const std::map<char, Integer>& values() const { return values_; }
  const Integer& at(char letter) const;
  Integer min_value() const;
  Integer max_value() const;

private:
  std::map<char, Integer> values_;
};

} // namespace gcflab
