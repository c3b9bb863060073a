#include "gcflab/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcflab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

Substitution::Substitution(std::map<char, Word> rules) : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("substitution: empty rule set");
  for (const auto& [letter, image] : rules_) {
    if (image.empty())
      throw std::invalid_argument(std::string("substitution: empty image for letter '") +
                                  letter + "'");
    for (char c : image)
      if (!rules_.count(c))
        throw std::invalid_argument(std::string("substitution: image letter '") + c +
                                    "' has no rule");
  }
}

Substitution Substitution::parse(std::string_view text) {
  std::map<char, Word> rules;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = trim(text.substr(
        start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (!piece.empty()) {
      std::size_t arrow = piece.find("->");
      if (arrow == std::string_view::npos)
        throw std::invalid_argument("substitution rule missing '->': '" + std::string(piece) + "'");
      std::string_view lhs = trim(piece.substr(0, arrow));
      std::string_view rhs = trim(piece.substr(arrow + 2));
      if (lhs.size() != 1)
        throw std::invalid_argument("substitution source must be one letter: '" +
                                    std::string(piece) + "'");
      if (rhs.empty())
        throw std::invalid_argument("substitution image must be nonempty: '" +
                                    std::string(piece) + "'");
      if (rules.count(lhs[0]))
        throw std::invalid_argument(std::string("duplicate rule for letter '") + lhs[0] + "'");
      rules[lhs[0]] = Word(rhs);
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return Substitution(std::move(rules));
}

std::vector<char> Substitution::alphabet() const {
  std::vector<char> letters;
  letters.reserve(rules_.size());
  for (const auto& [letter, image] : rules_) letters.push_back(letter);
  return letters;
}

const Word& Substitution::image(char letter) const {
  auto it = rules_.find(letter);
  if (it == rules_.end())
    throw std::invalid_argument(std::string("letter '") + letter + "' outside alphabet");
  return it->second;
}

Word Substitution::apply(const Word& w) const {
  Word out;
  for (char c : w) out += image(c);
  return out;
}

Word Substitution::fixed_point_prefix(char seed, std::size_t n) const {
  if (n == 0) throw std::invalid_argument("fixed_point_prefix: length must be >= 1");
  FixedPointStream stream(*this, seed);
  return stream.prefix(n).substr(0, n);
}

FixedPointStream::FixedPointStream(Substitution s, char seed) : sub_(std::move(s)) {
  const Word& img = sub_.image(seed);
  if (img[0] != seed)
    throw std::invalid_argument(std::string("seed '") + seed +
                                "' is not a prefix of its image '" + img + "'");
  buf_ = img;
  expanded_ = 1;
}

const Word& FixedPointStream::prefix(std::size_t min_len) {
  // Invariant: buf_ = image(buf_[0..expanded_)), so buf_ is a prefix of the
  // fixed point and expanding the next letter only appends.
  while (buf_.size() < min_len) {
    if (expanded_ >= buf_.size())
      throw std::invalid_argument("fixed point does not extend to the requested length");
    buf_ += sub_.image(buf_[expanded_]);
    ++expanded_;
  }
  return buf_;
}

IncidenceMatrix incidence_matrix(const Substitution& s) {
  IncidenceMatrix m;
  m.letters = s.alphabet();
  const std::size_t d = m.letters.size();
  m.counts.assign(d, std::vector<Integer>(d, Integer(0)));
  for (std::size_t j = 0; j < d; ++j)
    for (char c : s.image(m.letters[j])) {
      auto it = std::lower_bound(m.letters.begin(), m.letters.end(), c);
      m.counts[static_cast<std::size_t>(it - m.letters.begin())][j] += 1;
    }
  return m;
}

namespace {

using SquareMat = std::vector<std::vector<Integer>>;

SquareMat mat_mul(const SquareMat& x, const SquareMat& y) {
  const std::size_t d = x.size();
  SquareMat r(d, std::vector<Integer>(d, Integer(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (x[i][k] != 0)
        for (std::size_t j = 0; j < d; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

bool all_positive(const SquareMat& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v <= 0) return false;
  return true;
}

} // namespace

bool is_primitive(const Substitution& s) {
  IncidenceMatrix inc = incidence_matrix(s);
  const std::size_t d = inc.letters.size();
  SquareMat power = inc.counts;
  for (std::size_t k = 1; k <= d * d; ++k) {
    if (all_positive(power)) return true;
    power = mat_mul(power, inc.counts);
  }
  return false;
}

namespace {

// Nontrivial kernel vector of (M - lambda*I) over the rationals, or empty.
std::vector<Rational> kernel_vector(const SquareMat& m, const Integer& lambda) {
  const std::size_t d = m.size();
  std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      rows[i][j] = Rational(m[i][j]) - (i == j ? Rational(lambda) : Rational(0));

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < d; ++col) {
    std::size_t piv = rank;
    while (piv < d && rows[piv][col] == 0) ++piv;
    if (piv == d) continue;
    std::swap(rows[piv], rows[rank]);
    Rational lead = rows[rank][col];
    for (std::size_t j = col; j < d; ++j) rows[rank][j] /= lead;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational factor = rows[i][col];
      for (std::size_t j = col; j < d; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank == d) return {};

  // Set the first free variable to 1, back-substitute the pivots.
  std::vector<bool> is_pivot(d, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (free_col < d && is_pivot[free_col]) ++free_col;

  std::vector<Rational> v(d, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) {
    // row r: x_{pivot_col[r]} + sum_{j > pivot} coef * x_j = 0
    Rational acc(0);
    for (std::size_t j = pivot_col[r] + 1; j < d; ++j) acc += rows[r][j] * v[j];
    v[pivot_col[r]] = -acc;
  }
  return v;
}

} // namespace

LetterFrequencies letter_frequencies(const Substitution& s, char seed,
                                     std::size_t empirical_horizon) {
  if (!is_primitive(s)) throw std::invalid_argument("letter_frequencies: substitution not primitive");

  IncidenceMatrix inc = incidence_matrix(s);
  const std::size_t d = inc.letters.size();
  LetterFrequencies out;

  // Column sums bracket the dominant eigenvalue; integer candidates only.
  Integer lo = 0, hi = 0;
  for (std::size_t j = 0; j < d; ++j) {
    Integer col = 0;
    for (std::size_t i = 0; i < d; ++i) col += inc.counts[i][j];
    if (j == 0 || col < lo) lo = col;
    if (j == 0 || col > hi) hi = col;
  }
  for (Integer lambda = lo; lambda <= hi && !out.exact; ++lambda) {
    std::vector<Rational> v = kernel_vector(inc.counts, lambda);
    if (v.empty()) continue;
    bool positive = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
    if (!positive) {
      for (auto& x : v) x = -x;
      positive = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
    }
    if (!positive) continue;
    Rational sum(0);
    for (const auto& x : v) sum += x;
    out.exact = true;
    out.eigenvalue = lambda;
    for (std::size_t i = 0; i < d; ++i) out.values[inc.letters[i]] = v[i] / sum;
  }

  if (empirical_horizon > 0) {
    Word w;
    try {
      w = s.fixed_point_prefix(seed, empirical_horizon);
    } catch (const std::invalid_argument&) {
      w = Word(1, seed);  // non-extending fixed point: count the seed alone
    }
    out.horizon = w.size();
    std::map<char, std::size_t> counts;
    for (char c : inc.letters) counts[c] = 0;
    for (char c : w) ++counts[c];
    for (const auto& [letter, count] : counts)
      out.empirical[letter] = make_rational(Integer(static_cast<unsigned long>(count)),
                                            Integer(static_cast<unsigned long>(w.size())));
  }
  if (!out.exact) out.values = out.empirical;
  return out;
}

Word fold(const Word& w, const Word& p) { return w + p + reversed(w); }

Word folding_word(std::size_t generation) {
  Word w = "a";
  char p = 'b';
  for (std::size_t g = 0; g < generation; ++g) {
    w = fold(w, Word(1, p));
    p = (p == 'b') ? 'a' : 'b';
  }
  return w;
}

Word folding_limit_prefix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("folding_limit_prefix: length must be >= 1");
  Word w = "a";
  char p = 'b';
  while (w.size() < n) {
    w = fold(w, Word(1, p));
    p = (p == 'b') ? 'a' : 'b';
  }
  return w.substr(0, n);
}

std::vector<StammerHit> stammer_scan(const Word& prefix, const Rational& r,
                                     std::size_t min_len) {
  if (r <= 1) throw std::invalid_argument("stammer_scan: exponent must be > 1");
  std::vector<StammerHit> hits;
  const std::size_t n = prefix.size();
  const Integer total(static_cast<unsigned long>(n));

  for (std::size_t len = std::max<std::size_t>(min_len, 1);; ++len) {
    const Integer l(static_cast<unsigned long>(len));
    Integer needed = floor_of(r) * l + ceil_of((r - Rational(floor_of(r))) * l);
    if (needed > total) break;  // |w^r| grows with |w|
    const std::size_t need = mpz_get_ui(needed.get_mpz_t());

    std::size_t m = len;  // the first |w| letters match w by construction
    while (m < n && prefix[m] == prefix[m % len]) ++m;
    if (m < need) continue;
    hits.push_back({prefix.substr(0, len),
                    make_rational(Integer(static_cast<unsigned long>(m)), l)});
  }
  return hits;
}

StammerBound stammer_bound(const Substitution& s, char seed, std::size_t j_cap,
                           std::size_t max_len) {
  if (!s.has_letter(seed))
    throw std::invalid_argument(std::string("letter '") + seed + "' outside alphabet");
  if (!is_primitive(s))
    throw std::invalid_argument("stammer_bound: substitution not primitive");

  // First letters of s^k(seed) cycle within |alphabet| steps, so the minimal
  // k with seed a prefix of its k-th image is found (or absent) quickly.
  StammerBound out;
  const std::size_t d = s.alphabet().size();
  char current = seed;
  for (std::size_t k = 1; k <= d; ++k) {
    current = s.image(current)[0];
    if (current == seed) {
      out.k = k;
      break;
    }
  }
  if (out.k == 0)
    throw std::invalid_argument(std::string("seed '") + seed +
                                "' is not a prefix of any of its iterated images");

  Word u(1, seed);
  for (std::size_t j = 1; j <= j_cap; ++j) {
    for (std::size_t i = 0; i < out.k; ++i) u = s.apply(u);
    if (u.size() > max_len)
      throw std::runtime_error("stammer_bound: search horizon exceeded");
    std::size_t occurrences = 0;
    for (char c : u)
      if (c == seed && ++occurrences >= 2) break;
    if (occurrences >= 2) {
      out.j = j;
      out.witness_len = u.size();
      out.bound = make_rational(Integer(static_cast<unsigned long>(u.size())),
                                Integer(static_cast<unsigned long>(u.size() - 1)));
      return out;
    }
  }
  throw std::runtime_error("stammer_bound: search horizon exceeded");
}

NumericAssignment::NumericAssignment(std::map<char, Integer> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("numeric assignment: empty");
  for (const auto& [letter, v] : values_)
    if (v < 1)
      throw std::invalid_argument(std::string("numeric assignment: value for '") + letter +
                                  "' must be >= 1");
}

NumericAssignment NumericAssignment::parse(std::string_view text) {
  std::map<char, Integer> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!piece.empty()) {
      std::size_t eq = piece.find('=');
      if (eq == std::string_view::npos)
        throw std::invalid_argument("assignment missing '=': '" + std::string(piece) + "'");
      std::string_view lhs = trim(piece.substr(0, eq));
      if (lhs.size() != 1)
        throw std::invalid_argument("assignment source must be one letter: '" +
                                    std::string(piece) + "'");
      if (values.count(lhs[0]))
        throw std::invalid_argument(std::string("duplicate assignment for letter '") + lhs[0] +
                                    "'");
      values[lhs[0]] = parse_integer(piece.substr(eq + 1));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NumericAssignment(std::move(values));
}

const Integer& NumericAssignment::at(char letter) const {
  auto it = values_.find(letter);
  if (it == values_.end())
    throw std::invalid_argument(std::string("no value assigned to letter '") + letter + "'");
  return it->second;
}

Integer NumericAssignment::min_value() const {
  Integer m = values_.begin()->second;
  for (const auto& [letter, v] : values_)
    if (v < m) m = v;
  return m;
}

Integer NumericAssignment::max_value() const {
  Integer m = values_.begin()->second;
  for (const auto& [letter, v] : values_)
    if (v > m) m = v;
  return m;
}

} // namespace gcflab
