#include "gcflab/raney.hpp"

#include "gcflab/errors.hpp"

#include <json.hpp>

#include <deque>
#include <stdexcept>

namespace gcflab::raney {

const Mat2& left() {
  static const Mat2 m{1, 0, 1, 1};
  return m;
}

const Mat2& right() {
  static const Mat2 m{1, 1, 0, 1};
  return m;
}

const Mat2& swap() {
  static const Mat2 m{0, 1, 1, 0};
  return m;
}

Mat2 lr_product(const Word& w) {
  Mat2 m = Mat2::identity();
  for (char c : w) {
    if (c == 'L')
      m = m * left();
    else if (c == 'R')
      m = m * right();
    else
      throw std::invalid_argument(std::string("letter '") + c + "' is not L or R");
  }
  return m;
}

BalanceClass balanced_class(const Mat2& m) {
  if (!m.nonnegative()) throw std::invalid_argument("balanced_class: negative entry");
  const bool column = (m.a - m.b) * (m.c - m.d) < 0;
  const bool row = (m.a - m.c) * (m.b - m.d) < 0;
  if (column && row) return BalanceClass::doubly;
  if (column) return BalanceClass::column_only;
  if (row) return BalanceClass::row_only;
  return BalanceClass::none;
}

Config::Config(Mat2 m) : m_(std::move(m)) {
  if (!m_.nonnegative()) throw std::invalid_argument("config: negative entry");
  if (m_.det() == 0) throw std::invalid_argument("config: singular matrix");
}

std::vector<Config> enumerate_states(const Integer& det) {
  if (det < 2) throw std::invalid_argument("state enumeration requires det >= 2");
  if (!mpz_fits_slong_p(det.get_mpz_t()) || det > 4096)
    throw std::invalid_argument("state enumeration: det too large");
  const long D = mpz_get_si(det.get_mpz_t());

  std::vector<Config> states;
  for (long a = 1; a <= D; ++a)
    for (long b = 0; b <= D; ++b)
      for (long c = 0; c <= D; ++c) {
        const long num = D + b * c;
        if (num % a != 0) continue;
        const long d = num / a;
        if (d < 0 || d > D) continue;
        Mat2 m{a, b, c, d};
        if (balanced_class(m) == BalanceClass::doubly) states.emplace_back(std::move(m));
      }
  // a = 0 would need det = -bc <= 0, impossible for det >= 2.
  std::sort(states.begin(), states.end());
  return states;
}

EmitResult emit(const Config& c) {
  Mat2 m = c.mat();
  Word out;
  for (;;) {
    const bool l_ok = m.c >= m.a && m.d >= m.b;
    const bool r_ok = m.a >= m.c && m.b >= m.d;
    if (l_ok && r_ok)
      throw InternalError("emit: simultaneous L and R divisibility implies det = 0");
    if (l_ok) {
      m.c -= m.a;
      m.d -= m.b;
      out += 'L';
    } else if (r_ok) {
      m.a -= m.c;
      m.b -= m.d;
      out += 'R';
    } else {
      break;
    }
  }
  return {std::move(out), Config(std::move(m))};
}

StepResult feed(const Config& c, char letter) {
  const Mat2* gen;
  if (letter == 'L')
    gen = &left();
  else if (letter == 'R')
    gen = &right();
  else
    throw std::invalid_argument(std::string("letter '") + letter + "' is not L or R");
  EmitResult e = emit(Config(c.mat() * *gen));
  return {std::move(e.output), std::move(e.residual)};
}

RunResult run(const Config& start, const Word& input) {
  Config config = start;
  Word out;
  for (char letter : input) {
    StepResult step = feed(config, letter);
    out += step.output;
    config = std::move(step.next);
  }
  return {std::move(out), std::move(config)};
}

bool operator==(const Edge& x, const Edge& y) {
  return x.from == y.from && x.input == y.input && x.output == y.output && x.to == y.to;
}

std::vector<Edge> derive_table(const Integer& det, std::size_t max_input) {
  if (max_input < 1) throw std::invalid_argument("derive_table requires max_input >= 1");
  std::vector<Config> states = enumerate_states(det);
  std::vector<Edge> edges;
  std::size_t open = 0;

  for (const Config& state : states) {
    // Length-lexicographic BFS with L < R; closed words are not extended,
    // so the input set per state stays prefix-free.
    std::deque<Word> frontier{"L", "R"};
    while (!frontier.empty()) {
      Word w = std::move(frontier.front());
      frontier.pop_front();
      RunResult r = run(state, w);
      if (balanced_class(r.final_config.mat()) == BalanceClass::doubly) {
        edges.push_back({state, std::move(w), std::move(r.output), std::move(r.final_config)});
      } else if (w.size() < max_input) {
        frontier.push_back(w + 'L');
        frontier.push_back(w + 'R');
      } else {
        ++open;
      }
    }
  }
  if (open > 0)
    throw std::runtime_error("derive_table: " + std::to_string(open) +
                             " input words of length " + std::to_string(max_input) +
                             " still open; raise the input horizon");
  return edges;
}

namespace {

// Table entries are bounded by the determinant, which enumeration caps at
// 4096, so plain JSON numbers are exact here.
nlohmann::ordered_json mat_to_json(const Mat2& m) {
  return nlohmann::ordered_json::array({mpz_get_si(m.a.get_mpz_t()), mpz_get_si(m.b.get_mpz_t()),
                                        mpz_get_si(m.c.get_mpz_t()),
                                        mpz_get_si(m.d.get_mpz_t())});
}

} // namespace

std::string table_to_json(const Integer& det, const std::vector<Config>& states,
                          const std::vector<Edge>& edges) {
  nlohmann::ordered_json j;
  j["det"] = mpz_get_si(det.get_mpz_t());
  j["states"] = nlohmann::ordered_json::array();
  for (const Config& s : states) j["states"].push_back(mat_to_json(s.mat()));
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : edges) {
    nlohmann::ordered_json edge;
    edge["from"] = mat_to_json(e.from.mat());
    edge["in"] = e.input;
    edge["out"] = e.output;
    edge["to"] = mat_to_json(e.to.mat());
    j["edges"].push_back(std::move(edge));
  }
  return j.dump();
}

std::string table_to_graph(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    out += '"' + to_csv(e.from.mat()) + "\" -> \"" + to_csv(e.to.mat()) + "\" [label=\"" +
           e.input + "/" + e.output + "\"]\n";
  }
  return out;
}

} // namespace gcflab::raney
