#pragma once

#include "gcflab/mat2.hpp"
#include "gcflab/word.hpp"

#include <string>
#include <vector>

namespace gcflab::raney {

/// The L/R generators: L = [[1,0],[1,1]], R = [[1,1],[0,1]].
const Mat2& left();
const Mat2& right();
/// J = [[0,1],[1,0]].
const Mat2& swap();

Mat2 lr_product(const Word& w);

enum class BalanceClass { doubly, column_only, row_only, none };

/// Column balanced iff (a-b)(c-d) < 0, row balanced iff (a-c)(b-d) < 0.
/// Requires nonnegative entries.
BalanceClass balanced_class(const Mat2& m);

/// A transducer configuration: nonnegative entries and nonzero determinant.
/// Pending input is absorbed into the matrix, so configurations reached
/// mid-stream need not be balanced.
class Config {
public:
  explicit Config(Mat2 m);
  const Mat2& mat() const { return m_; }

  friend bool operator==(const Config& x, const Config& y) { return x.m_ == y.m_; }
  friend bool operator<(const Config& x, const Config& y) { return x.m_ < y.m_; }

private:
  Mat2 m_;
};

/// All doubly balanced nonnegative matrices with determinant exactly det
/// (entries never exceed det). Requires det >= 2. Sorted by entries.
std::vector<Config> enumerate_states(const Integer& det);

struct EmitResult {
  Word output;      // over {L, R}
  Config residual;  // admits no further L or R factor
};

/// Greedy left factorization c = product(output) * residual. An L factor
/// strips iff the bottom row dominates the top, an R factor iff the top
/// dominates the bottom; both at once would force det = 0.
EmitResult emit(const Config& c);

struct StepResult {
  Word output;
  Config next;
};

/// next = c * letter followed by greedy emission; the identity
/// c * letter = product(output) * next holds exactly.
StepResult feed(const Config& c, char letter);

struct RunResult {
  Word output;
  Config final_config;
};

/// Folds feed over the input word; start * product(input) =
/// product(output) * final_config holds exactly.
RunResult run(const Config& start, const Word& input);

struct Edge {
  Config from;
  Word input;
  Word output;
  Config to;
};

bool operator==(const Edge& x, const Edge& y);

/// For every state, the minimal input words (length-lexicographic, L < R)
/// whose run lands on a doubly balanced state again. The input set per state
/// is prefix-free. Throws std::runtime_error when words of length max_input
/// are still open.
std::vector<Edge> derive_table(const Integer& det, std::size_t max_input);

/// {"det":D,"states":[[a,b,c,d],...],"edges":[{"from":...,"in":..,"out":..,"to":...}]}
std::string table_to_json(const Integer& det, const std::vector<Config>& states,
                          const std::vector<Edge>& edges);

/// One line per edge: "a,b,c,d" -> "a,b,c,d" [label="in/out"]
std::string table_to_graph(const std::vector<Edge>& edges);

} // namespace gcflab::raney
