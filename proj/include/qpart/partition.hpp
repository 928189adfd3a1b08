#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpart {

/// A cell of a Young diagram, 1-based (row i grows downward, column j across).
struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  /// lambda_i with the convention lambda_i = 0 past the last part (1-based).
  int part(int i) const;

  bool contains(Cell s) const { return s.row >= 1 && s.col >= 1 && s.col <= part(s.row); }

  /// "[4,3,3,1]".
  std::string str() const;

  /// Lexicographic on the parts, so std::greater gives the canonical
  /// (lexicographically decreasing) enumeration order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// lambda'_i = #{j : lambda_j >= i}.
Partition conjugate(const Partition& lambda);
/// First column length lambda'_1 (= number of parts).
inline int first_column(const Partition& lambda) { return lambda.length(); }

/// Cells to the right of s in its row. Throws std::domain_error if s is not in lambda.
int arm(const Partition& lambda, Cell s);
/// Cells below s in its column.
int leg(const Partition& lambda, Cell s);
inline int hook(const Partition& lambda, Cell s) { return arm(lambda, s) + leg(lambda, s) + 1; }

/// All cells in row-major order.
std::vector<Cell> cells(const Partition& lambda);
/// Hook lengths of all cells, sorted descending.
std::vector<int> hook_lengths(const Partition& lambda);

/// i -> m_i(lambda), only for i with m_i > 0.
std::map<int, int> m_counts(const Partition& lambda);
/// n(lambda) = sum_i (i - 1) lambda_i.
long n_lambda(const Partition& lambda);
/// sum_j (lambda'_j)^2.
long colsq_sum(const Partition& lambda);
int distinct_parts(const Partition& lambda);

/// All partitions of n, lexicographically decreasing: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate_partitions(int n);
/// Partitions of n with lambda_1 < r (i.e. lambda_1 <= r - 1), same order.
std::vector<Partition> enumerate_first_row_below(int n, int r);
/// Partitions of n with lambda'_1 = k.
std::vector<Partition> enumerate_first_column_equal(int n, int k);

/// Advances `parts` to the next partition of the same size in lexicographically
/// decreasing order. Returns false after (1^n).
bool next_partition(std::vector<int>& parts);

struct Successor {
  Partition shape;
  int column = 1;  ///< column of the added cell
};

/// Partitions obtained by adding one cell, ordered top row first
/// (so by decreasing column of the new cell).
std::vector<Successor> successors(const Partition& lambda);

}  // namespace qpart
