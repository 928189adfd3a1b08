#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qpart/partition.hpp"
#include "qpart/rational.hpp"

namespace qpart {

/// Weight of the Young-lattice edge lambda -> lambda + (cell in column s).
///
/// Column 1: 1 / (q^{l} (q^{l+1} - 1)) with l = lambda'_1.
/// Column s > 1: (q^{-lambda'_s} - q^{-lambda'_{s-1}}) / (q^{l} - 1), which is
/// zero exactly when column s is not addable. s > 1 on the empty partition
/// throws std::domain_error.
Rational edge_weight(const Partition& lambda, int column, const Rational& q);

/// Sum over successors of edge_weight, in closed form
/// q^{-l} (1 + 1/(q^{l+1} - 1)). Throws std::domain_error for the empty partition.
Rational outflow(const Partition& lambda, const Rational& q);
/// The same sum taken edge by edge.
Rational outflow_direct(const Partition& lambda, const Rational& q);

/// Path sums f(lambda) = sum over Young-lattice paths from the empty
/// partition of the product of edge weights, for every |lambda| <= n.
class GrowthDP {
 public:
  GrowthDP(int max_size, const Rational& q);

  int max_size() const { return max_size_; }
  const Rational& q() const { return q_; }
  /// Throws std::out_of_range for |lambda| > max_size().
  const Rational& at(const Partition& lambda) const;
  const std::map<Partition, Rational, std::greater<>>& table() const { return table_; }

 private:
  int max_size_;
  Rational q_;
  std::map<Partition, Rational, std::greater<>> table_;
};

/// f(lambda) from a fresh GrowthDP of size |lambda|.
Rational path_sum(const Partition& lambda, const Rational& q);

/// A saturated chain from the empty partition to a partition of n, i.e. a
/// standard Young tableau.
struct TableauPath {
  std::vector<Partition> chain;  ///< chain[0] is empty, chain[i] has size i
  Rational probability;
  const Partition& shape() const { return chain.back(); }
};

/// Every path to a partition of n with probability q^n (1/q)_n * prod of edge
/// weights. Throws std::length_error when n exceeds `max_n`.
std::vector<TableauPath> syt_pmf(int n, const Rational& q, int max_n = 10);

/// P^r_{n,q} >= P^r_{n+1,q}, compared exactly.
bool monotone_check(int n, int r, const Rational& q);

}  // namespace qpart
