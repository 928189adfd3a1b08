#include "qpart/growth.hpp"

#include <stdexcept>

#include "qpart/measures.hpp"
#include "qpart/qarith.hpp"

namespace qpart {

Rational edge_weight(const Partition& lambda, int column, const Rational& q) {
  if (q <= Rational(1)) throw std::domain_error("edge_weight requires q > 1");
  if (column < 1) throw std::domain_error("edge_weight needs column >= 1");
  const Partition conj = conjugate(lambda);
  const int l = conj.part(1);
  if (column == 1) {
    return (pow(q, l) * (pow(q, l + 1) - Rational(1))).reciprocal();
  }
  if (lambda.empty()) throw std::domain_error("no edge from the empty partition in column > 1");
  return (pow(q, -conj.part(column)) - pow(q, -conj.part(column - 1))) / (pow(q, l) - Rational(1));
}

Rational outflow(const Partition& lambda, const Rational& q) {
  if (q <= Rational(1)) throw std::domain_error("outflow requires q > 1");
  if (lambda.empty()) throw std::domain_error("outflow closed form needs a nonempty partition");
  const int l = lambda.length();
  return pow(q, -l) * (Rational(1) + (pow(q, l + 1) - Rational(1)).reciprocal());
}

Rational outflow_direct(const Partition& lambda, const Rational& q) {
  Rational total;
  for (const auto& s : successors(lambda)) total += edge_weight(lambda, s.column, q);
  return total;
}

GrowthDP::GrowthDP(int max_size, const Rational& q) : max_size_(max_size), q_(q) {
  if (max_size < 0) throw std::domain_error("GrowthDP needs a nonnegative size");
  if (q <= Rational(1)) throw std::domain_error("GrowthDP requires q > 1");
  table_.emplace(Partition{}, Rational(1));
  for (int n = 0; n < max_size; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const Rational& from = table_.at(lambda);
      for (const auto& s : successors(lambda)) {
        table_[s.shape] += from * edge_weight(lambda, s.column, q);
      }
    }
  }
}

const Rational& GrowthDP::at(const Partition& lambda) const {
  if (lambda.size() > max_size_) throw std::out_of_range("partition larger than the DP table");
  return table_.at(lambda);
}

Rational path_sum(const Partition& lambda, const Rational& q) {
  return GrowthDP(lambda.size(), q).at(lambda);
}

namespace {

void extend_paths(std::vector<Partition>& chain, const Rational& weight, int n, const Rational& q,
                  const Rational& norm, std::vector<TableauPath>& out) {
  const Partition& tip = chain.back();
  if (tip.size() == n) {
    out.push_back({chain, norm * weight});
    return;
  }
  for (const auto& s : successors(tip)) {
    const Rational w = weight * edge_weight(tip, s.column, q);
    chain.push_back(s.shape);
    extend_paths(chain, w, n, q, norm, out);
    chain.pop_back();
  }
}

}  // namespace

std::vector<TableauPath> syt_pmf(int n, const Rational& q, int max_n) {
  if (n < 0) throw std::domain_error("syt_pmf needs n >= 0");
  if (n > max_n) throw std::length_error("syt_pmf: n above the enumeration cap");
  if (q <= Rational(1)) throw std::domain_error("syt_pmf requires q > 1");
  const Rational norm = pow(q, n) * qpoch(q.reciprocal(), n, q);
  std::vector<TableauPath> out;
  std::vector<Partition> chain{Partition{}};
  extend_paths(chain, Rational(1), n, q, norm, out);
  return out;
}

bool monotone_check(int n, int r, const Rational& q) {
  return p_row_tail_direct(n, q, r) >= p_row_tail_direct(n + 1, q, r);
}

}  // namespace qpart
