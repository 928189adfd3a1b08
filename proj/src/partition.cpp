#include "qpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qpart {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first_row()), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

int arm(const Partition& lambda, Cell s) {
  if (!lambda.contains(s)) throw std::domain_error("cell outside the diagram");
  return lambda.part(s.row) - s.col;
}

int leg(const Partition& lambda, Cell s) {
  if (!lambda.contains(s)) throw std::domain_error("cell outside the diagram");
  int below = 0;
  for (int i = s.row + 1; lambda.part(i) >= s.col; ++i) ++below;
  return below;
}

std::vector<Cell> cells(const Partition& lambda) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::vector<int> hook_lengths(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      out.push_back((lambda.part(i) - j) + (conj.part(j) - i) + 1);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::map<int, int> m_counts(const Partition& lambda) {
  std::map<int, int> out;
  for (int p : lambda.parts()) ++out[p];
  return out;
}

long n_lambda(const Partition& lambda) {
  long total = 0;
  for (int i = 1; i <= lambda.length(); ++i) total += static_cast<long>(i - 1) * lambda.part(i);
  return total;
}

long colsq_sum(const Partition& lambda) {
  long total = 0;
  const Partition conj = conjugate(lambda);
  for (int c : conj.parts()) total += static_cast<long>(c) * c;
  return total;
}

int distinct_parts(const Partition& lambda) {
  return static_cast<int>(m_counts(lambda).size());
}

bool next_partition(std::vector<int>& parts) {
  // Drop trailing ones, decrement the last part > 1, refill greedily.
  int ones = 0;
  while (!parts.empty() && parts.back() == 1) {
    parts.pop_back();
    ++ones;
  }
  if (parts.empty()) return false;
  const int m = --parts.back();
  int rest = ones + 1;
  while (rest > 0) {
    const int take = std::min(m, rest);
    parts.push_back(take);
    rest -= take;
  }
  return true;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::domain_error("enumerate_partitions needs n >= 0");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> parts{n};
  do {
    out.emplace_back(parts);
  } while (next_partition(parts));
  return out;
}

std::vector<Partition> enumerate_first_row_below(int n, int r) {
  if (r < 1) throw std::domain_error("enumerate_first_row_below needs r >= 1");
  if (n < 0) throw std::domain_error("enumerate_first_row_below needs n >= 0");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const int top = std::min(n, r - 1);
  if (top < 1) return out;
  // First partition of n with largest part <= top in decreasing-lex order.
  std::vector<int> parts;
  for (int rest = n; rest > 0; rest -= std::min(top, rest)) parts.push_back(std::min(top, rest));
  do {
    out.emplace_back(parts);
  } while (next_partition(parts));
  return out;
}

std::vector<Partition> enumerate_first_column_equal(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n)) {
    if (p.length() == k) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Successor> successors(const Partition& lambda) {
  std::vector<Successor> out;
  const auto& parts = lambda.parts();
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    const int current = lambda.part(i);
    if (i > 1 && lambda.part(i - 1) == current) continue;  // not addable
    std::vector<int> grown = parts;
    if (i <= lambda.length()) {
      ++grown[static_cast<std::size_t>(i - 1)];
    } else {
      grown.push_back(1);
    }
    out.push_back({Partition(std::move(grown)), current + 1});
  }
  return out;
}

}  // namespace qpart
