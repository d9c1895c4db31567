#include "egstat/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace egstat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::row_length(int row) const {
  return (row >= 0 && row < rows()) ? parts_[row] : 0;
}

int Partition::col_length(int col) const {
  int count = 0;
  for (int part : parts_)
    if (part > col) ++count;
  return count;
}

bool Partition::contains(int row, int col) const {
  return row >= 0 && col >= 0 && col < row_length(row);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  return out;
}

std::uint64_t hook_count(const Partition& shape) {
  const int n = shape.size();
  if (n > 20) throw std::invalid_argument("hook_count supports sizes up to 20");
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
  std::uint64_t hooks = 1;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape.row_length(r); ++c)
      hooks *= static_cast<std::uint64_t>((shape.row_length(r) - c) +
                                          (shape.col_length(c) - r) - 1);
  return factorial / hooks;
}

}  // namespace egstat
