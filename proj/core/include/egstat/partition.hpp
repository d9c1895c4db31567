#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace egstat {

// Integer partition: weakly decreasing positive parts. Doubles as a Young
// diagram in matrix coordinates: row 0 is the top row, "north" decreases the
// row index and "east" increases the column index.
class Partition {
 public:
  Partition() = default;  // empty partition
  explicit Partition(std::vector<int> parts);

  int size() const;  // number of cells
  int rows() const { return static_cast<int>(parts_.size()); }
  int cols() const { return parts_.empty() ? 0 : parts_.front(); }
  int row_length(int row) const;
  int col_length(int col) const;  // conjugate part
  bool contains(int row, int col) const;
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(int n);

// Number of standard Young tableaux of the given shape, via the hook length
// formula. Exact for |shape| <= 20; throws beyond that.
std::uint64_t hook_count(const Partition& shape);

}  // namespace egstat
