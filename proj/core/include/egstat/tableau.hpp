#pragma once

#include <compare>
#include <set>
#include <vector>

#include "egstat/partition.hpp"

namespace egstat {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// A filling of a Young diagram by positive integers.
class Tableau {
 public:
  Tableau() = default;  // empty shape

  // Derives the shape from the row lengths. Throws std::invalid_argument if
  // the row lengths do not weakly decrease or any label is < 1.
  explicit Tableau(std::vector<std::vector<int>> rows);

  // Same, but cross-checks the rows against an expected shape.
  Tableau(const Partition& shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int label(int row, int col) const;
  int size() const { return shape_.size(); }

  auto operator<=>(const Tableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Strongest class a filling satisfies; standard implies semistandard.
enum class TableauClass { standard, semistandard, neither };

TableauClass classify(const Tableau& t);
bool is_standard(const Tableau& t);
bool is_semistandard(const Tableau& t);

// All standard Young tableaux of the given shape, each exactly once, ordered
// lexicographically by the cell sequence the labels 1..n visit.
std::vector<Tableau> enumerate_syt(const Partition& shape);

// Standardization: for each value in increasing order, its occurrences are
// renumbered left to right with the next available integers. Throws on
// non-semistandard input.
Tableau standardize(const Tableau& t);

// Labels i >= 2 such that i-1 sits weakly east (hence strictly north) of i.
// Requires a standard tableau.
std::set<int> descent_set(const Tableau& t);

// Relabels every cell by one plus the number of descents not exceeding its
// label. Maps standard tableaux to semistandard ones of the same shape.
Tableau sweep_map(const Tableau& t);

// Cells whose sweep_map label equals i. The blocks over all i partition the
// diagram.
std::set<Cell> sweep_block(const Tableau& t, int i);

}  // namespace egstat
