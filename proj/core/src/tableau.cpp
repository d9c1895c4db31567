#include "egstat/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace egstat {
namespace {

Partition shape_from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    parts.push_back(static_cast<int>(row.size()));
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw std::invalid_argument("tableau row lengths must weakly decrease");
  return Partition(parts);
}

void check_labels(const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows)
    for (int label : row)
      if (label < 1) throw std::invalid_argument("tableau labels must be positive");
}

}  // namespace

Tableau::Tableau(std::vector<std::vector<int>> rows)
    : shape_(shape_from_rows(rows)), rows_(std::move(rows)) {
  check_labels(rows_);
}

Tableau::Tableau(const Partition& shape, std::vector<std::vector<int>> rows)
    : shape_(shape), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape.rows())
    throw std::invalid_argument("tableau rows do not match the shape");
  for (int r = 0; r < shape.rows(); ++r)
    if (static_cast<int>(rows_[r].size()) != shape.row_length(r))
      throw std::invalid_argument("tableau rows do not match the shape");
  check_labels(rows_);
}

int Tableau::label(int row, int col) const {
  if (!shape_.contains(row, col)) throw std::out_of_range("cell outside the shape");
  return rows_[row][col];
}

TableauClass classify(const Tableau& t) {
  bool weak_rows = true, strict_rows = true, strict_cols = true;
  const auto& rows = t.rows();
  for (const auto& row : rows)
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c] < row[c - 1]) weak_rows = false;
      if (row[c] <= row[c - 1]) strict_rows = false;
    }
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] <= rows[r - 1][c]) strict_cols = false;
  if (!weak_rows || !strict_cols) return TableauClass::neither;

  if (strict_rows) {
    const int n = t.size();
    std::vector<char> seen(n + 1, 0);
    bool standard = true;
    for (const auto& row : rows)
      for (int label : row) {
        if (label > n || seen[label]) {
          standard = false;
          break;
        }
        seen[label] = 1;
      }
    if (standard) return TableauClass::standard;
  }
  return TableauClass::semistandard;
}

bool is_standard(const Tableau& t) { return classify(t) == TableauClass::standard; }

bool is_semistandard(const Tableau& t) { return classify(t) != TableauClass::neither; }

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) grid[r].assign(shape.row_length(r), 0);
  std::vector<int> filled(shape.rows(), 0);

  auto place = [&](auto&& self, int value) -> void {
    if (value > n) {
      out.emplace_back(shape, grid);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      if (filled[r] >= shape.row_length(r)) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      grid[r][filled[r]] = value;
      ++filled[r];
      self(self, value + 1);
      --filled[r];
    }
  };
  place(place, 1);
  return out;
}

Tableau standardize(const Tableau& t) {
  if (!is_semistandard(t))
    throw std::invalid_argument("standardize requires a semistandard tableau");
  std::map<int, std::vector<Cell>> by_value;
  for (int r = 0; r < t.shape().rows(); ++r)
    for (int c = 0; c < t.shape().row_length(r); ++c)
      by_value[t.label(r, c)].push_back({r, c});

  auto rows = t.rows();
  int next = 1;
  for (auto& [value, cells] : by_value) {
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return a.col < b.col; });
    for (const Cell& cell : cells) rows[cell.row][cell.col] = next++;
  }
  return {t.shape(), std::move(rows)};
}

std::set<int> descent_set(const Tableau& t) {
  if (!is_standard(t))
    throw std::invalid_argument("descent_set requires a standard tableau");
  const int n = t.size();
  std::vector<Cell> position(n + 1);
  for (int r = 0; r < t.shape().rows(); ++r)
    for (int c = 0; c < t.shape().row_length(r); ++c)
      position[t.label(r, c)] = {r, c};

  std::set<int> out;
  for (int i = 2; i <= n; ++i)
    if (position[i - 1].col >= position[i].col) out.insert(i);
  return out;
}

Tableau sweep_map(const Tableau& t) {
  const std::set<int> descents = descent_set(t);  // also validates standardness
  const int n = t.size();
  std::vector<int> descents_up_to(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    descents_up_to[v] = descents_up_to[v - 1] + (descents.contains(v) ? 1 : 0);

  auto rows = t.rows();
  for (auto& row : rows)
    for (int& label : row) label = descents_up_to[label] + 1;
  return {t.shape(), std::move(rows)};
}

std::set<Cell> sweep_block(const Tableau& t, int i) {
  const Tableau swept = sweep_map(t);
  std::set<Cell> out;
  for (int r = 0; r < swept.shape().rows(); ++r)
    for (int c = 0; c < swept.shape().row_length(r); ++c)
      if (swept.label(r, c) == i) out.insert({r, c});
  return out;
}

}  // namespace egstat
