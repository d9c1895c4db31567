#include "egstat/eg.hpp"

#include <stdexcept>

namespace egstat {
namespace {

bool strictly_increasing_rows_and_cols(const Tableau& t) {
  const auto& rows = t.rows();
  for (const auto& row : rows)
    for (std::size_t c = 1; c < row.size(); ++c)
      if (row[c] <= row[c - 1]) return false;
  for (std::size_t r = 1; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c] <= rows[r - 1][c]) return false;
  return true;
}

// Cells in reading order: rightmost column first, top to bottom within each
// column.
std::vector<Cell> reading_order(const Partition& shape) {
  std::vector<Cell> order;
  order.reserve(shape.size());
  for (int c = shape.cols() - 1; c >= 0; --c)
    for (int r = 0; r < shape.col_length(c); ++r) order.push_back({r, c});
  return order;
}

}  // namespace

Word reading_word(const Tableau& t) {
  Word out;
  out.reserve(t.size());
  for (const Cell& cell : reading_order(t.shape())) out.push_back(t.label(cell.row, cell.col));
  return out;
}

bool is_eg_tableau(const Tableau& t, const Permutation& w) {
  if (!strictly_increasing_rows_and_cols(t)) return false;
  const Word word = reading_word(t);
  return is_reduced(word) && Permutation::from_word(word) == w;
}

std::vector<EGTableau> enumerate_eg(const Partition& shape, const Permutation& w) {
  std::vector<EGTableau> out;
  if (shape.size() != w.coxeter_length()) return out;

  const std::set<int> supp = support(w);
  const std::vector<int> letters(supp.begin(), supp.end());
  const std::vector<Cell> order = reading_order(shape);

  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) grid[r].assign(shape.row_length(r), 0);
  Word word;
  word.reserve(order.size());

  auto fill = [&](auto&& self, std::size_t k, const Permutation& prefix) -> void {
    if (k == order.size()) {
      if (prefix == w) out.push_back({Tableau(shape, grid), word});
      return;
    }
    const auto [r, c] = order[k];
    for (int a : letters) {
      if (r > 0 && a <= grid[r - 1][c]) continue;                       // strict columns
      if (c + 1 < shape.row_length(r) && a >= grid[r][c + 1]) continue; // strict rows
      if (prefix(a) >= prefix(a + 1)) continue;                         // keep the prefix reduced
      grid[r][c] = a;
      word.push_back(a);
      self(self, k + 1, prefix.multiply_right(a));
      word.pop_back();
      grid[r][c] = 0;
    }
  };
  fill(fill, 0, Permutation{});
  return out;
}

std::uint64_t eg_count(const Partition& shape, const Permutation& w) {
  return enumerate_eg(shape, w).size();
}

std::uint64_t eg_statistic(const Permutation& w) {
  std::uint64_t total = 0;
  for (const Partition& shape : partitions_of(w.coxeter_length()))
    total += eg_count(shape, w);
  return total;
}

bool is_lambda_maximal(const Permutation& w, const Partition& shape) {
  return eg_count(shape, w) == hook_count(shape);
}

Permutation staircase_witness(int n) {
  if (n < 1) throw std::invalid_argument("staircase_witness requires n >= 1");
  Word word;
  word.reserve(n);
  for (int i = 1; i <= n; ++i) word.push_back(2 * i - 1);
  return Permutation::from_word(word);
}

EGTableau syt_to_eg(const Tableau& t, int n) {
  if (t.size() != n)
    throw std::invalid_argument("syt_to_eg: tableau size must equal n");
  if (!is_standard(t))
    throw std::invalid_argument("syt_to_eg requires a standard tableau");
  auto rows = t.rows();
  for (auto& row : rows)
    for (int& label : row) label = 2 * label - 1;
  Tableau relabeled(t.shape(), std::move(rows));
  Word word = reading_word(relabeled);
  return {std::move(relabeled), std::move(word)};
}

}  // namespace egstat
