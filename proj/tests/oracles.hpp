#pragma once

// Brute-force reference implementations, kept independent of the library's
// search strategies. Everything here exhausts a finite space and filters by
// the defining property, so it is slow but obviously correct.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"
#include "egstat/tableau.hpp"

namespace egstat::testing {

inline std::vector<std::vector<int>> all_one_lines(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

inline std::uint64_t count_involutions_exhaustive(int n) {
  std::uint64_t count = 0;
  for (const std::vector<int>& oneline : all_one_lines(n)) {
    bool involution = true;
    for (int i = 1; i <= n; ++i)
      if (oneline[oneline[i - 1] - 1] != i) {
        involution = false;
        break;
      }
    if (involution) ++count;
  }
  return count;
}

// Every word of length l(p) over [1, max_letter] whose product is p.
inline std::vector<Word> brute_force_reduced_words(const Permutation& p, int max_letter) {
  const int length = p.coxeter_length();
  std::vector<Word> out;
  Word word(length, 1);
  while (true) {
    if (Permutation::from_word(word) == p) out.push_back(word);
    int pos = length - 1;
    while (pos >= 0 && word[pos] == max_letter) word[pos--] = 1;
    if (pos < 0) break;
    ++word[pos];
  }
  if (length == 0) return {Word{}};
  return out;
}

// Every assignment of support letters to the cells of `shape` that increases
// strictly along rows and columns and whose reading word is a reduced word
// of w. No pruning; cells are filled row-major via an odometer.
inline std::vector<Tableau> brute_force_eg_fillings(const Partition& shape,
                                                    const Permutation& w) {
  std::vector<Tableau> out;
  if (shape.size() != w.coxeter_length()) return out;
  if (shape.size() == 0) {
    out.emplace_back();
    return out;
  }

  const std::set<int> supp_set = support(w);
  const std::vector<int> letters(supp_set.begin(), supp_set.end());
  const int cells = shape.size();
  std::vector<int> choice(cells, 0);

  auto grid_of = [&](const std::vector<int>& pick) {
    std::vector<std::vector<int>> rows(shape.rows());
    int k = 0;
    for (int r = 0; r < shape.rows(); ++r)
      for (int c = 0; c < shape.row_length(r); ++c)
        rows[r].push_back(letters[pick[k++]]);
    return Tableau(shape, rows);
  };

  while (true) {
    const Tableau candidate = grid_of(choice);
    bool increasing = true;
    for (int r = 0; r < shape.rows() && increasing; ++r)
      for (int c = 0; c < shape.row_length(r) && increasing; ++c) {
        if (c > 0 && candidate.label(r, c) <= candidate.label(r, c - 1)) increasing = false;
        if (r > 0 && shape.contains(r - 1, c) &&
            candidate.label(r, c) <= candidate.label(r - 1, c))
          increasing = false;
      }
    if (increasing) {
      Word word;
      for (int c = shape.cols() - 1; c >= 0; --c)
        for (int r = 0; r < shape.col_length(c); ++r) word.push_back(candidate.label(r, c));
      if (is_reduced(word) && Permutation::from_word(word) == w)
        out.push_back(candidate);
    }
    int pos = cells - 1;
    while (pos >= 0 && choice[pos] + 1 == static_cast<int>(letters.size()))
      choice[pos--] = 0;
    if (pos < 0) break;
    ++choice[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All semistandard tableaux of `shape` with entries bounded by max_value.
inline std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_value) {
  std::vector<Tableau> out;
  std::vector<std::vector<int>> grid(shape.rows());
  for (int r = 0; r < shape.rows(); ++r) grid[r].assign(shape.row_length(r), 0);

  auto fill = [&](auto&& self, int r, int c) -> void {
    if (r == shape.rows()) {
      out.emplace_back(shape, grid);
      return;
    }
    const int next_r = (c + 1 < shape.row_length(r)) ? r : r + 1;
    const int next_c = (c + 1 < shape.row_length(r)) ? c + 1 : 0;
    const int left = c > 0 ? grid[r][c - 1] : 1;
    const int above = (r > 0 && shape.contains(r - 1, c)) ? grid[r - 1][c] + 1 : 1;
    for (int v = std::max(left, above); v <= max_value; ++v) {
      grid[r][c] = v;
      self(self, next_r, next_c);
    }
  };
  if (shape.rows() == 0)
    out.emplace_back(shape, grid);
  else
    fill(fill, 0, 0);
  return out;
}

inline std::vector<int> content_vector(const Tableau& t, int max_value) {
  std::vector<int> counts(max_value + 1, 0);
  for (const auto& row : t.rows())
    for (int label : row) ++counts[label];
  return counts;
}

}  // namespace egstat::testing
