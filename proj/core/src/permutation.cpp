#include "egstat/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace egstat {
namespace {

void trim(std::vector<int>& oneline) {
  while (!oneline.empty() && oneline.back() == static_cast<int>(oneline.size()))
    oneline.pop_back();
}

}  // namespace

Permutation Permutation::from_one_line(std::vector<int> oneline) {
  std::vector<char> seen(oneline.size(), 0);
  for (int v : oneline) {
    if (v < 1 || v > static_cast<int>(oneline.size()) || seen[v - 1])
      throw std::invalid_argument("one-line form is not a bijection of 1..m");
    seen[v - 1] = 1;
  }
  trim(oneline);
  Permutation p;
  p.oneline_ = std::move(oneline);
  return p;
}

Permutation Permutation::from_word(const Word& word) {
  Permutation p;
  for (int letter : word) p = p.multiply_right(letter);
  return p;
}

int Permutation::operator()(int i) const {
  if (i < 1) throw std::invalid_argument("positions are 1-based");
  return i <= size() ? oneline_[i - 1] : i;
}

int Permutation::coxeter_length() const {
  const int n = size();
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (oneline_[i] > oneline_[j]) ++count;
  return count;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i < size(); ++i)
    if (oneline_[i - 1] > oneline_[i]) out.push_back(i);
  return out;
}

Permutation Permutation::multiply_right(int letter) const {
  if (letter < 1) throw std::invalid_argument("letters are positive");
  std::vector<int> next = oneline_;
  while (static_cast<int>(next.size()) < letter + 1)
    next.push_back(static_cast<int>(next.size()) + 1);
  std::swap(next[letter - 1], next[letter]);
  trim(next);
  Permutation p;
  p.oneline_ = std::move(next);
  return p;
}

bool is_reduced(const Word& word) {
  return Permutation::from_word(word).coxeter_length() == static_cast<int>(word.size());
}

namespace {

void collect_reduced(const Permutation& p, std::map<Permutation, std::vector<Word>>& memo) {
  if (memo.contains(p)) return;
  std::vector<Word> words;
  if (p.is_identity()) {
    words.push_back({});
  } else {
    for (int i : p.right_descents()) {
      const Permutation shorter = p.multiply_right(i);
      collect_reduced(shorter, memo);
      for (Word w : memo.at(shorter)) {
        w.push_back(i);
        words.push_back(std::move(w));
      }
    }
  }
  std::sort(words.begin(), words.end());
  memo.emplace(p, std::move(words));
}

// One reduced word of p, by repeatedly peeling the smallest right descent.
Word some_reduced_word(const Permutation& p) {
  Word peeled;
  Permutation q = p;
  while (!q.is_identity()) {
    const int i = q.right_descents().front();
    peeled.push_back(i);
    q = q.multiply_right(i);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& p) {
  std::map<Permutation, std::vector<Word>> memo;
  collect_reduced(p, memo);
  return memo.at(p);
}

std::set<int> support(const Permutation& p) {
  const Word word = some_reduced_word(p);
  return {word.begin(), word.end()};
}

std::set<Word> tits_neighbors(const Word& word) {
  if (!is_reduced(word))
    throw std::invalid_argument("tits_neighbors requires a reduced word");
  std::set<Word> out;
  const int k = static_cast<int>(word.size());
  for (int i = 0; i + 1 < k; ++i) {
    if (std::abs(word[i] - word[i + 1]) >= 2) {
      Word w = word;
      std::swap(w[i], w[i + 1]);
      out.insert(std::move(w));
    }
  }
  for (int i = 0; i + 2 < k; ++i) {
    if (word[i] == word[i + 2] && std::abs(word[i] - word[i + 1]) == 1) {
      Word w = word;
      w[i] = word[i + 1];
      w[i + 1] = word[i];
      w[i + 2] = word[i + 1];
      out.insert(std::move(w));
    }
  }
  return out;
}

bool is_totally_commutative(const Permutation& p) {
  const std::set<int> supp = support(p);
  if (static_cast<int>(supp.size()) != p.coxeter_length()) return false;
  int prev = 0;
  for (int letter : supp) {
    if (prev != 0 && letter - prev < 2) return false;
    prev = letter;
  }
  return true;
}

Permutation canonical_form(const Permutation& p) {
  if (p.is_identity()) return {};
  const Word word = some_reduced_word(p);

  std::vector<int> letters(word.begin(), word.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  std::map<int, int> relabel;
  int mapped = 0, prev = 0;
  for (int u : letters) {
    mapped = (prev == 0) ? 1 : mapped + std::min(u - prev, 2);
    relabel[u] = mapped;
    prev = u;
  }

  Word normalized;
  normalized.reserve(word.size());
  for (int a : word) normalized.push_back(relabel.at(a));
  return Permutation::from_word(normalized);
}

std::vector<Permutation> permutations_with_length(int n, int max_letter) {
  if (n < 0) throw std::invalid_argument("length must be nonnegative");
  std::set<Permutation> level{Permutation{}};
  for (int k = 0; k < n; ++k) {
    std::set<Permutation> next;
    for (const Permutation& p : level)
      for (int i = 1; i <= max_letter; ++i)
        if (p(i) < p(i + 1))  // right multiplication by an ascent lengthens
          next.insert(p.multiply_right(i));
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::vector<Permutation> enumerate_length_n(int n) {
  const int max_letter = std::max(1, 2 * n - 1);
  std::set<Permutation> canonical;
  for (const Permutation& p : permutations_with_length(n, max_letter))
    canonical.insert(canonical_form(p));
  return {canonical.begin(), canonical.end()};
}

std::uint64_t involutions(int n) {
  if (n < 0) throw std::invalid_argument("involutions: n must be nonnegative");
  std::uint64_t prev2 = 1, prev1 = 1;  // I(0), I(1)
  if (n <= 1) return 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t cur = prev1 + static_cast<std::uint64_t>(k - 1) * prev2;
    prev2 = prev1;
    prev1 = cur;
  }
  return prev1;
}

}  // namespace egstat
