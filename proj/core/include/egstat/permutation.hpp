#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

namespace egstat {

// A word is a finite sequence of simple-transposition indices: the letter i
// stands for s_i, which swaps i and i+1 and fixes everything else. The empty
// word is the identity.
using Word = std::vector<int>;

// A finitely supported permutation of the positive integers, stored in
// one-line notation [w(1),...,w(m)] with trailing fixed points trimmed, so
// the representation is unique and the identity is the empty sequence.
// Immutable after construction.
class Permutation {
 public:
  Permutation() = default;  // identity

  // Builds from one-line notation. Throws std::invalid_argument unless the
  // entries are a bijection of {1,...,m}.
  static Permutation from_one_line(std::vector<int> oneline);

  // Product s_{i_1} s_{i_2} ... s_{i_k}, evaluated left to right: each letter
  // i swaps the entries in positions i and i+1 of the one-line form built so
  // far. Throws std::invalid_argument on letters < 1.
  static Permutation from_word(const Word& word);

  // Image of i (1-based); positions beyond the stored prefix are fixed.
  int operator()(int i) const;

  int size() const { return static_cast<int>(oneline_.size()); }
  bool is_identity() const { return oneline_.empty(); }
  const std::vector<int>& one_line() const { return oneline_; }

  // Inversion count; equals the length of every reduced word.
  int coxeter_length() const;

  // Positions i with w(i) > w(i+1): exactly the letters whose right
  // multiplication shortens the permutation.
  std::vector<int> right_descents() const;

  // this * s_letter (swaps the entries in positions letter and letter+1).
  Permutation multiply_right(int letter) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> oneline_;
};

// True iff the word's length equals the Coxeter length of its product.
bool is_reduced(const Word& word);

// The complete set Red(p), in lexicographic order. Computed by peeling right
// descents, so every returned word is reduced and multiplies to p.
std::vector<Word> reduced_words(const Permutation& p);

// Letter set of one (hence every) reduced word of p.
std::set<int> support(const Permutation& p);

// All words one commutation move (swap adjacent letters at distance >= 2) or
// one braid move (i,i+1,i <-> i+1,i,i+1) away from the given reduced word.
// Throws std::invalid_argument on non-reduced input.
std::set<Word> tits_neighbors(const Word& word);

// True iff some reduced word of p has pairwise letter distance >= 2;
// equivalently |supp(p)| = l(p) and no two support letters are adjacent.
bool is_totally_commutative(const Permutation& p);

// Support-normalized representative: the support minimum is translated to 1
// and every gap between consecutive support blocks is compressed to size
// exactly 1. Commutation and braid applicability only depend on letter
// differences capped at 2, so the word-rewriting structure is unchanged.
Permutation canonical_form(const Permutation& p);

// All permutations of Coxeter length n whose reduced words use letters in
// [1, max_letter], sorted. Breadth-first products over the letter range.
std::vector<Permutation> permutations_with_length(int n, int max_letter);

// All support-normalized permutations of Coxeter length n, sorted. Canonical
// support fits inside [1, 2n-1], which makes this a finite set.
std::vector<Permutation> enumerate_length_n(int n);

// Number of involutions in S_n, via I(n) = I(n-1) + (n-1) I(n-2).
std::uint64_t involutions(int n);

}  // namespace egstat
