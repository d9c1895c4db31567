#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "egstat/partition.hpp"
#include "egstat/permutation.hpp"
#include "egstat/tableau.hpp"

namespace egstat {

// An Edelman-Greene tableau: a filling that increases strictly along rows and
// columns and whose reading word is a reduced word of the associated
// permutation. `reading` always equals reading_word(tableau).
struct EGTableau {
  Tableau tableau;
  Word reading;
  auto operator<=>(const EGTableau&) const = default;
};

// Column reading word: rightmost column first, each column top to bottom.
Word reading_word(const Tableau& t);

// True iff t increases strictly along rows and columns and its reading word
// is a reduced word of w.
bool is_eg_tableau(const Tableau& t, const Permutation& w);

// The complete, duplicate-free list of EG tableaux of type (shape, w); empty
// when |shape| != l(w). Cells are filled in reading order with reduced-prefix
// pruning (every prefix of a reduced word is reduced), letters drawn from
// supp(w); results are ordered lexicographically by reading word.
std::vector<EGTableau> enumerate_eg(const Partition& shape, const Permutation& w);

// a_{w,lambda} = |EG(lambda, w)|.
std::uint64_t eg_count(const Partition& shape, const Permutation& w);

// EG(w): the sum of a_{w,lambda} over partitions lambda of l(w). Equals 1 for
// the identity (the empty tableau).
std::uint64_t eg_statistic(const Permutation& w);

// True iff a_{w,lambda} = f^lambda.
bool is_lambda_maximal(const Permutation& w, const Partition& shape);

// w_n = s_1 s_3 ... s_{2n-1}, the totally commutative permutation of length n
// whose EG statistic attains the involution-count maximum. Requires n >= 1.
Permutation staircase_witness(int n);

// Relabels i -> 2i-1, turning a standard tableau of size n into an EG tableau
// of type (shape, w_n). Over all of SYT(shape) this is a bijection onto
// EG(shape, w_n). Throws on size mismatch or non-standard input.
EGTableau syt_to_eg(const Tableau& t, int n);

}  // namespace egstat
