#pragma once

// The explicit descent-preserving maps: the block-swap word map f and its
// range/letter-pair variants, the multi-shuffle rearrangement, the
// interleaving product, the singleton-class bijection Psi, the arc maps and
// the arc-to-tableau bijection.

#include <optional>
#include <vector>

#include "cycdes/classes.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

/// A word over the alphabet [t].
struct Word {
    std::vector<int> letters;
    int alphabet = 2;

    int size() const { return static_cast<int>(letters.size()); }
    std::string str() const;
    friend bool operator==(const Word&, const Word&) = default;
};

/// Binary block swap: occurrences of the factor 21 stay in place, every
/// maximal remaining block 1^r 2^s becomes 1^s 2^r. An involution that
/// swaps the letter counts and fixes the descent positions.
Word word_f(const Word& w);
/// f applied to the factor w_p..w_q in isolation (1-based, inclusive).
Word word_f_range(const Word& w, int p, int q);
/// f applied to the subword of letters j and j+1, other letters fixed.
Word word_f_letters(const Word& w, int j);

/// Encoding between shuffles of increasing runs and block words: letter j at
/// position i means pi(i) lies in the j-th value block of gamma.
Word encode_shuffle(const Permutation& pi, const Composition& gamma);
Permutation decode_shuffle(const Word& w, const Composition& gamma);

/// Rearranges a member of the gamma-shuffle set onto the reversed
/// composition, preserving descents, by applying the letter-pair map along a
/// reduced word for the decreasing permutation (staircase by default).
Permutation multi_shuffle_phi(const Permutation& pi, const Composition& gamma,
                              const std::optional<std::vector<int>>& reduced_word = std::nullopt);
/// s_1, s_2 s_1, ..., s_{t-1}...s_1.
std::vector<int> staircase_reduced_word(int t);

/// The unique member of S(alpha+beta) whose leftmost |alpha| entries are
/// order-isomorphic to rho and rightmost |beta| entries to sigma, value
/// blocks interleaved (alpha values low, beta values high per block).
Permutation circledast(const Permutation& rho, const Permutation& sigma,
                       const Composition& alpha, const Composition& beta);
/// Elementwise product set.
PermSet circledast_set(const PermSet& p, const PermSet& q,
                       const Composition& alpha, const Composition& beta);

/// The cDes- and position-of-n-preserving bijection
/// C_n D_{n-1,{j}}^{-1} -> D_{n-1,{j}}^{-1} C_n.
Permutation psi_singleton(const Permutation& pi, int j);

/// cDes-preserving bijection L_{n-1} C_n -> A_n fixing the last entry,
/// and its inverse.
Permutation arc_phi(const Permutation& pi);
Permutation arc_psi(const Permutation& sigma);

/// cDes-preserving bijection D_{n-1,[k]}^{-1} C_n -> SYT((n-k-1,1^k)+(1)).
Tableau arc_to_syt(const Permutation& sigma);
/// The composite over arc permutations.
Tableau arc_perm_to_syt(const Permutation& pi);

}  // namespace cycdes
