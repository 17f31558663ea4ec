#pragma once

// Generators for the permutation families under study: descent classes,
// shuffle sets with star refinements, unimodal and arc permutations,
// rotation closures and the V/H refinements by the position of n.
//
// Sets are materialized as sorted duplicate-free vectors so that equality
// and disjoint unions are linear scans.

#include <functional>
#include <optional>

#include "cycdes/permcore.hpp"

namespace cycdes {

class PermSet {
public:
    PermSet() = default;
    explicit PermSet(int n) : n_(n) {}
    /// Sorts, rejects duplicates unless merge_duplicates.
    PermSet(int n, std::vector<Permutation> members, bool merge_duplicates = false);

    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Permutation>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(const Permutation& pi) const;
    bool is_disjoint_from(const PermSet& other) const;

    /// Union with another set over the same n; duplicates merged.
    PermSet unioned(const PermSet& other) const;
    /// Right/left coset maps A -> A*g, A -> g*A.
    PermSet right_multiplied(const Permutation& g) const;
    PermSet left_multiplied(const Permutation& g) const;
    PermSet inverses() const;
    PermSet filtered(const std::function<bool(const Permutation&)>& pred) const;

    friend bool operator==(const PermSet&, const PermSet&) = default;

private:
    int n_ = 0;
    std::vector<Permutation> members_;
};

/// All of S_n in lexicographic order.
PermSet all_permutations(int n);

/// D_{n,J} = { pi in S_n : Des(pi) = J },  J subset of [n-1].
PermSet descent_class(int n, const Mask& j);
/// D_{n,J}^{-1} = { pi : Des(pi^{-1}) = J }.
PermSet inverse_descent_class(int n, const Mask& j);

/// S_{n-1} -> S_n, fixing n (each word gains a trailing n).
PermSet embed(const PermSet& a);
Permutation embed(const Permutation& pi);

/// A C_n (resp. C_n A) for A over S_{n-1}, embedded.
PermSet horizontal_closure(const PermSet& a, int n);
PermSet vertical_closure(const PermSet& a, int n);
/// C_n as a set.
PermSet cyclic_group(int n);

/// S(gamma): value blocks cut by gamma each read left-to-right increasing.
/// Weak compositions allowed; a negative part yields the empty set. The
/// empty permutation is the sole member when the total is 0.
PermSet shuffle_set(const Composition& gamma);
/// { pi in S(gamma) : the last letter of pi lies in value block i }.
/// The empty permutation is assigned to block 1.
PermSet shuffle_set_last_star(const Composition& gamma, int i);
/// Same with the first letter.
PermSet shuffle_set_first_star(const Composition& gamma, int i);
bool in_shuffle_set(const Permutation& pi, const Composition& gamma);

/// Left-unimodal permutations: every prefix is an integer interval.
PermSet left_unimodal(int n);
PermSet right_unimodal(int n);
bool is_left_unimodal(const Permutation& pi);
bool is_right_unimodal(const Permutation& pi);
/// The unique member of L_n (resp. R_n) with the given descent set.
Permutation left_unimodal_with_des(int n, const Mask& des);
Permutation right_unimodal_with_des(int n, const Mask& des);

/// Arc permutations: every prefix is a cyclic interval in Z_n.
PermSet arc_permutations(int n);
bool is_arc(const Permutation& pi);

/// C_{n,k} = { pi : |cDes(pi^{-1})| = k },  1 <= k <= n-1.
PermSet cdes_inverse_count_class(int n, int k);
/// { pi : cDes(pi^{-1}) = i+J for some i },  {} != J != [n].
PermSet orbit_class(int n, const Mask& j);

/// V_gamma^k = { pi in C_n S(gamma_1..gamma_t^*) : pi(k) = n } and the
/// right-coset analogue H_gamma^k.
PermSet v_set(const Composition& gamma, int k);
PermSet h_set(const Composition& gamma, int k);

/// True when pi contains pattern (order-isomorphic subsequence).
bool contains_pattern(const Permutation& pi, const Permutation& pattern);

}  // namespace cycdes
