#pragma once

// Permutations, descent masks and compositions: the ground layer everything
// else is built from. One-line notation, 1-based values, (pi*sigma)(i) =
// pi(sigma(i)). Right multiplication by the n-cycle shifts positions, left
// multiplication shifts values.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cycdes {

constexpr int kMaxN = 64;  // masks live in a machine word

/// A subset of [n] stored as a bitset (bit i-1 <=> element i).
class Mask {
public:
    Mask() = default;
    explicit Mask(int n) : n_(n) { check_n(n); }
    Mask(int n, std::initializer_list<int> elems);
    static Mask from_bits(int n, std::uint64_t bits);
    static Mask full(int n);
    /// Parses "{1,4,5}" (or "{}" for the empty set).
    static Mask parse(std::string_view text, int n);

    int n() const { return n_; }
    std::uint64_t bits() const { return bits_; }
    int count() const;
    bool empty() const { return bits_ == 0; }
    bool contains(int i) const;
    void insert(int i);
    void erase(int i);
    bool is_subset_of(const Mask& other) const;

    /// Elementwise i+j mod n with representatives in [n] (residue 0 -> n).
    Mask shifted(int j) const;

    std::vector<int> elements() const;
    std::string str() const;

    friend auto operator<=>(const Mask&, const Mask&) = default;

private:
    static void check_n(int n);
    int n_ = 0;
    std::uint64_t bits_ = 0;
};

/// A permutation of [n] in one-line notation. The empty permutation (n = 0)
/// is allowed as the identity of S_0; it shows up as the neutral factor of
/// pattern compositions.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    static Permutation identity(int n);
    /// Parses "21453" (digits, n <= 9) or "13,6,14,..." (comma form).
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(word_.size()); }
    /// Image of position i (1-based).
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;  // (pi*sigma)(i) = pi(sigma(i))
    /// Position of the value n.
    int position_of_max() const;

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

/// The n-cycle c_n = 23...n1 raised to the j-th power (j may be negative).
Permutation cn_power(int n, long long j);

/// Des(pi) = { i in [n-1] : pi(i) > pi(i+1) }.
Mask des_set(const Permutation& pi);

/// cDes(pi) = Des(pi), plus n when pi(n) > pi(1). Requires n >= 2
/// (a cyclic descent set on a single letter would be Escher).
Mask cdes_set(const Permutation& pi);

/// Elementwise shift, free-function form of Mask::shifted.
Mask shift_mask(const Mask& d, int j);

/// A (possibly weak) composition of n.
struct Composition {
    std::vector<int> parts;
    bool weak = false;

    int total() const;
    int size() const { return static_cast<int>(parts.size()); }
    std::string str() const;  // "(2,3,2)"

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// J = {j_1 < ... < j_{t-1}} subset of [n-1]  ->  (j_1, j_2-j_1, ..., n-j_{t-1}).
Composition subset_to_composition(const Mask& j, int n);
Mask composition_to_subset(const Composition& gamma);

}  // namespace cycdes
