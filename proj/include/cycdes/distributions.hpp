#pragma once

// Generating multisets of (cDes, t) statistics over permutation sets and
// tableaux families, the alternating-sum fiber inversion that recovers a
// cyclic descent distribution from a plain descent distribution, and the
// cDes-invariance test.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "cycdes/classes.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

/// A multiset of (mask, optional t-exponent) statistics. Keys are
/// canonicalized as (mask bits, t), with t = 0 when untracked.
class GenDist {
public:
    struct Term {
        std::uint64_t mask_bits = 0;
        int t = 0;
        friend auto operator<=>(const Term&, const Term&) = default;
    };

    GenDist() = default;
    GenDist(int n, bool track_t) : n_(n), track_t_(track_t) {}

    int n() const { return n_; }
    bool track_t() const { return track_t_; }
    const std::map<Term, long long>& counts() const { return counts_; }
    long long total() const;
    long long count_of(const Mask& mask, int t = 0) const;

    void add(const Mask& mask, long long count = 1, int t = 0);
    GenDist& operator+=(const GenDist& other);
    GenDist scaled(long long factor) const;

    std::string to_json() const;

    friend bool operator==(const GenDist&, const GenDist&) = default;

private:
    int n_ = 0;
    bool track_t_ = false;
    std::map<Term, long long> counts_;
};

/// Sum of x^{cDes(pi)} t^{pi^{-1}(n)} over A (t tracked on demand).
GenDist cdes_dist(const PermSet& a, bool track_t = false);
/// Sum of x^{Des(pi)} over A; masks live in [n-1].
GenDist des_dist(const PermSet& a);

/// Des distribution over SYT(shape).
GenDist syt_des_dist(const SkewShape& shape);

struct FiberResult {
    std::optional<GenDist> dist;
    std::string error;            // empty on success
    std::optional<Mask> witness;  // offending mask on failure
    bool ok() const { return dist.has_value(); }
};

/// Recovers |cDes^{-1}(J)| for every nonempty J from a Des distribution via
/// the alternating sum over lower elements. Validates: nonnegative fibers,
/// totals match, extension marginals match, shift-invariant fibers, and
/// empty fiber at [n]. A failure certifies that the input family admits no
/// cyclic descent extension.
FiberResult fibers_from_des(const GenDist& des, int n);

/// cDes distribution over SYT(shape): explicit maps for strips and
/// near-hooks, the fiber inversion for every other non-ribbon shape.
/// Connected ribbons are rejected.
GenDist syt_cdes_dist(const SkewShape& shape);

/// True iff every fiber count of cDes over A is invariant under the shift
/// J -> 1+J. On failure the witness pair of masks is reported.
bool is_cdes_invariant(const PermSet& a);
std::optional<std::pair<Mask, Mask>> cdes_invariance_witness(const PermSet& a);

}  // namespace cycdes
