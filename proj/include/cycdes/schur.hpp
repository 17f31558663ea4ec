#pragma once

// Exact Schur-expansion solver over the SYT descent-distribution basis,
// hook-coefficient bookkeeping, and the constructive cyclic Schur-positivity
// certificate with its distribution-level verification.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycdes/distributions.hpp"

namespace cycdes {

/// Entry (D, lambda) counts the SYT of shape lambda with Des = D. Rows are
/// indexed by mask bits over [n-1], columns follow partitions_of(n).
struct SytDesMatrix {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<std::vector<long long>> by_column;  // column-major, 2^{n-1} rows
};

SytDesMatrix syt_des_matrix(int n);

struct SchurExpansion {
    enum class Status { ok, no_solution, negative, non_integral };
    Status status = Status::ok;
    std::map<Partition, long long> coeffs;  // nonzero m_lambda on success
    std::string detail;
    bool ok() const { return status == Status::ok; }
};

/// Solves des_dist(A) = sum_lambda m_lambda * column_lambda exactly over the
/// rationals. The matrix has full column rank, so the solution is unique
/// when it exists; A is Schur-positive iff the solution exists and is a
/// nonnegative integer vector.
SchurExpansion schur_expand(const PermSet& a);
SchurExpansion schur_expand(const GenDist& des, int n);

/// #{ a in A : Des(a) = [k] }, the hook coefficient of Lemma-style counting.
long long hook_multiplicity(const PermSet& a, int k);

/// d_k = sum_{i>=k} (-1)^{i-k} m_{(n-i,1^i)}.
std::vector<long long> strip_coefficients(const std::vector<long long>& m_hooks);

struct SchurCertificate {
    int n = 0;
    std::map<Partition, long long> straight;   // full Schur expansion
    std::map<SkewShape, long long> cyclic;     // non-hook lambdas and strips 1^i+(n-i)
    std::string to_json() const;
};

struct CspResult {
    enum class Status { verified, not_schur_positive, not_cdes_invariant };
    Status status = Status::verified;
    std::optional<SchurCertificate> certificate;
    std::string detail;
    std::optional<std::pair<Mask, Mask>> witness;  // for the invariance failure
    bool ok() const { return status == Status::verified; }
};

/// Runs the Schur expansion and the invariance test; on success assembles
/// the cyclic certificate (non-hook multiplicities plus strip coefficients)
/// and verifies it against cdes_dist(A) term by term. A verification
/// mismatch would contradict the construction and throws std::logic_error.
CspResult csp_certificate(const PermSet& a);

}  // namespace cycdes
