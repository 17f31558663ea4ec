#include "cycdes/schur.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace cycdes {

namespace {

// Exact rational on int64 with 128-bit intermediates; plenty for the
// desk-scale systems solved here, and any overflow aborts loudly.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(__int128 n, __int128 d) {
        if (d == 0) throw std::logic_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num = narrow(n);
        den = narrow(d);
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<long long>(v);
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                   static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::logic_error("rational division by zero");
        return Rat(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }
};

}  // namespace

SytDesMatrix syt_des_matrix(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("syt_des_matrix is a desk-scale computation");
    SytDesMatrix m;
    m.n = n;
    m.partitions = partitions_of(n);
    const std::size_t rows = std::size_t{1} << (n - 1);
    for (const Partition& lambda : m.partitions) {
        std::vector<long long> col(rows, 0);
        for (const Tableau& t : enumerate_syt(SkewShape::from_partitions(lambda)))
            ++col[static_cast<std::size_t>(des_set_syt(t).bits())];
        m.by_column.push_back(std::move(col));
    }
    return m;
}

SchurExpansion schur_expand(const GenDist& des, int n) {
    SytDesMatrix m = syt_des_matrix(n);
    const std::size_t rows = std::size_t{1} << (n - 1);
    const std::size_t cols = m.partitions.size();

    // augmented system [M | b], rationals, row-reduced column by column
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) a[r][c] = Rat(m.by_column[c][r]);
    for (const auto& [term, count] : des.counts()) {
        if (term.mask_bits >= rows) throw std::invalid_argument("descent mask outside [n-1]");
        a[static_cast<std::size_t>(term.mask_bits)][cols] = Rat(count);
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) break;  // rank-deficient column: impossible, checked below
        std::swap(a[pivot], a[rank]);
        Rat inv = Rat(1) / a[rank][c];
        for (std::size_t cc = c; cc <= cols; ++cc) a[rank][cc] = a[rank][cc] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Rat factor = a[r][c];
            for (std::size_t cc = c; cc <= cols; ++cc)
                a[r][cc] = a[r][cc] - factor * a[rank][cc];
        }
        pivot_row[c] = rank;
        ++rank;
    }
    if (rank != cols)
        throw std::logic_error("descent-distribution columns are not independent");

    SchurExpansion out;
    for (std::size_t r = rank; r < rows; ++r) {
        if (!a[r][cols].is_zero()) {
            out.status = SchurExpansion::Status::no_solution;
            out.detail = "distribution is not symmetric-expressible";
            return out;
        }
    }
    for (std::size_t c = 0; c < cols; ++c) {
        Rat v = a[pivot_row[c]][cols];
        if (!v.is_integer()) {
            out.status = SchurExpansion::Status::non_integral;
            out.detail = "multiplicity of " + partition_str(m.partitions[c]) + " is not integral";
            return out;
        }
        if (v.num < 0) {
            out.status = SchurExpansion::Status::negative;
            out.detail = "multiplicity of " + partition_str(m.partitions[c]) + " is negative";
            return out;
        }
        if (v.num != 0) out.coeffs[m.partitions[c]] = v.num;
    }
    return out;
}

SchurExpansion schur_expand(const PermSet& a) {
    return schur_expand(des_dist(a), a.n());
}

long long hook_multiplicity(const PermSet& a, int k) {
    if (k < 0 || k >= a.n()) throw std::invalid_argument("hook arm out of range");
    long long count = 0;
    Mask prefix(a.n() - 1);
    for (int i = 1; i <= k; ++i) prefix.insert(i);
    for (const Permutation& pi : a)
        if (des_set(pi).bits() == prefix.bits()) ++count;
    return count;
}

std::vector<long long> strip_coefficients(const std::vector<long long>& m_hooks) {
    const std::size_t n = m_hooks.size();
    std::vector<long long> d(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        long long acc = 0;
        for (std::size_t i = k; i < n; ++i) {
            long long term = m_hooks[i];
            acc += ((i - k) % 2 == 0) ? term : -term;
        }
        d[k] = acc;
    }
    return d;
}

std::string SchurCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    nlohmann::ordered_json straight_obj = nlohmann::ordered_json::object();
    for (const auto& [lambda, mult] : straight) straight_obj[partition_str(lambda)] = mult;
    j["straight"] = straight_obj;
    nlohmann::ordered_json cyclic_obj = nlohmann::ordered_json::object();
    for (const auto& [shape, mult] : cyclic) cyclic_obj[shape.str()] = mult;
    j["cyclic"] = cyclic_obj;
    j["status"] = "verified";
    return j.dump();
}

CspResult csp_certificate(const PermSet& a) {
    const int n = a.n();
    if (n < 2) throw std::domain_error("csp_certificate needs n >= 2");

    CspResult out;
    SchurExpansion expansion = schur_expand(a);
    if (!expansion.ok()) {
        out.status = CspResult::Status::not_schur_positive;
        out.detail = expansion.detail;
        return out;
    }
    if (auto witness = cdes_invariance_witness(a)) {
        out.status = CspResult::Status::not_cdes_invariant;
        out.detail = "fiber counts differ at " + witness->first.str() + " vs " + witness->second.str();
        out.witness = witness;
        return out;
    }

    std::vector<long long> m_hooks(static_cast<std::size_t>(n), 0);
    SchurCertificate cert;
    cert.n = n;
    cert.straight = expansion.coeffs;
    for (const auto& [lambda, mult] : expansion.coeffs) {
        if (is_hook(lambda))
            m_hooks[lambda.size() - 1] = mult;  // (n-k,1^k) has k+1 rows
        else
            cert.cyclic[SkewShape::from_partitions(lambda)] = mult;
    }
    std::vector<long long> d = strip_coefficients(m_hooks);
    if (d[0] != 0)
        throw std::logic_error("strip coefficient d_0 is nonzero for an invariant set");
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (d[i] < 0)
            throw std::logic_error("negative strip coefficient for an invariant set");
        if (d[i] == 0) continue;
        Partition column(static_cast<std::size_t>(i), 1);
        Partition row{n - static_cast<int>(i)};
        cert.cyclic[SkewShape::direct_sum({column, row})] = d[i];
    }

    GenDist expected(n, false);
    for (const auto& [shape, mult] : cert.cyclic)
        expected += syt_cdes_dist(shape).scaled(mult);
    GenDist actual = cdes_dist(a);
    if (!(expected == actual)) {
        for (const auto& [term, count] : actual.counts()) {
            Mask mask = Mask::from_bits(n, term.mask_bits);
            if (expected.count_of(mask) != count)
                throw std::logic_error("certificate verification mismatch at " + mask.str());
        }
        throw std::logic_error("certificate verification mismatch");
    }
    out.certificate = std::move(cert);
    return out;
}

}  // namespace cycdes
