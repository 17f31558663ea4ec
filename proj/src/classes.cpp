#include "cycdes/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cycdes {

PermSet::PermSet(int n, std::vector<Permutation> members, bool merge_duplicates)
    : n_(n), members_(std::move(members)) {
    for (const auto& pi : members_)
        if (pi.size() != n_) throw std::invalid_argument("PermSet member of wrong size");
    std::sort(members_.begin(), members_.end());
    auto it = std::unique(members_.begin(), members_.end());
    if (it != members_.end()) {
        if (!merge_duplicates) throw std::invalid_argument("duplicate members in PermSet");
        members_.erase(it, members_.end());
    }
}

bool PermSet::contains(const Permutation& pi) const {
    return std::binary_search(members_.begin(), members_.end(), pi);
}

bool PermSet::is_disjoint_from(const PermSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return false;
    }
    return true;
}

PermSet PermSet::unioned(const PermSet& other) const {
    if (n_ != other.n_ && !empty() && !other.empty())
        throw std::invalid_argument("union of PermSets over different n");
    std::vector<Permutation> merged;
    merged.reserve(size() + other.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(merged));
    PermSet out(empty() ? other.n_ : n_);
    out.members_ = std::move(merged);
    return out;
}

PermSet PermSet::right_multiplied(const Permutation& g) const {
    std::vector<Permutation> out;
    out.reserve(size());
    for (const auto& pi : members_) out.push_back(pi * g);
    return PermSet(n_, std::move(out));
}

PermSet PermSet::left_multiplied(const Permutation& g) const {
    std::vector<Permutation> out;
    out.reserve(size());
    for (const auto& pi : members_) out.push_back(g * pi);
    return PermSet(n_, std::move(out));
}

PermSet PermSet::inverses() const {
    std::vector<Permutation> out;
    out.reserve(size());
    for (const auto& pi : members_) out.push_back(pi.inverse());
    return PermSet(n_, std::move(out));
}

PermSet PermSet::filtered(const std::function<bool(const Permutation&)>& pred) const {
    std::vector<Permutation> out;
    for (const auto& pi : members_)
        if (pred(pi)) out.push_back(pi);
    return PermSet(n_, std::move(out));
}

PermSet all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return PermSet(n, std::move(out));
}

PermSet descent_class(int n, const Mask& j) {
    if (!j.empty() && j.elements().back() > n - 1)
        throw std::invalid_argument("descent set must lie in [n-1]");
    std::vector<Permutation> out;
    for (const auto& pi : all_permutations(n))
        if (des_set(pi).bits() == j.bits()) out.push_back(pi);
    return PermSet(n, std::move(out));
}

PermSet inverse_descent_class(int n, const Mask& j) {
    return descent_class(n, j).inverses();
}

Permutation embed(const Permutation& pi) {
    std::vector<int> w = pi.word();
    w.push_back(pi.size() + 1);
    return Permutation(std::move(w));
}

PermSet embed(const PermSet& a) {
    std::vector<Permutation> out;
    out.reserve(a.size());
    for (const auto& pi : a) out.push_back(embed(pi));
    return PermSet(a.n() + 1, std::move(out));
}

PermSet horizontal_closure(const PermSet& a, int n) {
    if (a.n() != n - 1) throw std::invalid_argument("horizontal_closure expects A over S_{n-1}");
    PermSet e = embed(a);
    std::vector<Permutation> out;
    out.reserve(e.size() * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Permutation c = cn_power(n, j);
        for (const auto& pi : e) out.push_back(pi * c);
    }
    return PermSet(n, std::move(out), /*merge_duplicates=*/true);
}

PermSet vertical_closure(const PermSet& a, int n) {
    if (a.n() != n - 1) throw std::invalid_argument("vertical_closure expects A over S_{n-1}");
    PermSet e = embed(a);
    std::vector<Permutation> out;
    out.reserve(e.size() * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Permutation c = cn_power(n, j);
        for (const auto& pi : e) out.push_back(c * pi);
    }
    return PermSet(n, std::move(out), /*merge_duplicates=*/true);
}

PermSet cyclic_group(int n) {
    std::vector<Permutation> out;
    for (int j = 0; j < n; ++j) out.push_back(cn_power(n, j));
    return PermSet(n, std::move(out));
}

namespace {

// Decodes a word over [t] into the permutation whose block-j values appear at
// the positions holding letter j, in increasing order.
Permutation decode_block_word(const std::vector<int>& word, const Composition& gamma) {
    std::vector<int> next(gamma.parts.size() + 1, 0);
    int acc = 0;
    for (std::size_t b = 0; b < gamma.parts.size(); ++b) {
        next[b + 1] = acc + 1;
        acc += gamma.parts[b];
    }
    std::vector<int> w(word.size());
    for (std::size_t i = 0; i < word.size(); ++i)
        w[i] = next[static_cast<std::size_t>(word[i])]++;
    return Permutation(std::move(w));
}

// Value block containing v, 1-based; 0 when v is out of range.
int block_of_value(int v, const Composition& gamma) {
    int acc = 0;
    for (int b = 0; b < gamma.size(); ++b) {
        acc += gamma.parts[static_cast<std::size_t>(b)];
        if (v <= acc) return b + 1;
    }
    return 0;
}

}  // namespace

PermSet shuffle_set(const Composition& gamma) {
    for (int p : gamma.parts)
        if (p < 0) return PermSet(0);
    const int n = gamma.total();
    std::vector<int> word;
    for (int b = 0; b < gamma.size(); ++b)
        word.insert(word.end(), static_cast<std::size_t>(gamma.parts[static_cast<std::size_t>(b)]), b + 1);
    std::vector<Permutation> out;
    if (word.empty()) {
        out.emplace_back();
        return PermSet(0, std::move(out));
    }
    do {
        out.push_back(decode_block_word(word, gamma));
    } while (std::next_permutation(word.begin(), word.end()));
    return PermSet(n, std::move(out));
}

PermSet shuffle_set_last_star(const Composition& gamma, int i) {
    if (i < 1 || i > gamma.size()) throw std::invalid_argument("star slot out of range");
    PermSet all = shuffle_set(gamma);
    if (all.empty()) return all;
    if (gamma.total() == 0)
        return i == 1 ? all : PermSet(0);
    return all.filtered([&](const Permutation& pi) {
        return block_of_value(pi(pi.size()), gamma) == i;
    });
}

PermSet shuffle_set_first_star(const Composition& gamma, int i) {
    if (i < 1 || i > gamma.size()) throw std::invalid_argument("star slot out of range");
    PermSet all = shuffle_set(gamma);
    if (all.empty()) return all;
    if (gamma.total() == 0)
        return i == 1 ? all : PermSet(0);
    return all.filtered([&](const Permutation& pi) {
        return block_of_value(pi(1), gamma) == i;
    });
}

bool in_shuffle_set(const Permutation& pi, const Composition& gamma) {
    if (gamma.total() != pi.size()) return false;
    for (int p : gamma.parts)
        if (p < 0) return false;
    std::vector<int> last_pos(gamma.parts.size() + 1, 0);
    for (int i = 1; i <= pi.size(); ++i) {
        int b = block_of_value(pi(i), gamma);
        if (b == 0) return false;
        if (last_pos[static_cast<std::size_t>(b)] > 0) {
            // within a block, values must appear in increasing order
            if (pi(last_pos[static_cast<std::size_t>(b)]) > pi(i)) return false;
        }
        last_pos[static_cast<std::size_t>(b)] = i;
    }
    return true;
}

bool is_left_unimodal(const Permutation& pi) {
    int lo = pi.size() + 1, hi = 0;
    for (int i = 1; i <= pi.size(); ++i) {
        lo = std::min(lo, pi(i));
        hi = std::max(hi, pi(i));
        if (hi - lo + 1 != i) return false;
    }
    return true;
}

bool is_right_unimodal(const Permutation& pi) {
    int lo = pi.size() + 1, hi = 0;
    for (int i = pi.size(); i >= 1; --i) {
        lo = std::min(lo, pi(i));
        hi = std::max(hi, pi(i));
        if (hi - lo + 1 != pi.size() - i + 1) return false;
    }
    return true;
}

Permutation left_unimodal_with_des(int n, const Mask& des) {
    if (!des.empty() && des.elements().back() > n - 1)
        throw std::invalid_argument("descent set must lie in [n-1]");
    const int d = des.count();
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    int falling = d;
    for (int e : des.elements()) w[static_cast<std::size_t>(e)] = falling--;
    int rising = d + 1;
    for (auto& v : w)
        if (v == 0) v = rising++;
    return Permutation(std::move(w));
}

Permutation right_unimodal_with_des(int n, const Mask& des) {
    // mirror: reverse of a right-unimodal word is left-unimodal, with
    // descent positions complemented through i -> n-i
    Mask mirrored(n == 0 ? 0 : n - 1);
    for (int i = 1; i <= n - 1; ++i)
        if (!des.contains(n - i)) mirrored.insert(i);
    Permutation l = left_unimodal_with_des(n, mirrored);
    std::vector<int> w(l.word().rbegin(), l.word().rend());
    return Permutation(std::move(w));
}

PermSet left_unimodal(int n) {
    std::vector<Permutation> out;
    if (n == 0) return PermSet(0, {Permutation()});
    const std::uint64_t lim = std::uint64_t{1} << (n - 1);
    for (std::uint64_t bits = 0; bits < lim; ++bits)
        out.push_back(left_unimodal_with_des(n, Mask::from_bits(n - 1, bits)));
    return PermSet(n, std::move(out));
}

PermSet right_unimodal(int n) {
    std::vector<Permutation> out;
    if (n == 0) return PermSet(0, {Permutation()});
    const std::uint64_t lim = std::uint64_t{1} << (n - 1);
    for (std::uint64_t bits = 0; bits < lim; ++bits)
        out.push_back(right_unimodal_with_des(n, Mask::from_bits(n - 1, bits)));
    return PermSet(n, std::move(out));
}

bool is_arc(const Permutation& pi) {
    const int n = pi.size();
    if (n == 0) return false;
    // prefix values as a cyclic interval: [lo,hi] tracked modulo n
    int lo = pi(1), hi = pi(1);
    for (int i = 2; i <= n; ++i) {
        int v = pi(i);
        int below = lo == 1 ? n : lo - 1;
        int above = hi == n ? 1 : hi + 1;
        if (i == n) return true;  // a full prefix is always an interval
        if (v == below) lo = below;
        else if (v == above) hi = above;
        else return false;
    }
    return true;
}

namespace {

void extend_arc(std::vector<int>& w, int lo, int hi, int n, std::vector<Permutation>& out) {
    if (static_cast<int>(w.size()) == n) {
        out.emplace_back(w);
        return;
    }
    int below = lo == 1 ? n : lo - 1;
    int above = hi == n ? 1 : hi + 1;
    if (below == above) {  // one value left
        w.push_back(below);
        out.emplace_back(w);
        w.pop_back();
        return;
    }
    w.push_back(below);
    extend_arc(w, below, hi, n, out);
    w.pop_back();
    w.push_back(above);
    extend_arc(w, lo, above, n, out);
    w.pop_back();
}

}  // namespace

PermSet arc_permutations(int n) {
    if (n < 1) throw std::invalid_argument("arc_permutations needs n >= 1");
    std::vector<Permutation> out;
    std::vector<int> w;
    for (int first = 1; first <= n; ++first) {
        w.assign(1, first);
        extend_arc(w, first, first, n, out);
    }
    return PermSet(n, std::move(out));
}

PermSet cdes_inverse_count_class(int n, int k) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("cdes count must lie in [1, n-1]");
    return all_permutations(n).filtered([&](const Permutation& pi) {
        return cdes_set(pi.inverse()).count() == k;
    });
}

PermSet orbit_class(int n, const Mask& j) {
    if (j.n() != n || j.empty() || j.count() == n)
        throw std::invalid_argument("orbit_class needs {} != J != [n]");
    std::vector<std::uint64_t> orbit;
    for (int i = 0; i < n; ++i) orbit.push_back(j.shifted(i).bits());
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return all_permutations(n).filtered([&](const Permutation& pi) {
        return std::binary_search(orbit.begin(), orbit.end(), cdes_set(pi.inverse()).bits());
    });
}

PermSet v_set(const Composition& gamma, int k) {
    const int n = gamma.total();
    if (k < 1 || k > n) throw std::invalid_argument("v_set position out of range");
    PermSet base = shuffle_set_last_star(gamma, gamma.size());
    std::vector<Permutation> out;
    for (int j = 0; j < n; ++j) {
        Permutation c = cn_power(n, j);
        for (const auto& pi : base) {
            Permutation rotated = c * pi;
            if (rotated(k) == n) out.push_back(rotated);
        }
    }
    return PermSet(n, std::move(out), /*merge_duplicates=*/true);
}

PermSet h_set(const Composition& gamma, int k) {
    const int n = gamma.total();
    if (k < 1 || k > n) throw std::invalid_argument("h_set position out of range");
    PermSet base = shuffle_set_last_star(gamma, gamma.size());
    std::vector<Permutation> out;
    for (int j = 0; j < n; ++j) {
        Permutation c = cn_power(n, j);
        for (const auto& pi : base) {
            Permutation rotated = pi * c;
            if (rotated(k) == n) out.push_back(rotated);
        }
    }
    return PermSet(n, std::move(out), /*merge_duplicates=*/true);
}

bool contains_pattern(const Permutation& pi, const Permutation& pattern) {
    const int n = pi.size(), m = pattern.size();
    if (m > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(m));
    // backtracking over index tuples, pruned by the pattern's relative order
    std::function<bool(int, int)> rec = [&](int depth, int start) {
        if (depth == m) return true;
        for (int i = start; i <= n - (m - depth - 1); ++i) {
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                bool want = pattern(d + 1) < pattern(depth + 1);
                bool have = pi(idx[static_cast<std::size_t>(d)]) < pi(i);
                ok = (want == have);
            }
            if (!ok) continue;
            idx[static_cast<std::size_t>(depth)] = i;
            if (rec(depth + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 1);
}

}  // namespace cycdes
