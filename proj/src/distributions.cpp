#include "cycdes/distributions.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cycdes {

long long GenDist::total() const {
    long long sum = 0;
    for (const auto& [term, count] : counts_) sum += count;
    return sum;
}

long long GenDist::count_of(const Mask& mask, int t) const {
    auto it = counts_.find(Term{mask.bits(), t});
    return it == counts_.end() ? 0 : it->second;
}

void GenDist::add(const Mask& mask, long long count, int t) {
    if (count == 0) return;
    if (track_t_ && (t < 1 || t > n_)) throw std::invalid_argument("t-exponent outside [n]");
    if (!track_t_ && t != 0) throw std::invalid_argument("t-exponent on an untracked distribution");
    auto [it, inserted] = counts_.try_emplace(Term{mask.bits(), t}, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0) counts_.erase(it);
    }
}

GenDist& GenDist::operator+=(const GenDist& other) {
    if (n_ != other.n_ || track_t_ != other.track_t_)
        throw std::invalid_argument("adding incompatible distributions");
    for (const auto& [term, count] : other.counts_) {
        auto [it, inserted] = counts_.try_emplace(term, count);
        if (!inserted) {
            it->second += count;
            if (it->second == 0) counts_.erase(it);
        }
    }
    return *this;
}

GenDist GenDist::scaled(long long factor) const {
    GenDist out(n_, track_t_);
    if (factor == 0) return out;
    for (const auto& [term, count] : counts_) out.counts_[term] = count * factor;
    return out;
}

std::string GenDist::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["track_t"] = track_t_;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [term, count] : counts_) {
        nlohmann::ordered_json entry;
        entry["mask"] = Mask::from_bits(n_, term.mask_bits).elements();
        if (track_t_) entry["t"] = term.t;
        entry["count"] = count;
        j["terms"].push_back(entry);
    }
    return j.dump();
}

GenDist cdes_dist(const PermSet& a, bool track_t) {
    if (a.n() < 2 && !a.empty()) throw std::domain_error("cdes_dist needs n >= 2");
    GenDist out(a.n(), track_t);
    for (const Permutation& pi : a)
        out.add(cdes_set(pi), 1, track_t ? pi.position_of_max() : 0);
    return out;
}

GenDist des_dist(const PermSet& a) {
    GenDist out(a.n() == 0 ? 0 : a.n() - 1, false);
    for (const Permutation& pi : a) out.add(des_set(pi));
    return out;
}

GenDist syt_des_dist(const SkewShape& shape) {
    GenDist out(shape.size() - 1, false);
    for (const Tableau& t : enumerate_syt(shape)) out.add(des_set_syt(t));
    return out;
}

FiberResult fibers_from_des(const GenDist& des, int n) {
    if (n < 2)
        return {std::nullopt, "no cyclic extension exists for n < 2", std::nullopt};
    if (n > 24) throw std::invalid_argument("fiber inversion is a desk-scale computation (n <= 24)");
    if (des.track_t() || des.n() > n - 1)
        return {std::nullopt, "input must be a Des distribution over subsets of [n-1]", std::nullopt};

    auto des_count = [&](std::uint64_t bits) {
        auto it = des.counts().find(GenDist::Term{bits, 0});
        return it == des.counts().end() ? 0LL : it->second;
    };

    GenDist fibers(n, false);
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::vector<long long> fiber_of(static_cast<std::size_t>(limit), 0);
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Mask j = Mask::from_bits(n, bits);
        auto elems = j.elements();
        const int t = static_cast<int>(elems.size());
        long long value = 0;
        for (int i = 0; i < t; ++i) {
            std::uint64_t diff = 0;
            for (int l = i + 1; l < t; ++l)
                diff |= std::uint64_t{1} << (elems[static_cast<std::size_t>(l)] - elems[static_cast<std::size_t>(i)] - 1);
            value += (i % 2 == 0 ? 1 : -1) * des_count(diff);
        }
        if (value < 0)
            return {std::nullopt, "negative fiber", j};
        fiber_of[static_cast<std::size_t>(bits)] = value;
        if (value > 0) fibers.add(j, value);
    }

    if (fibers.total() != des.total())
        return {std::nullopt, "fiber total differs from input total", Mask(n)};
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    for (std::uint64_t d = 0; d < top; ++d) {
        long long marginal = fiber_of[static_cast<std::size_t>(d)] + fiber_of[static_cast<std::size_t>(d | top)];
        if (marginal != des_count(d))
            return {std::nullopt, "extension marginal mismatch", Mask::from_bits(n, d)};
    }
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
        Mask j = Mask::from_bits(n, bits);
        if (fiber_of[static_cast<std::size_t>(bits)] != fiber_of[static_cast<std::size_t>(j.shifted(1).bits())])
            return {std::nullopt, "fibers not shift-invariant", j};
    }
    if (fiber_of[static_cast<std::size_t>(limit - 1)] != 0)
        return {std::nullopt, "nonzero fiber at the full set", Mask::full(n)};

    return {std::move(fibers), "", std::nullopt};
}

GenDist syt_cdes_dist(const SkewShape& shape) {
    const int n = shape.size();
    if (n < 2) throw std::domain_error("cyclic descents need n >= 2");
    if (shape.is_connected_ribbon())
        throw std::domain_error("connected ribbons admit no cyclic descent extension");
    if (shape.is_strip() && shape.component_count() >= 2) {
        GenDist out(n, false);
        for (const Tableau& t : enumerate_syt(shape)) out.add(cdes_strip(t));
        return out;
    }
    if (shape.near_hook_arm()) {
        GenDist out(n, false);
        for (const Tableau& t : enumerate_syt(shape)) out.add(cdes_near_hook(t));
        return out;
    }
    FiberResult fibers = fibers_from_des(syt_des_dist(shape), n);
    if (!fibers.ok())
        throw std::logic_error("fiber inversion failed on a non-ribbon shape: " + fibers.error);
    return *fibers.dist;
}

std::optional<std::pair<Mask, Mask>> cdes_invariance_witness(const PermSet& a) {
    GenDist dist = cdes_dist(a);
    for (const auto& [term, count] : dist.counts()) {
        Mask m = Mask::from_bits(a.n(), term.mask_bits);
        Mask shifted = m.shifted(1);
        if (dist.count_of(shifted) != count) return std::make_pair(m, shifted);
    }
    return std::nullopt;
}

bool is_cdes_invariant(const PermSet& a) {
    if (a.n() < 2 && !a.empty()) throw std::domain_error("is_cdes_invariant needs n >= 2");
    return !cdes_invariance_witness(a).has_value();
}

}  // namespace cycdes
