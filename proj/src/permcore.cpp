#include "cycdes/permcore.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cycdes {

void Mask::check_n(int n) {
    if (n < 0 || n > kMaxN)
        throw std::invalid_argument("mask ambient size out of range: " + std::to_string(n));
}

Mask::Mask(int n, std::initializer_list<int> elems) : n_(n) {
    check_n(n);
    for (int e : elems) insert(e);
}

Mask Mask::from_bits(int n, std::uint64_t bits) {
    check_n(n);
    Mask m(n);
    if (n < kMaxN && (bits >> n) != 0)
        throw std::invalid_argument("mask bits exceed ambient size");
    m.bits_ = bits;
    return m;
}

Mask Mask::full(int n) {
    check_n(n);
    Mask m(n);
    m.bits_ = (n == kMaxN) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return m;
}

int Mask::count() const { return __builtin_popcountll(bits_); }

bool Mask::contains(int i) const {
    return i >= 1 && i <= n_ && (bits_ >> (i - 1)) & 1u;
}

void Mask::insert(int i) {
    if (i < 1 || i > n_)
        throw std::invalid_argument("mask element " + std::to_string(i) + " outside [n]");
    bits_ |= std::uint64_t{1} << (i - 1);
}

void Mask::erase(int i) {
    if (i >= 1 && i <= n_) bits_ &= ~(std::uint64_t{1} << (i - 1));
}

bool Mask::is_subset_of(const Mask& other) const {
    return (bits_ & ~other.bits_) == 0;
}

Mask Mask::shifted(int j) const {
    Mask out(n_);
    if (n_ == 0) return out;
    int r = ((j % n_) + n_) % n_;
    for (int e : elements()) {
        int v = e + r;
        if (v > n_) v -= n_;
        out.insert(v);
    }
    return out;
}

std::vector<int> Mask::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string Mask::str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    s += '}';
    return s;
}

Mask Mask::parse(std::string_view text, int n) {
    auto fail = [&](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("mask parse error at offset " + std::to_string(pos) + ": " + what);
    };
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '{') fail(i, "expected '{'");
    ++i;
    Mask m(n);
    skip_ws();
    if (i < text.size() && text[i] == '}') { ++i; skip_ws(); if (i != text.size()) fail(i, "trailing input"); return m; }
    while (true) {
        skip_ws();
        int value = 0;
        auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{}) fail(i, "expected integer");
        i = static_cast<std::size_t>(p - text.data());
        m.insert(value);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        if (i < text.size() && text[i] == '}') { ++i; break; }
        fail(i, "expected ',' or '}'");
    }
    skip_ws();
    if (i != text.size()) fail(i, "trailing input");
    return m;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = size();
    if (n > kMaxN) throw std::invalid_argument("permutation size exceeds " + std::to_string(kMaxN));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("word is not a bijection on [n]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("size mismatch in permutation product");
    std::vector<int> w(word_.size());
    for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
    return Permutation(std::move(w));
}

int Permutation::position_of_max() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) == size()) return i;
    throw std::logic_error("empty permutation has no maximum");
}

std::string Permutation::str() const {
    std::string s;
    const bool commas = size() >= 10;
    for (int i = 1; i <= size(); ++i) {
        if (commas && i > 1) s += ',';
        s += std::to_string((*this)(i));
    }
    return s;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t i = 0;
        while (i < text.size()) {
            int value = 0;
            auto [p, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{})
                throw std::invalid_argument("permutation parse error at offset " + std::to_string(i));
            i = static_cast<std::size_t>(p - text.data());
            w.push_back(value);
            if (i < text.size()) {
                if (text[i] != ',')
                    throw std::invalid_argument("permutation parse error at offset " + std::to_string(i));
                ++i;
            }
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] < '1' || text[i] > '9')
                throw std::invalid_argument("permutation parse error at offset " + std::to_string(i));
            w.push_back(text[i] - '0');
        }
    }
    return Permutation(std::move(w));
}

Permutation cn_power(int n, long long j) {
    if (n < 1) throw std::invalid_argument("cn_power needs n >= 1");
    long long r = ((j % n) + n) % n;
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        long long v = i + r;
        if (v > n) v -= n;
        w[static_cast<std::size_t>(i - 1)] = static_cast<int>(v);
    }
    return Permutation(std::move(w));
}

Mask des_set(const Permutation& pi) {
    const int n = pi.size();
    Mask d(n == 0 ? 0 : n - 1);
    for (int i = 1; i < n; ++i)
        if (pi(i) > pi(i + 1)) d.insert(i);
    return d;
}

Mask cdes_set(const Permutation& pi) {
    const int n = pi.size();
    if (n < 2) throw std::domain_error("cdes_set needs n >= 2");
    Mask d(n);
    for (int i = 1; i < n; ++i)
        if (pi(i) > pi(i + 1)) d.insert(i);
    if (pi(n) > pi(1)) d.insert(n);
    return d;
}

Mask shift_mask(const Mask& d, int j) { return d.shifted(j); }

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ')';
    return s;
}

Composition subset_to_composition(const Mask& j, int n) {
    if (j.n() > n - 1 || (!j.empty() && j.elements().back() > n - 1))
        throw std::invalid_argument("subset must lie in [n-1]");
    Composition gamma;
    int prev = 0;
    for (int e : j.elements()) {
        gamma.parts.push_back(e - prev);
        prev = e;
    }
    gamma.parts.push_back(n - prev);
    return gamma;
}

Mask composition_to_subset(const Composition& gamma) {
    const int n = gamma.total();
    Mask j(n == 0 ? 0 : n - 1);
    int acc = 0;
    for (std::size_t i = 0; i + 1 < gamma.parts.size(); ++i) {
        if (gamma.parts[i] < 1)
            throw std::invalid_argument("composition_to_subset needs positive parts");
        acc += gamma.parts[i];
        j.insert(acc);
    }
    return j;
}

}  // namespace cycdes
