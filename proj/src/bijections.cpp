#include "cycdes/bijections.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cycdes {

std::string Word::str() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (alphabet > 9 && i) s += ',';
        s += std::to_string(letters[i]);
    }
    return s;
}

namespace {

void check_binary(const Word& w) {
    for (int l : w.letters)
        if (l != 1 && l != 2) throw std::invalid_argument("word must be over {1,2}");
}

// f on letters[from..to) in place
void apply_f_span(std::vector<int>& letters, std::size_t from, std::size_t to) {
    std::vector<bool> fixed(letters.size(), false);
    for (std::size_t i = from; i + 1 < to; ++i)
        if (letters[i] == 2 && letters[i + 1] == 1) {
            fixed[i] = fixed[i + 1] = true;
            ++i;
        }
    std::size_t i = from;
    while (i < to) {
        if (fixed[i]) { ++i; continue; }
        std::size_t j = i;
        int ones = 0, twos = 0;
        while (j < to && !fixed[j]) {
            if (letters[j] == 1) ++ones;
            else ++twos;
            ++j;
        }
        // maximal unfixed run: necessarily of the form 1^r 2^s; swap r and s
        for (std::size_t k = i; k < j; ++k)
            letters[k] = (k - i < static_cast<std::size_t>(twos)) ? 1 : 2;
        i = j;
    }
}

}  // namespace

Word word_f(const Word& w) {
    check_binary(w);
    Word out = w;
    apply_f_span(out.letters, 0, out.letters.size());
    return out;
}

Word word_f_range(const Word& w, int p, int q) {
    check_binary(w);
    if (p < 1 || q > w.size())
        throw std::invalid_argument("factor range out of bounds");
    Word out = w;
    if (p > q) return out;  // empty factor
    apply_f_span(out.letters, static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q));
    return out;
}

Word word_f_letters(const Word& w, int j) {
    if (j < 1 || j + 1 > w.alphabet) throw std::invalid_argument("letter pair out of range");
    std::vector<std::size_t> positions;
    std::vector<int> sub;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (w.letters[i] == j || w.letters[i] == j + 1) {
            positions.push_back(i);
            sub.push_back(w.letters[i] == j ? 1 : 2);
        }
    }
    apply_f_span(sub, 0, sub.size());
    Word out = w;
    for (std::size_t k = 0; k < positions.size(); ++k)
        out.letters[positions[k]] = sub[k] == 1 ? j : j + 1;
    return out;
}

Word encode_shuffle(const Permutation& pi, const Composition& gamma) {
    if (!in_shuffle_set(pi, gamma))
        throw std::invalid_argument("permutation is not in the given shuffle set");
    std::vector<int> block_of(static_cast<std::size_t>(gamma.total()) + 1, 0);
    int acc = 0, block = 0;
    for (int p : gamma.parts) {
        ++block;
        for (int v = acc + 1; v <= acc + p; ++v) block_of[static_cast<std::size_t>(v)] = block;
        acc += p;
    }
    Word w;
    w.alphabet = gamma.size();
    for (int i = 1; i <= pi.size(); ++i)
        w.letters.push_back(block_of[static_cast<std::size_t>(pi(i))]);
    return w;
}

Permutation decode_shuffle(const Word& w, const Composition& gamma) {
    std::vector<int> next(gamma.parts.size() + 1, 0);
    int acc = 0;
    for (std::size_t b = 0; b < gamma.parts.size(); ++b) {
        next[b + 1] = acc + 1;
        acc += gamma.parts[b];
    }
    std::vector<int> word;
    for (int l : w.letters) {
        if (l < 1 || l > gamma.size()) throw std::invalid_argument("letter outside composition");
        word.push_back(next[static_cast<std::size_t>(l)]++);
    }
    return Permutation(std::move(word));
}

std::vector<int> staircase_reduced_word(int t) {
    std::vector<int> word;
    for (int row = 1; row < t; ++row)
        for (int j = row; j >= 1; --j) word.push_back(j);
    return word;
}

Permutation multi_shuffle_phi(const Permutation& pi, const Composition& gamma,
                              const std::optional<std::vector<int>>& reduced_word) {
    const int t = gamma.size();
    Word w = encode_shuffle(pi, gamma);
    std::vector<int> word = reduced_word ? *reduced_word : staircase_reduced_word(t);
    if (static_cast<int>(word.size()) != t * (t - 1) / 2)
        throw std::invalid_argument("reduced word for t...21 must have binomial(t,2) letters");
    {
        std::vector<int> prod(static_cast<std::size_t>(t));
        std::iota(prod.begin(), prod.end(), 1);
        for (int j : word) {
            if (j < 1 || j >= t) throw std::invalid_argument("reduced word letter out of range");
            std::swap(prod[static_cast<std::size_t>(j - 1)], prod[static_cast<std::size_t>(j)]);
        }
        for (int i = 0; i < t; ++i)
            if (prod[static_cast<std::size_t>(i)] != t - i)
                throw std::invalid_argument("word does not decompose the decreasing permutation");
    }
    // the composed map f_{j_1} o ... o f_{j_r} applies the rightmost first
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = word_f_letters(w, *it);
    Composition reversed;
    reversed.parts.assign(gamma.parts.rbegin(), gamma.parts.rend());
    reversed.weak = gamma.weak;
    return decode_shuffle(w, reversed);
}

Permutation circledast(const Permutation& rho, const Permutation& sigma,
                       const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("compositions must have the same number of parts");
    if (!in_shuffle_set(rho, alpha) || !in_shuffle_set(sigma, beta))
        throw std::invalid_argument("factor outside its shuffle set");
    const int t = alpha.size();
    std::vector<int> pref_a(static_cast<std::size_t>(t) + 1, 0), pref_b(pref_a), pref_g(pref_a);
    for (int b = 1; b <= t; ++b) {
        pref_a[static_cast<std::size_t>(b)] = pref_a[static_cast<std::size_t>(b - 1)] + alpha.parts[static_cast<std::size_t>(b - 1)];
        pref_b[static_cast<std::size_t>(b)] = pref_b[static_cast<std::size_t>(b - 1)] + beta.parts[static_cast<std::size_t>(b - 1)];
        pref_g[static_cast<std::size_t>(b)] = pref_g[static_cast<std::size_t>(b - 1)] +
                                              alpha.parts[static_cast<std::size_t>(b - 1)] +
                                              beta.parts[static_cast<std::size_t>(b - 1)];
    }
    auto block_in = [&](const std::vector<int>& pref, int v) {
        int b = 1;
        while (pref[static_cast<std::size_t>(b)] < v) ++b;
        return b;
    };
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(rho.size() + sigma.size()));
    for (int i = 1; i <= rho.size(); ++i) {
        int v = rho(i);
        int b = block_in(pref_a, v);
        word.push_back(pref_g[static_cast<std::size_t>(b - 1)] + (v - pref_a[static_cast<std::size_t>(b - 1)]));
    }
    for (int i = 1; i <= sigma.size(); ++i) {
        int v = sigma(i);
        int b = block_in(pref_b, v);
        word.push_back(pref_g[static_cast<std::size_t>(b - 1)] + alpha.parts[static_cast<std::size_t>(b - 1)] +
                       (v - pref_b[static_cast<std::size_t>(b - 1)]));
    }
    return Permutation(std::move(word));
}

PermSet circledast_set(const PermSet& p, const PermSet& q,
                       const Composition& alpha, const Composition& beta) {
    std::vector<Permutation> out;
    out.reserve(p.size() * q.size());
    for (const Permutation& rho : p)
        for (const Permutation& sigma : q) out.push_back(circledast(rho, sigma, alpha, beta));
    return PermSet(alpha.total() + beta.total(), std::move(out));
}

namespace {

// The split value a of a two-run shuffle ending in n: [a] and [n]\[a] each
// appear left to right increasing. Unique on the bijection's domain; an
// ambiguity or absence is a domain violation.
int split_value(const Permutation& rho) {
    const int n = rho.size();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(rho(i))] = i;
    std::optional<int> found;
    for (int a = 1; a <= n - 1; ++a) {
        bool ok = true;
        for (int v = 1; v < a && ok; ++v) ok = pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v + 1)];
        for (int v = a + 1; v < n && ok; ++v) ok = pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v + 1)];
        if (!ok) continue;
        if (found) throw std::logic_error("ambiguous split value in two-run encoding");
        found = a;
    }
    if (!found) throw std::invalid_argument("rotation is not a shuffle of two increasing runs");
    return *found;
}

bool in_vertical_coset_of_inverse_class(const Permutation& pi, const Mask& j) {
    const int n = pi.size();
    for (int m = 0; m < n; ++m) {
        Permutation candidate = cn_power(n, -m) * pi;
        if (candidate(n) != n) continue;
        if (des_set(candidate.inverse()).bits() == j.bits()) return true;
    }
    return false;
}

}  // namespace

Permutation psi_singleton(const Permutation& pi, int j) {
    const int n = pi.size();
    if (j < 1 || j > n - 2) throw std::invalid_argument("psi_singleton needs 1 <= j <= n-2");
    Mask jm(n - 1);
    jm.insert(j);
    if (!in_vertical_coset_of_inverse_class(pi, jm))
        throw std::invalid_argument("permutation is not in C_n D^{-1}_{n-1,{j}}");

    const int k = pi.position_of_max();
    if (k == n) return pi;

    Permutation rho = pi * cn_power(n, k);  // ends with n
    const int a = split_value(rho);
    Word w;
    w.alphabet = 2;
    for (int i = 1; i <= n; ++i) w.letters.push_back(rho(i) <= a ? 1 : 2);

    Word wp = (w.letters[static_cast<std::size_t>(n - k - 1)] == 1)
                  ? word_f_range(w, n - k + 1, n - 1)
                  : word_f_range(w, 1, n - k - 1);
    Word wpp = word_f_range(wp, 1, n - 1);

    int ones = static_cast<int>(std::count(wpp.letters.begin(), wpp.letters.end(), 1));
    if (ones != j) throw std::logic_error("rearranged word does not split at j");
    Composition two_runs;
    two_runs.parts = {j, n - j};
    Permutation sigma = decode_shuffle(wpp, two_runs);
    return sigma * cn_power(n, -k);
}

Permutation arc_phi(const Permutation& pi) {
    const int n = pi.size();
    if (n < 2) throw std::invalid_argument("arc_phi needs n >= 2");
    const int j = pi.position_of_max();
    {
        // domain: some horizontal rotation fixes n and is left-unimodal on [n-1]
        Permutation a = pi * cn_power(n, j);
        std::vector<int> head(a.word().begin(), a.word().end() - 1);
        if (a(n) != n || !is_left_unimodal(Permutation(head)))
            throw std::invalid_argument("permutation is not in L_{n-1} C_n");
    }
    if (j == n) return pi;

    Mask des = des_set(pi);
    Mask cdes = cdes_set(pi);

    std::vector<int> out(static_cast<std::size_t>(n), 0);
    out[static_cast<std::size_t>(j - 1)] = n;

    int left_base = cdes.contains(n) ? 0 : n - j;
    Mask left_des(std::max(j - 2, 0));
    for (int e : des.elements())
        if (e <= j - 2) left_des.insert(e);
    Permutation left = left_unimodal_with_des(j - 1, left_des);
    for (int i = 1; i <= j - 1; ++i) out[static_cast<std::size_t>(i - 1)] = left_base + left(i);

    int right_base = cdes.contains(n) ? j - 1 : 0;
    Mask right_des(std::max(n - j - 1, 0));
    for (int e : des.elements())
        if (e > j) right_des.insert(e - j);
    Permutation right = right_unimodal_with_des(n - j, right_des);
    for (int i = 1; i <= n - j; ++i) out[static_cast<std::size_t>(j + i - 1)] = right_base + right(i);

    return Permutation(std::move(out));
}

Permutation arc_psi(const Permutation& sigma) {
    const int n = sigma.size();
    if (!is_arc(sigma)) throw std::invalid_argument("arc_psi needs an arc permutation");
    const int j = sigma.position_of_max() % n;  // j = 0 when n is last
    Permutation hat = sigma * cn_power(n, j);   // fixes n

    Mask des = des_set(hat);
    const int d = des.count();
    std::vector<int> word(static_cast<std::size_t>(n), 0);
    int falling = d;
    for (int e : des.elements()) word[static_cast<std::size_t>(e)] = falling--;
    int rising = d + 1;
    for (auto& v : word)
        if (v == 0) v = rising++;
    Permutation bar(std::move(word));
    if (bar(n) != n) throw std::logic_error("rearranged permutation does not fix n");

    return bar * cn_power(n, -j);
}

Tableau arc_to_syt(const Permutation& sigma) {
    const int n = sigma.size();
    if (n < 2) throw std::invalid_argument("arc_to_syt needs n >= 2");
    const int j = sigma.position_of_max() % n;
    Permutation tau = sigma * cn_power(n, j);
    if (tau(n) != n) throw std::logic_error("rotation does not end in n");

    Mask inv_des = des_set(tau.inverse());
    const int k = inv_des.count();
    Mask prefix(n - 1);
    for (int i = 1; i <= k; ++i) prefix.insert(i);
    if (inv_des.bits() != prefix.bits())
        throw std::invalid_argument("permutation is not in D^{-1}_{n-1,[k]} C_n for any k");
    if (k > n - 2) throw std::invalid_argument("inverse descent set too large for a near-hook");

    // first column: 1 and 1+Des(tau); northeast cell: n; arm: the rest
    Mask des = des_set(tau);
    std::vector<bool> in_column(static_cast<std::size_t>(n) + 1, false);
    in_column[1] = true;
    for (int e : des.elements()) in_column[static_cast<std::size_t>(e) + 1] = true;
    std::vector<int> column, arm;
    for (int v = 1; v <= n - 1; ++v)
        (in_column[static_cast<std::size_t>(v)] ? column : arm).push_back(v);
    if (static_cast<int>(column.size()) != k + 1)
        throw std::logic_error("descent count does not match the inverse prefix length");

    std::vector<int> entries;
    entries.push_back(n);             // northeast cell
    entries.push_back(column[0]);     // corner, necessarily 1
    for (int v : arm) entries.push_back(v);
    for (std::size_t i = 1; i < column.size(); ++i) entries.push_back(column[i]);
    Tableau base(SkewShape::near_hook(n, k), std::move(entries));
    return rotate_near_hook(base, j);
}

Tableau arc_perm_to_syt(const Permutation& pi) {
    return arc_to_syt(arc_psi(pi));
}

}  // namespace cycdes
