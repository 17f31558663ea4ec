#include "cycdes/class_spec.hpp"

#include <charconv>
#include <stdexcept>

namespace cycdes {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PermSet parse() {
        PermSet out = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("class-spec parse error at offset " + std::to_string(pos_) +
                                    ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int parse_int() {
        skip_ws();
        int value = 0;
        auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) fail("expected integer");
        pos_ = static_cast<std::size_t>(p - text_.data());
        return value;
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0))
            ++pos_;
        if (pos_ == start) fail("expected a class name");
        return std::string(text_.substr(start, pos_ - start));
    }

    Mask parse_mask(int n) {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size() || text_[pos_] != '{') fail("expected '{'");
        std::size_t depth = 0;
        while (pos_ < text_.size()) {
            if (text_[pos_] == '{') ++depth;
            if (text_[pos_] == '}' && --depth == 0) { ++pos_; break; }
            ++pos_;
        }
        if (depth != 0) fail("unclosed '{'");
        return Mask::parse(text_.substr(start, pos_ - start), n);
    }

    PermSet parse_spec() {
        std::string name = parse_name();
        if (name == "HC" || name == "VC") {
            expect('[');
            PermSet inner = parse_spec();
            expect(']');
            return name == "HC" ? horizontal_closure(inner, inner.n() + 1)
                                : vertical_closure(inner, inner.n() + 1);
        }
        expect('(');
        PermSet out = parse_atom(name);
        expect(')');
        return out;
    }

    PermSet parse_atom(const std::string& name) {
        if (name == "D" || name == "Dinv") {
            int n = parse_int();
            expect(',');
            Mask j = parse_mask(n < 2 ? 0 : n - 1);
            return name == "D" ? descent_class(n, j) : inverse_descent_class(n, j);
        }
        if (name == "S") {
            Composition gamma;
            gamma.weak = true;
            int last_star = 0, first_star = 0;
            while (true) {
                skip_ws();
                bool leading = eat('*');
                int part = parse_int();
                bool trailing = eat('*');
                gamma.parts.push_back(part);
                if (leading) {
                    if (first_star) fail("multiple first-entry stars");
                    first_star = gamma.size();
                }
                if (trailing) {
                    if (last_star) fail("multiple last-entry stars");
                    last_star = gamma.size();
                }
                if (!eat(',')) break;
            }
            if (first_star && last_star) fail("at most one star per specifier");
            if (first_star) return shuffle_set_first_star(gamma, first_star);
            if (last_star) return shuffle_set_last_star(gamma, last_star);
            return shuffle_set(gamma);
        }
        if (name == "L") return left_unimodal(parse_int());
        if (name == "R") return right_unimodal(parse_int());
        if (name == "Arc") return arc_permutations(parse_int());
        if (name == "Cnk") {
            int n = parse_int();
            expect(',');
            int k = parse_int();
            return cdes_inverse_count_class(n, k);
        }
        if (name == "Orbit") {
            int n = parse_int();
            expect(',');
            Mask j = parse_mask(n);
            return orbit_class(n, j);
        }
        fail("unknown class name '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PermSet parse_class_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace cycdes
