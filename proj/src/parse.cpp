#include "cuntz/parse.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace cuntz {

namespace {

struct Parser {
    const std::string& text;
    int N;
    std::size_t pos = 0;

    Parser(const std::string& t, int n) : text(t), N(n) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("syntax error at position " + std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool at_number() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    double parse_real() {
        skip_ws();
        double value = 0.0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected a number");
        pos += static_cast<std::size_t>(ptr - begin);
        return value;
    }

    // '(' real (+|-) real 'i' ')' followed by '*'.  Returns false (with the
    // position restored) when the text is not of this shape, so that the
    // caller can try a parenthesized factor instead.
    bool try_parse_complex_coeff(Cx& out) {
        const std::size_t saved = pos;
        if (!consume('(')) return false;
        double sign_re = 1.0;
        if (consume('-')) sign_re = -1.0;
        else consume('+');
        if (!at_number()) {
            pos = saved;
            return false;
        }
        const double re = parse_real();
        double sign_im;
        if (consume('+')) sign_im = 1.0;
        else if (consume('-')) sign_im = -1.0;
        else {
            pos = saved;
            return false;
        }
        if (!at_number()) {
            pos = saved;
            return false;
        }
        const double im = parse_real();
        if (!consume('i') || !consume(')') || !consume('*')) {
            pos = saved;
            return false;
        }
        out = Cx(sign_re * re, sign_im * im);
        return true;
    }

    Element parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("expected a factor");
        const char c = text[pos];
        if (c == 'I') {
            ++pos;
            return Element::identity(N);
        }
        if (c == 'S') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected a digit after 'S'");
            const int digit = text[pos] - '0';
            if (digit >= N)
                fail("generator digit " + std::to_string(digit) + " out of range for N=" +
                     std::to_string(N));
            ++pos;
            bool adj = false;
            if (pos + 1 < text.size() && text[pos] == '^' && text[pos + 1] == '*') {
                pos += 2;
                adj = true;
            }
            return adj ? Element::generator_adjoint(N, digit) : Element::generator(N, digit);
        }
        if (c == '(') {
            ++pos;
            Element inner = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        fail("expected 'S<digit>', 'I' or '('");
    }

    bool at_factor_start() {
        const char c = peek();
        return c == 'S' || c == 'I' || c == '(';
    }

    Element parse_term() {
        Cx coeff(1.0, 0.0);
        skip_ws();
        if (at_number()) {
            coeff = Cx(parse_real(), 0.0);
            if (!consume('*')) fail("expected '*' after coefficient");
        } else if (peek() == '(') {
            Cx z;
            if (try_parse_complex_coeff(z)) coeff = z;
        }
        Element product = parse_factor();
        while (at_factor_start()) product = product * parse_factor();
        return coeff * product;
    }

    Element parse_sum() {
        Element total(N);
        double sign = 1.0;
        if (consume('-')) sign = -1.0;
        else consume('+');
        total = total + Cx(sign, 0.0) * parse_term();
        while (true) {
            skip_ws();
            if (consume('+')) sign = 1.0;
            else if (consume('-')) sign = -1.0;
            else break;
            total = total + Cx(sign, 0.0) * parse_term();
        }
        return total;
    }

    Element run() {
        Element e = parse_sum();
        if (!eof()) fail("unexpected trailing input");
        return e;
    }
};

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string print_word(const Word& w) {
    if (w.is_identity()) return "I";
    std::string out;
    for (int d : w.left.digits) {
        if (!out.empty()) out += ' ';
        out += 'S';
        out += static_cast<char>('0' + d);
    }
    // S_m^* factors in application order: last digit of m first.
    for (auto it = w.right.digits.rbegin(); it != w.right.digits.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += 'S';
        out += static_cast<char>('0' + *it);
        out += "^*";
    }
    return out;
}

} // namespace

Element parse_element(const std::string& text, int N) {
    if (N < 2 || N > 10) throw InputError("parse_element: N must be between 2 and 10");
    Parser p(text, N);
    return p.run();
}

std::string format_complex(Cx z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::string out = "(";
    out += format_real(z.real());
    out += z.imag() < 0.0 ? "-" : "+";
    out += format_real(std::abs(z.imag()));
    out += "i)";
    return out;
}

std::string print_element(const Element& e) {
    if (e.is_zero()) return "0*I";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        Cx coeff = c;
        std::string sep;
        if (first) {
            if (coeff.imag() == 0.0 && coeff.real() < 0.0) {
                sep = "-";
                coeff = -coeff;
            }
        } else {
            if (coeff.imag() == 0.0 && coeff.real() < 0.0) {
                sep = " - ";
                coeff = -coeff;
            } else {
                sep = " + ";
            }
        }
        out += sep;
        if (coeff == Cx(1.0, 0.0)) {
            out += print_word(w);
        } else {
            out += format_complex(coeff);
            out += '*';
            out += print_word(w);
        }
        first = false;
    }
    return out;
}

} // namespace cuntz
