#include "waring/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <utility>

#include "waring/errors.hpp"

namespace waring {

namespace {

constexpr int max_parse_degree = 64;

// Sparse bivariate polynomial: (x power, y power) -> coefficient.
using Poly = std::map<std::pair<int, int>, Complex>;

Poly constant(Complex c) { return {{{0, 0}, c}}; }

Poly add(const Poly& a, const Poly& b, double sign) {
    Poly out = a;
    for (const auto& [key, coeff] : b) out[key] += sign * coeff;
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            const int px = ka.first + kb.first;
            const int py = ka.second + kb.second;
            if (px + py > max_parse_degree) throw InputError("expression degree exceeds the parser limit");
            out[{px, py}] += ca * cb;
        }
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Poly parse() {
        Poly p = expression();
        skip_space();
        if (pos_ != text_.size()) throw InputError("unexpected trailing input at position " + std::to_string(pos_));
        return p;
    }

private:
    Poly expression() {
        skip_space();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1.0 : 1.0;
        Poly acc = multiply(constant(Complex(sign)), term());
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            take();
            acc = add(acc, term(), c == '-' ? -1.0 : 1.0);
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            skip_space();
            const char c = peek();
            if (c == '*') {
                take();
                acc = multiply(acc, power());
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'i' || std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                acc = multiply(acc, power()); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Poly power() {
        Poly base = atom();
        skip_space();
        if (peek() != '^') return base;
        take();
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw InputError("exponent must be a non-negative integer");
        const long exponent = std::strtol(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
        if (exponent > max_parse_degree) throw InputError("exponent exceeds the parser limit");
        Poly acc = constant(Complex(1.0));
        for (long e = 0; e < exponent; ++e) acc = multiply(acc, base);
        return acc;
    }

    Poly atom() {
        skip_space();
        const char c = peek();
        if (c == '(') {
            take();
            Poly inner = expression();
            skip_space();
            if (peek() != ')') throw InputError("missing closing parenthesis");
            take();
            return inner;
        }
        if (c == 'x') {
            take();
            return {{{1, 0}, Complex(1.0)}};
        }
        if (c == 'y') {
            take();
            return {{{0, 1}, Complex(1.0)}};
        }
        if (c == 'i') {
            take();
            return constant(Complex(0.0, 1.0));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (c == '\0') throw InputError("unexpected end of expression");
        throw InputError(std::string("unexpected character '") + c + "' at position " + std::to_string(pos_));
    }

    Poly number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = mark; // not an exponent after all
            }
        }
        const std::string digits = text_.substr(start, pos_ - start);
        if (digits.empty() || digits == ".") throw InputError("malformed numeric literal");
        const double value = std::strtod(digits.c_str(), nullptr);
        if (pos_ < text_.size() && text_[pos_] == 'i') {
            ++pos_;
            return constant(Complex(0.0, value));
        }
        return constant(Complex(value));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

BinaryForm parse_inline_form(const std::string& text) {
    Poly p = Parser(text).parse();

    // Drop exact-zero monomials, then require homogeneity.
    for (auto it = p.begin(); it != p.end();)
        it = (it->second == Complex(0.0)) ? p.erase(it) : std::next(it);
    if (p.empty()) return BinaryForm(); // zero form

    int degree = -1;
    for (const auto& [key, coeff] : p) {
        const int total = key.first + key.second;
        if (degree < 0) degree = total;
        if (total != degree)
            throw InputError("expression is not homogeneous: monomials of degree " +
                             std::to_string(degree) + " and " + std::to_string(total));
    }

    std::vector<Complex> m(static_cast<std::size_t>(degree) + 1, Complex(0.0));
    for (const auto& [key, coeff] : p) m[static_cast<std::size_t>(key.first)] = coeff;
    return BinaryForm::from_monomial_coeffs(m);
}

} // namespace waring
