#include "ncode/poly.hpp"

#include <algorithm>
#include <cctype>

namespace ncode {

BinPoly::BinPoly(std::vector<std::uint8_t> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    for (auto v : c_)
        if (v > 1) throw input_error("polynomial coefficients must be 0 or 1");
    strip();
}

void BinPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BinPoly BinPoly::one() { return BinPoly({1}); }

BinPoly BinPoly::xn_plus_1(int n) {
    if (n < 1) throw input_error("x^n + 1 needs n >= 1");
    std::vector<std::uint8_t> c(n + 1, 0);
    c[0] = c[n] = 1;
    return BinPoly(std::move(c));
}

BinPoly BinPoly::from_string(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw input_error("empty polynomial string");
    std::vector<std::uint8_t> coeffs;
    auto bump = [&coeffs](int deg) {
        if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, 0);
        coeffs[deg] ^= 1;  // repeated terms cancel over GF(2)
    };
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw input_error("malformed polynomial: \"" + std::string(text) + "\"");
        if (term == "0") continue;
        if (term == "1") {
            bump(0);
        } else if (term == "x") {
            bump(1);
        } else if (term.rfind("x^", 0) == 0) {
            const std::string num = term.substr(2);
            if (num.empty() || !std::all_of(num.begin(), num.end(),
                                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw input_error("malformed exponent in \"" + std::string(text) + "\"");
            bump(std::stoi(num));
        } else {
            throw input_error("unrecognized polynomial term \"" + term + "\"");
        }
    }
    return BinPoly(std::move(coeffs));
}

BinPoly BinPoly::operator+(const BinPoly& other) const {
    std::vector<std::uint8_t> c(std::max(c_.size(), other.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (i < c_.size() ? c_[i] : 0) ^ (i < other.c_.size() ? other.c_[i] : 0);
    return BinPoly(std::move(c));
}

BinPoly BinPoly::operator*(const BinPoly& other) const {
    if (is_zero() || other.is_zero()) return BinPoly();
    std::vector<std::uint8_t> c(c_.size() + other.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i])
            for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] ^= other.c_[j];
    return BinPoly(std::move(c));
}

BitWord BinPoly::to_word(int n) const {
    if (degree() >= n) throw input_error("polynomial degree exceeds word length");
    BitWord w(n);
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (c_[i]) w.set(i, true);
    return w;
}

std::string BinPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!c_[i]) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'x';
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& num, const BinPoly& den) {
    if (den.is_zero()) throw input_error("division by the zero polynomial");
    std::vector<std::uint8_t> rem(num.coeffs());
    const auto& d = den.coeffs();
    const int dd = den.degree();
    if (num.degree() < dd) return {BinPoly(), num};
    std::vector<std::uint8_t> quo(num.degree() - dd + 1, 0);
    for (int i = num.degree(); i >= dd; --i) {
        if (!rem[i]) continue;
        quo[i - dd] = 1;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] ^= d[j];
    }
    return {BinPoly(std::move(quo)), BinPoly(std::move(rem))};
}

bool poly_divides(const BinPoly& den, const BinPoly& num) {
    return poly_divmod(num, den).second.is_zero();
}

}  // namespace ncode
