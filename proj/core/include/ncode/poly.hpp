#ifndef NCODE_POLY_HPP
#define NCODE_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncode/bits.hpp"

namespace ncode {

/// A polynomial over GF(2), coefficients stored ascending (index i = x^i).
/// Canonical form: no trailing zero coefficients; the zero polynomial is empty.
class BinPoly {
  public:
    BinPoly() = default;
    explicit BinPoly(std::vector<std::uint8_t> ascending_coeffs);
    /// Accepts "x^3+x^2+1", "x+1", "1", "0" (whitespace ignored).
    static BinPoly from_string(std::string_view text);
    static BinPoly one();
    /// x^n + 1, the characteristic-2 spelling of x^n - 1.
    static BinPoly xn_plus_1(int n);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is the sentinel -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) && c_[i]; }
    const std::vector<std::uint8_t>& coeffs() const { return c_; }

    BinPoly operator+(const BinPoly& other) const;
    BinPoly operator*(const BinPoly& other) const;
    bool operator==(const BinPoly& other) const = default;

    /// Coefficients padded to length n, as a bit word (coordinate i+1 = coeff of x^i).
    BitWord to_word(int n) const;

    /// Descending textual form, e.g. "x^3+x^2+1".
    std::string to_string() const;

  private:
    void strip();
    std::vector<std::uint8_t> c_;
};

/// Long division: num = den*q + r with deg(r) < deg(den).
std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& num, const BinPoly& den);
bool poly_divides(const BinPoly& den, const BinPoly& num);

}  // namespace ncode

#endif
