#ifndef NCODE_BITS_HPP
#define NCODE_BITS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncode/errors.hpp"

namespace ncode {

/// A fixed-length vector over GF(2). Coordinate 1 is the leftmost bit of the
/// textual form and is stored in the least significant bit. Lengths up to 64.
class BitWord {
  public:
    BitWord() = default;
    explicit BitWord(int n, std::uint64_t bits = 0);
    static BitWord from_string(std::string_view text);

    int size() const { return n_; }
    bool bit(int i) const { return (bits_ >> i) & 1u; }
    void set(int i, bool v);
    std::uint64_t raw() const { return bits_; }

    bool is_zero() const { return bits_ == 0; }
    int weight() const { return std::popcount(bits_); }

    BitWord operator^(const BitWord& other) const;
    bool operator==(const BitWord& other) const = default;
    /// Lexicographic order on the textual form ("0001" < "0100").
    bool operator<(const BitWord& other) const;

    std::string to_string() const;

  private:
    std::uint64_t bits_ = 0;
    int n_ = 0;
};

int hamming_weight(const BitWord& x);
int hamming_distance(const BitWord& x, const BitWord& y);
/// Right rotation by one: (a1,...,an) -> (an,a1,...,a(n-1)).
BitWord cyclic_shift(const BitWord& x);
BitWord reversed(const BitWord& x);
/// Mod-2 dot product.
int dot(const BitWord& x, const BitWord& y);

/// A rectangular matrix over GF(2), stored as row bit masks.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    static BitMatrix identity(int n);
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix from_rows(const std::vector<BitWord>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool at(int r, int c) const { return (data_[r] >> c) & 1u; }
    void set(int r, int c, bool v);
    BitWord row(int r) const { return BitWord(cols_, data_[r]); }
    void set_row(int r, const BitWord& w);

    bool is_zero() const;
    bool operator==(const BitMatrix& other) const = default;

    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& other) const;
    /// y = M x (x as a column), returned as a word of length rows().
    BitWord apply(const BitWord& x) const;

    /// Horizontal concatenation (A | B).
    static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
    /// Vertical stack.
    static BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);

    int rank() const;
    /// Reduced row echelon form; pivot columns in order.
    std::pair<BitMatrix, std::vector<int>> rref() const;
    /// Basis of {x : M x = 0}, one vector per row. With `rightmost_pivots`
    /// the bound variables are chosen from the right, so the free (identity)
    /// columns sit as far left as possible; (A | I) then yields (I | A^T).
    BitMatrix null_space(bool rightmost_pivots = false) const;
    /// Inverse of a square invertible matrix.
    BitMatrix inverted() const;
    /// Keep the given columns, in the given order.
    BitMatrix select_columns(const std::vector<int>& cols) const;

    std::string to_string() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint64_t> data_;
};

BitWord operator*(const BitWord& rowvec, const BitMatrix& m);

}  // namespace ncode

#endif
