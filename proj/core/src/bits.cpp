#include "ncode/bits.hpp"

#include <algorithm>

namespace ncode {

namespace {
std::uint64_t mask_for(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
}  // namespace

BitWord::BitWord(int n, std::uint64_t bits) : bits_(bits), n_(n) {
    if (n < 1 || n > 64) throw input_error("bit word length must be in [1, 64], got " + std::to_string(n));
    if (bits & ~mask_for(n)) throw input_error("bit pattern wider than declared length");
}

BitWord BitWord::from_string(std::string_view text) {
    if (text.empty()) throw input_error("empty bit string");
    BitWord w(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w.set(static_cast<int>(i), true);
        else if (text[i] != '0')
            throw input_error("bit string may contain only '0'/'1': \"" + std::string(text) + "\"");
    }
    return w;
}

void BitWord::set(int i, bool v) {
    if (i < 0 || i >= n_) throw input_error("bit index out of range");
    bits_ = v ? (bits_ | (1ull << i)) : (bits_ & ~(1ull << i));
}

BitWord BitWord::operator^(const BitWord& other) const {
    if (n_ != other.n_) throw input_error("length mismatch in word sum: " + std::to_string(n_) + " vs " +
                                          std::to_string(other.n_));
    BitWord r;
    r.n_ = n_;
    r.bits_ = bits_ ^ other.bits_;
    return r;
}

bool BitWord::operator<(const BitWord& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    // Textual lexicographic order: coordinate 1 (LSB here) is most significant,
    // so compare the bit-reversed masks.
    std::uint64_t a = bits_, b = other.bits_;
    for (int i = 0; i < n_; ++i) {
        bool ba = (a >> i) & 1u, bb = (b >> i) & 1u;
        if (ba != bb) return bb;
    }
    return false;
}

std::string BitWord::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

int hamming_weight(const BitWord& x) { return x.weight(); }

int hamming_distance(const BitWord& x, const BitWord& y) { return (x ^ y).weight(); }

BitWord cyclic_shift(const BitWord& x) {
    const int n = x.size();
    std::uint64_t b = x.raw();
    std::uint64_t shifted = ((b << 1) | (b >> (n - 1))) & mask_for(n);
    return BitWord(n, shifted);
}

BitWord reversed(const BitWord& x) {
    BitWord r(x.size());
    for (int i = 0; i < x.size(); ++i) r.set(x.size() - 1 - i, x.bit(i));
    return r;
}

int dot(const BitWord& x, const BitWord& y) {
    if (x.size() != y.size()) throw input_error("length mismatch in dot product");
    return std::popcount(x.raw() & y.raw()) & 1;
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
    if (rows < 1 || cols < 1 || cols > 64) throw input_error("matrix dimensions out of range");
}

BitMatrix BitMatrix::identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw input_error("matrix needs at least one row");
    BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw input_error("ragged matrix: row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " + std::to_string(rows[0].size()));
        m.set_row(static_cast<int>(r), BitWord::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitWord>& rows) {
    if (rows.empty()) throw input_error("matrix needs at least one row");
    BitMatrix m(static_cast<int>(rows.size()), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(static_cast<int>(r), rows[r]);
    return m;
}

void BitMatrix::set(int r, int c, bool v) {
    data_[r] = v ? (data_[r] | (1ull << c)) : (data_[r] & ~(1ull << c));
}

void BitMatrix::set_row(int r, const BitWord& w) {
    if (w.size() != cols_) throw input_error("row length mismatch");
    data_[r] = w.raw();
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::uint64_t r) { return r == 0; });
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c)) t.set(c, r, true);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (cols_ != other.rows_)
        throw input_error("matrix product dimension mismatch: " + std::to_string(cols_) + " vs " +
                          std::to_string(other.rows_));
    BitMatrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (int i = 0; i < cols_; ++i)
            if (at(r, i)) acc ^= other.data_[i];
        out.data_[r] = acc;
    }
    return out;
}

BitWord BitMatrix::apply(const BitWord& x) const {
    if (x.size() != cols_)
        throw input_error("matrix-vector dimension mismatch: " + std::to_string(cols_) + " columns vs word of length " +
                          std::to_string(x.size()));
    BitWord y(rows_);
    for (int r = 0; r < rows_; ++r) y.set(r, std::popcount(data_[r] & x.raw()) & 1);
    return y;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_) throw input_error("hconcat row mismatch");
    BitMatrix m(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) m.data_[r] = a.data_[r] | (b.data_[r] << a.cols_);
    return m;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_) throw input_error("vconcat column mismatch");
    BitMatrix m(a.rows_ + b.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r) m.data_[r] = a.data_[r];
    for (int r = 0; r < b.rows_; ++r) m.data_[a.rows_ + r] = b.data_[r];
    return m;
}

int BitMatrix::rank() const { return static_cast<int>(rref().second.size()); }

std::pair<BitMatrix, std::vector<int>> BitMatrix::rref() const {
    BitMatrix m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int r = row; r < rows_; ++r)
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.data_[row], m.data_[pivot]);
        for (int r = 0; r < rows_; ++r)
            if (r != row && m.at(r, col)) m.data_[r] ^= m.data_[row];
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

BitMatrix BitMatrix::null_space(bool rightmost_pivots) const {
    BitMatrix m = *this;
    std::vector<int> pivots;
    if (!rightmost_pivots) {
        auto [reduced, p] = rref();
        m = std::move(reduced);
        pivots = std::move(p);
    } else {
        int row = 0;
        for (int col = cols_ - 1; col >= 0 && row < rows_; --col) {
            int pivot = -1;
            for (int r = row; r < rows_; ++r)
                if (m.at(r, col)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(m.data_[row], m.data_[pivot]);
            for (int r = 0; r < rows_; ++r)
                if (r != row && m.at(r, col)) m.data_[r] ^= m.data_[row];
            pivots.push_back(col);
            ++row;
        }
    }
    std::vector<int> free_cols;
    {
        std::vector<bool> is_pivot(cols_, false);
        for (int p : pivots) is_pivot[p] = true;
        for (int c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
    }
    if (free_cols.empty()) throw input_error("null space is trivial");
    BitMatrix basis(static_cast<int>(free_cols.size()), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        int fc = free_cols[i];
        basis.set(static_cast<int>(i), fc, true);
        for (std::size_t p = 0; p < pivots.size(); ++p)
            if (m.at(static_cast<int>(p), fc)) basis.set(static_cast<int>(i), pivots[p], true);
    }
    return basis;
}

BitMatrix BitMatrix::inverted() const {
    if (rows_ != cols_) throw input_error("only square matrices can be inverted");
    BitMatrix aug = hconcat(*this, identity(rows_));
    auto [m, pivots] = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_) throw input_error("matrix is singular");
    for (int i = 0; i < rows_; ++i)
        if (pivots[i] != i) throw input_error("matrix is singular");
    BitMatrix inv(rows_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < rows_; ++c) inv.set(r, c, m.at(r, cols_ + c));
    return inv;
}

BitMatrix BitMatrix::select_columns(const std::vector<int>& cols) const {
    if (cols.empty()) throw input_error("empty column selection");
    BitMatrix out(rows_, static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] < 0 || cols[i] >= cols_) throw input_error("column index out of range");
        for (int r = 0; r < rows_; ++r) out.set(r, static_cast<int>(i), at(r, cols[i]));
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (int r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        if (r + 1 < rows_) s += '\n';
    }
    return s;
}

BitWord operator*(const BitWord& rowvec, const BitMatrix& m) {
    if (rowvec.size() != m.rows()) throw input_error("vector-matrix dimension mismatch");
    std::uint64_t acc = 0;
    for (int i = 0; i < m.rows(); ++i)
        if (rowvec.bit(i)) acc ^= m.row(i).raw();
    return BitWord(m.cols(), acc);
}

}  // namespace ncode
