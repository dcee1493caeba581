#ifndef NCODE_LINEAR_CODE_HPP
#define NCODE_LINEAR_CODE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncode/bits.hpp"
#include "ncode/poly.hpp"

namespace ncode {

enum class CodeFamily { General, Repetition, ParityCheck, Hamming, Cyclic };

std::string to_string(CodeFamily f);

enum class SelfOrthogonality { None, SelfOrthogonal, SelfDual };

struct Capability {
    int d = 0;  // minimum distance
    int t = 0;  // correctable errors, floor((d-1)/2)
    int s = 0;  // additional detectable errors, d - 2t
};

/// Codeword enumeration refuses codes with more than 2^20 words.
inline constexpr int kEnumerationCapK = 20;

/// An (n, k) binary linear block code.
///
/// The stored generator keeps the shape it was constructed with (standard
/// form, cyclic band form, or an arbitrary full-rank matrix); encoding always
/// uses it, so worked examples reproduce exactly. Message recovery goes
/// through a cached information set, which reduces to "first k coordinates"
/// for standard-form codes.
class LinearCode {
  public:
    static LinearCode from_parity_standard(const BitMatrix& A);
    static LinearCode from_generator_standard(const BitMatrix& B);
    /// Any full-rank generator; rows are kept as the encoding map.
    static LinearCode from_generator(const BitMatrix& G);
    /// Any parity-check matrix with independent rows; G is its null space.
    static LinearCode from_parity(const BitMatrix& H);

    int n() const;
    int k() const;
    const BitMatrix& generator() const;
    const BitMatrix& parity() const;
    CodeFamily family() const;
    /// Generator polynomial; only present for Cyclic-family codes.
    const BinPoly& gen_poly() const;

    BitWord encode(const BitWord& message) const;
    /// Inverse of encode on codewords.
    BitWord message_of(const BitWord& codeword) const;
    bool contains(const BitWord& word) const;

    /// All 2^k codewords, sorted; cached after the first call.
    const std::vector<BitWord>& codewords() const;
    int min_distance() const;
    Capability capability() const;

    bool is_cyclic() const;
    bool is_reversible() const;
    SelfOrthogonality self_orthogonality() const;
    /// h = (x^n + 1) / g for cyclic codes.
    BinPoly check_poly() const;

    /// Equality of codeword sets (not of matrices); no enumeration needed.
    static bool same_codewords(const LinearCode& a, const LinearCode& b);

    bool operator==(const LinearCode& other) const { return same_codewords(*this, other); }

  private:
    struct Body;
    explicit LinearCode(std::shared_ptr<const Body> body) : body_(std::move(body)) {}
    static LinearCode make(BitMatrix G, BitMatrix H, CodeFamily family, std::optional<BinPoly> gen);
    std::shared_ptr<const Body> body_;

    friend LinearCode dual(const LinearCode&);
    friend LinearCode repetition_code(int);
    friend LinearCode parity_check_code(int);
    friend LinearCode hamming_code(int, const BitMatrix&);
    friend LinearCode cyclic_from_poly(const BinPoly&, int);
};

LinearCode dual(const LinearCode& code);

LinearCode repetition_code(int n);
LinearCode parity_check_code(int n);
/// Binary Hamming code of parameter m from an m x (2^m - 1) check matrix whose
/// columns are exactly the nonzero m-bit vectors, in any order.
LinearCode hamming_code(int m, const BitMatrix& H);
/// Same, with columns in numeric order (column j reads j+1 in binary, top bit first).
LinearCode hamming_code(int m);
/// Cyclic code of length n generated by g, with g | x^n + 1.
LinearCode cyclic_from_poly(const BinPoly& g, int n);

}  // namespace ncode

#endif
