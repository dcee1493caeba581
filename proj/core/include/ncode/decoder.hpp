#ifndef NCODE_DECODER_HPP
#define NCODE_DECODER_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "ncode/linear_code.hpp"

namespace ncode {

/// S(y) = H y^T; zero exactly on codewords.
BitWord syndrome(const LinearCode& code, const BitWord& y);

/// How a coset leader is picked among members of equal minimum weight.
/// EarliestSupport takes the pattern whose error positions come first in
/// left-to-right order (the order the classic tables are built in);
/// LexSmallest takes the smallest bit string.
enum class TiePolicy { EarliestSupport, LexSmallest };

inline constexpr int kStandardArrayCap = 20;  // at most 2^20 cosets

/// The coset-leader table of one code, keyed by syndrome.
class StandardArray {
  public:
    StandardArray(LinearCode code, TiePolicy policy = TiePolicy::EarliestSupport);

    const LinearCode& code() const { return code_; }
    TiePolicy tie_policy() const { return policy_; }
    const BitWord& leader(const BitWord& syndrome) const;
    const std::vector<BitWord>& leaders() const { return leaders_; }

    /// Text table in the classic layout: codeword row first, one row per
    /// coset beneath, leaders in column one. Enumerates the whole space.
    void dump_table(std::ostream& os) const;

  private:
    LinearCode code_;
    TiePolicy policy_;
    std::vector<BitWord> leaders_;  // indexed by syndrome bits
};

inline StandardArray build_standard_array(const LinearCode& code, TiePolicy policy = TiePolicy::EarliestSupport) {
    return StandardArray(code, policy);
}

enum class DecodeMethod { CosetLeader, NearestNeighbor, PseudoBestApprox };

struct DecodeResult {
    BitWord codeword;
    BitWord message;
    BitWord error;      // received ^ codeword
    int corrected = 0;  // weight of error
    DecodeMethod method = DecodeMethod::CosetLeader;
};

DecodeResult coset_decode(const StandardArray& table, const BitWord& received);

/// Compares against all 2^k codewords; ties go to the lexicographically
/// smallest codeword.
DecodeResult nearest_neighbor_decode(const LinearCode& code, const BitWord& received);

/// Mod-2 dot product used as a (degenerate) inner product: <x,x> may vanish
/// for x != 0.
int pseudo_inner(const BitWord& x, const BitWord& y);

/// sum_i <beta, basis_i> basis_i for one fixed basis of the code. Returns
/// nothing when the sum is zero and beta is not already a codeword; a
/// codeword beta is passed through unchanged.
std::optional<BitWord> pseudo_best_approx(const LinearCode& code, const std::vector<BitWord>& basis,
                                          const BitWord& beta);

struct PbaOptions {
    /// Candidate bases to try before giving up; 0 means the default 2k^2.
    int basis_budget = 0;
    /// Evaluate every candidate basis in the budget and keep the result with
    /// the least Hamming distance from beta, instead of stopping at the
    /// first nonzero sum.
    bool exhaustive = false;
};

struct PbaOutcome {
    std::optional<BitWord> word;
    int bases_tried = 0;
    int basis_index = -1;  // candidate index that produced `word` (0 = start basis)
    int distance = -1;     // d(word, beta) when word is present
};

/// Deterministic basis iteration: the start basis itself, then single row
/// replacements row_i <- row_i ^ row_j (i < j) in (i, j) order, then
/// row_i <- row_i ^ row_j ^ row_l over (i, j < l), up to the budget.
PbaOutcome pseudo_best_approx_search(const LinearCode& code, const std::vector<BitWord>& start_basis,
                                     const BitWord& beta, const PbaOptions& opts = {});

/// Convenience: search starting from the generator rows.
PbaOutcome pseudo_best_approx_search(const LinearCode& code, const BitWord& beta, const PbaOptions& opts = {});

}  // namespace ncode

#endif
