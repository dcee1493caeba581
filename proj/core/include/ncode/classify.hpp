#ifndef NCODE_CLASSIFY_HPP
#define NCODE_CLASSIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ncode/ncode.hpp"

namespace ncode {

/// Groups positions 1..n by equality of their values. Grouping is order-free:
/// members of a block may interleave with members of other blocks.
struct EqualityPartition {
    struct Block {
        int representative = 0;       // lowest member index (0-based)
        std::vector<int> members;     // ascending
        int size() const { return static_cast<int>(members.size()); }
    };
    std::vector<Block> blocks;  // ordered by representative

    int count() const { return static_cast<int>(blocks.size()); }
    /// Block sizes in descending order.
    std::vector<int> sorted_sizes() const;
    std::string to_string() const;  // e.g. "{1,3,5}{2,4}"
};

EqualityPartition partition_by_equality(int n, const std::function<bool(int, int)>& equal);

template <typename T, typename Eq = std::equal_to<T>>
EqualityPartition partition_by_equality(const std::vector<T>& items, Eq eq = {}) {
    return partition_by_equality(static_cast<int>(items.size()),
                                 [&](int i, int j) { return eq(items[i], items[j]); });
}

enum class MatrixShape { Square, Rectangular, MixedSquare, MixedRectangular, Mixed };

std::string to_string(MatrixShape s);

struct NMatrixClass {
    enum class Kind { NotFalse, False, PseudoFalse };
    Kind kind = Kind::NotFalse;
    int m = 0;  // smaller block size for PseudoFalse
    std::optional<MatrixShape> shape;
    EqualityPartition partition;

    std::string to_string() const;
};

/// False / m-pseudo-false classification of a tuple of matrices.
NMatrixClass classify_nmatrix(const std::vector<BitMatrix>& mats);

struct FalseProfile {
    enum class Kind { NotFalse, False, OnePseudo, MPseudo, OneOne, TT, TM };
    Kind kind = Kind::NotFalse;
    int t = 0, m = 0;  // MPseudo uses m; TT uses t; TM uses (t, m)

    bool operator==(const FalseProfile& other) const = default;
    std::string to_string() const;
};

/// Equality-partition classification of the components (equality of codeword
/// sets): false, 1-pseudo, m-pseudo, (1,1)-, (t,t)- and (t,m)-pseudo false.
FalseProfile false_code_profile(const NCode& nc);

enum class Tri { No, Yes, NotApplicable };

std::string to_string(Tri t);

/// Some component's (n, k) parameter pair is shared by no other component.
bool is_p_linear(const NCode& nc);
/// At least two components share a block length; needs >= 3 components.
Tri is_weak_p_linear(const NCode& nc);
Tri is_duo_p_linear(const NCode& nc);

struct FamilyProfile {
    bool repetition = false;    // all components distinct repetition codes
    bool parity_check = false;  // all parity-check codes of distinct lengths
    bool hamming = false;       // all Hamming codes, distinct sets and lengths
    bool mixed = false;         // >= 2 family kinds among {repetition, parity-check, cyclic}
};

FamilyProfile family_p_profile(const NCode& nc);

enum class WholeKind { NotWhole, Whole2n, PseudoWhole };

std::string to_string(WholeKind w);

/// Whole2n: even count, adjacent pairs (C, C-dual) by codeword sets.
/// PseudoWhole: odd count, leading adjacent dual pairs plus one trailing
/// component whose length differs from all others.
/// `relaxed` searches all pairings instead of adjacent ones.
WholeKind whole_profile(const NCode& nc, bool relaxed = false);

enum class CyclicProfile { NotCyclicFamily, PCyclic, WeakPCyclic, PseudoStrongPCyclic, PseudoPCyclic };

std::string to_string(CyclicProfile c);

/// Counts components that are semantically cyclic (closed under the shift).
CyclicProfile cyclic_p_profile(const NCode& nc);

struct PFalseFlags {
    bool weak_p_false = false;  // >= 2 blocks, at least one of size >= 2
    bool p_false = false;       // exactly the 1-pseudo-false profile
};

PFalseFlags weak_p_false(const NCode& nc);

/// One predicate result; `error` is set when a cap stopped the evaluation.
template <typename T>
struct Field {
    std::optional<T> value;
    std::string error;
    bool ok() const { return value.has_value(); }
    const T& operator*() const { return *value; }
};

struct ComponentSummary {
    int n = 0, k = 0;
    CodeFamily family = CodeFamily::General;
    std::optional<bool> cyclic;  // unset if enumeration was capped
};

struct ClassificationReport {
    bool proper = false;
    std::vector<ComponentSummary> components;
    EqualityPartition partition;

    Field<bool> p_linear;
    Field<Tri> weak_p_linear;
    Field<Tri> duo_p_linear;
    Field<FamilyProfile> family;
    Field<WholeKind> whole;
    Field<CyclicProfile> cyclic;
    Field<FalseProfile> false_profile;
    Field<bool> weak_p_false;
    Field<bool> p_false;

    /// Flat key-value document, one predicate per line.
    std::string to_text() const;
    /// Machine-readable JSON with the same stable keys.
    std::string to_json() const;
};

ClassificationReport classify_all(const NCode& nc);

/// Search helper for the open question "is every cyclic code reversible?":
/// walks the cyclic codes of length <= max_n (one per proper divisor of
/// x^n + 1) and returns the first that is not closed under reversal, if any.
/// No general answer is asserted; callers inspect the witness.
std::optional<LinearCode> find_cyclic_not_reversible(int max_n);

}  // namespace ncode

#endif
