#ifndef NCODE_NCODE_HPP
#define NCODE_NCODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncode/decoder.hpp"
#include "ncode/linear_code.hpp"

namespace ncode {

/// A word of a composite code: one part per component. Text form joins the
/// parts with ':' ("1011:100011").
struct NWord {
    std::vector<BitWord> parts;

    NWord() = default;
    explicit NWord(std::vector<BitWord> p) : parts(std::move(p)) {}
    static NWord from_string(std::string_view text);

    int count() const { return static_cast<int>(parts.size()); }
    NWord operator^(const NWord& other) const;
    bool operator==(const NWord& other) const = default;
    std::string to_string() const;
};

/// One count per component: distances, weights, capabilities, sizes.
struct NTuple {
    std::vector<int> values;

    NTuple() = default;
    explicit NTuple(std::vector<int> v) : values(std::move(v)) {}
    bool operator==(const NTuple& other) const = default;
    std::string to_string() const;  // "(1, 3, 2)"
};

/// An ordered union of component codes. Composition allows repeated
/// components (the false-code families need them) and records whether all
/// components are pairwise distinct in the `proper` flag.
class NCode {
  public:
    static NCode compose(std::vector<LinearCode> components);

    int count() const { return static_cast<int>(comps_.size()); }
    const LinearCode& component(int i) const { return comps_[i]; }
    const std::vector<LinearCode>& components() const { return comps_; }
    bool proper() const { return proper_; }

  private:
    explicit NCode(std::vector<LinearCode> comps, bool proper) : comps_(std::move(comps)), proper_(proper) {}
    std::vector<LinearCode> comps_;
    bool proper_ = true;
};

inline NCode compose(std::vector<LinearCode> components) { return NCode::compose(std::move(components)); }

void check_shape(const NCode& nc, const NWord& word, bool message_lengths = false);

NWord n_encode(const NCode& nc, const NWord& messages);
NWord n_syndrome(const NCode& nc, const NWord& received);

struct NDecodeResult {
    NWord codeword;
    NWord message;
    NWord error;
    std::vector<DecodeResult> parts;
};

NDecodeResult n_coset_decode(const NCode& nc, const NWord& received,
                             TiePolicy policy = TiePolicy::EarliestSupport);

NTuple hamming_n_distance(const NWord& x, const NWord& y);
NTuple hamming_n_weight(const NWord& x);

struct NPbaResult {
    std::vector<std::optional<BitWord>> parts;  // empty optional = that component failed
    bool complete() const;
    /// Throws if any component failed.
    NWord word() const;
};

/// Componentwise pseudo best approximation with the three-case handling:
/// parts already in their component pass through; zero sums fall back to the
/// deterministic basis iteration; components still at zero report failure.
NPbaResult pseudo_best_n_approx(const NCode& nc, const std::vector<std::vector<BitWord>>& bases, const NWord& beta,
                                const PbaOptions& opts = {});

struct NCapability {
    NTuple d, t, s;
};

NCapability n_capability(const NCode& nc);

/// Binary Hamming bound: M * sum_{j<=t} C(n, j) <= 2^n.
bool hamming_bound(int n, int t, std::uint64_t M);

struct NSize {
    std::vector<std::uint64_t> component_sizes;  // 2^k_i
    std::uint64_t total = 0;                     // 2^(sum k_i)
};

NSize n_size(const NCode& nc);

NCode dual(const NCode& nc);

/// All components reversible.
bool n_reversible(const NCode& nc);

enum class NOrthogonality { None, Semi, SelfOrthogonal };

/// SelfOrthogonal when every component is, Semi when some but not all are.
NOrthogonality n_self_orthogonality(const NCode& nc);

}  // namespace ncode

#endif
