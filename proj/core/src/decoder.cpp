#include "ncode/decoder.hpp"

#include <algorithm>
#include <ostream>

namespace ncode {

BitWord syndrome(const LinearCode& code, const BitWord& y) {
    if (y.size() != code.n())
        throw input_error("received word length " + std::to_string(y.size()) + " != n = " + std::to_string(code.n()));
    return code.parity().apply(y);
}

namespace {

// Visit weight-w words of length n in support order ({1,2} before {1,3} ...).
// Returns false if the visitor stopped the walk.
template <typename F>
bool for_each_weight(int n, int w, F&& visit) {
    if (w == 0) return visit(BitWord(n));
    std::vector<int> pos(w);
    for (int i = 0; i < w; ++i) pos[i] = i;
    while (true) {
        BitWord word(n);
        for (int p : pos) word.set(p, true);
        if (!visit(word)) return false;
        int i = w - 1;
        while (i >= 0 && pos[i] == n - w + i) --i;
        if (i < 0) return true;
        ++pos[i];
        for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace

StandardArray::StandardArray(LinearCode code, TiePolicy policy) : code_(std::move(code)), policy_(policy) {
    const int r = code_.n() - code_.k();
    if (r > kStandardArrayCap)
        throw cap_error("standard array capped at n-k <= " + std::to_string(kStandardArrayCap) +
                        ", code has n-k = " + std::to_string(r));
    const std::size_t total = 1ull << r;
    leaders_.assign(total, BitWord());
    std::vector<int> weight(total, -1);
    std::size_t filled = 0;
    for (int w = 0; w <= code_.n() && filled < total; ++w) {
        for_each_weight(code_.n(), w, [&](const BitWord& e) {
            const std::uint64_t s = syndrome(code_, e).raw();
            if (weight[s] < 0) {
                leaders_[s] = e;
                weight[s] = w;
                ++filled;
            } else if (policy_ == TiePolicy::LexSmallest && weight[s] == w && e < leaders_[s]) {
                leaders_[s] = e;
            }
            // EarliestSupport can stop mid-weight; LexSmallest must finish the class.
            return !(policy_ == TiePolicy::EarliestSupport && filled == total);
        });
    }
}

const BitWord& StandardArray::leader(const BitWord& syndrome) const {
    if (syndrome.size() != code_.n() - code_.k()) throw input_error("syndrome length mismatch");
    return leaders_[syndrome.raw()];
}

void StandardArray::dump_table(std::ostream& os) const {
    // Column order follows the classic tables: messages by weight, then by
    // the position of their ones, zero word first.
    std::vector<BitWord> msgs;
    for (std::uint64_t m = 0; m < (1ull << code_.k()); ++m) msgs.push_back(BitWord(code_.k(), m));
    std::sort(msgs.begin(), msgs.end(), [](const BitWord& a, const BitWord& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return b < a;  // earliest ones first: 100 before 010 before 001
    });
    std::vector<BitWord> ordered;
    for (const auto& m : msgs) ordered.push_back(code_.encode(m));
    auto print_row = [&](const BitWord& offset) {
        for (std::size_t i = 0; i < ordered.size(); ++i) os << (i ? " " : "") << (ordered[i] ^ offset).to_string();
        os << '\n';
    };
    print_row(BitWord(code_.n()));
    for (std::size_t s = 1; s < leaders_.size(); ++s) print_row(leaders_[s]);
}

DecodeResult coset_decode(const StandardArray& table, const BitWord& received) {
    const BitWord err = table.leader(syndrome(table.code(), received));
    DecodeResult r;
    r.codeword = received ^ err;
    r.message = table.code().message_of(r.codeword);
    r.error = err;
    r.corrected = err.weight();
    r.method = DecodeMethod::CosetLeader;
    return r;
}

DecodeResult nearest_neighbor_decode(const LinearCode& code, const BitWord& received) {
    if (received.size() != code.n()) throw input_error("received word length mismatch");
    const auto& words = code.codewords();
    const BitWord* best = &words.front();
    int best_d = hamming_distance(*best, received);
    for (const auto& w : words) {
        const int d = hamming_distance(w, received);
        if (d < best_d) {  // codewords() is sorted, so ties keep the smaller word
            best = &w;
            best_d = d;
        }
    }
    DecodeResult r;
    r.codeword = *best;
    r.message = code.message_of(r.codeword);
    r.error = received ^ r.codeword;
    r.corrected = best_d;
    r.method = DecodeMethod::NearestNeighbor;
    return r;
}

int pseudo_inner(const BitWord& x, const BitWord& y) { return dot(x, y); }

namespace {

void check_basis(const LinearCode& code, const std::vector<BitWord>& basis) {
    if (static_cast<int>(basis.size()) != code.k())
        throw input_error("basis must have k = " + std::to_string(code.k()) + " words");
    for (const auto& b : basis)
        if (!code.contains(b)) throw input_error("basis word " + b.to_string() + " is not a codeword");
    if (BitMatrix::from_rows(basis).rank() != code.k()) throw input_error("basis words are not independent");
}

BitWord pba_sum(const std::vector<BitWord>& basis, const BitWord& beta) {
    BitWord acc(beta.size());
    for (const auto& b : basis)
        if (pseudo_inner(beta, b)) acc = acc ^ b;
    return acc;
}

}  // namespace

std::optional<BitWord> pseudo_best_approx(const LinearCode& code, const std::vector<BitWord>& basis,
                                          const BitWord& beta) {
    if (beta.size() != code.n()) throw input_error("received word length mismatch");
    check_basis(code, basis);
    if (code.contains(beta)) return beta;
    BitWord alpha = pba_sum(basis, beta);
    if (alpha.is_zero()) return std::nullopt;
    return alpha;
}

PbaOutcome pseudo_best_approx_search(const LinearCode& code, const std::vector<BitWord>& start_basis,
                                     const BitWord& beta, const PbaOptions& opts) {
    if (beta.size() != code.n()) throw input_error("received word length mismatch");
    check_basis(code, start_basis);
    PbaOutcome out;
    if (code.contains(beta)) {
        out.word = beta;
        out.distance = 0;
        return out;
    }
    const int k = code.k();
    const int budget = opts.basis_budget > 0 ? opts.basis_budget : 2 * k * k;

    auto consider = [&](const std::vector<BitWord>& basis) {
        const int index = out.bases_tried++;
        BitWord alpha = pba_sum(basis, beta);
        if (alpha.is_zero()) return false;
        const int d = hamming_distance(alpha, beta);
        if (!out.word || d < out.distance) {
            out.word = alpha;
            out.distance = d;
            out.basis_index = index;
        }
        return !opts.exhaustive;  // first hit wins unless searching for the best
    };

    if (consider(start_basis) || out.bases_tried >= budget) return out;
    for (int i = 0; i < k && out.bases_tried < budget; ++i)
        for (int j = i + 1; j < k && out.bases_tried < budget; ++j) {
            auto basis = start_basis;
            basis[i] = basis[i] ^ basis[j];
            if (consider(basis)) return out;
        }
    for (int i = 0; i < k && out.bases_tried < budget; ++i)
        for (int j = 0; j < k && out.bases_tried < budget; ++j)
            for (int l = j + 1; l < k && out.bases_tried < budget; ++l) {
                if (i == j || i == l) continue;
                auto basis = start_basis;
                basis[i] = basis[i] ^ basis[j] ^ basis[l];
                if (consider(basis)) return out;
            }
    return out;
}

PbaOutcome pseudo_best_approx_search(const LinearCode& code, const BitWord& beta, const PbaOptions& opts) {
    std::vector<BitWord> rows;
    for (int r = 0; r < code.generator().rows(); ++r) rows.push_back(code.generator().row(r));
    return pseudo_best_approx_search(code, rows, beta, opts);
}

}  // namespace ncode
