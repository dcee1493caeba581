#include "ncode/ncode.hpp"

#include <algorithm>

namespace ncode {

NWord NWord::from_string(std::string_view text) {
    NWord w;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(':', pos);
        w.parts.push_back(BitWord::from_string(text.substr(pos, next == std::string_view::npos ? next : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return w;
}

NWord NWord::operator^(const NWord& other) const {
    if (parts.size() != other.parts.size()) throw input_error("component count mismatch in word sum");
    NWord r;
    for (std::size_t i = 0; i < parts.size(); ++i) r.parts.push_back(parts[i] ^ other.parts[i]);
    return r;
}

std::string NWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ':';
        s += parts[i].to_string();
    }
    return s;
}

std::string NTuple::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

NCode NCode::compose(std::vector<LinearCode> components) {
    if (components.size() < 2) throw input_error("a composite code needs at least 2 components");
    bool proper = true;
    for (std::size_t i = 0; i < components.size() && proper; ++i)
        for (std::size_t j = i + 1; j < components.size() && proper; ++j)
            if (LinearCode::same_codewords(components[i], components[j])) proper = false;
    return NCode(std::move(components), proper);
}

void check_shape(const NCode& nc, const NWord& word, bool message_lengths) {
    if (word.count() != nc.count())
        throw input_error("expected " + std::to_string(nc.count()) + " parts, got " + std::to_string(word.count()));
    for (int i = 0; i < nc.count(); ++i) {
        const int want = message_lengths ? nc.component(i).k() : nc.component(i).n();
        if (word.parts[i].size() != want)
            throw input_error("component " + std::to_string(i + 1) + ": part length " +
                              std::to_string(word.parts[i].size()) + " != " + std::to_string(want));
    }
}

NWord n_encode(const NCode& nc, const NWord& messages) {
    check_shape(nc, messages, /*message_lengths=*/true);
    NWord out;
    for (int i = 0; i < nc.count(); ++i) out.parts.push_back(nc.component(i).encode(messages.parts[i]));
    return out;
}

NWord n_syndrome(const NCode& nc, const NWord& received) {
    check_shape(nc, received);
    NWord out;
    for (int i = 0; i < nc.count(); ++i) out.parts.push_back(syndrome(nc.component(i), received.parts[i]));
    return out;
}

NDecodeResult n_coset_decode(const NCode& nc, const NWord& received, TiePolicy policy) {
    check_shape(nc, received);
    NDecodeResult out;
    for (int i = 0; i < nc.count(); ++i) {
        const auto& comp = nc.component(i);
        const BitWord s = syndrome(comp, received.parts[i]);
        DecodeResult part;
        if (s.is_zero()) {
            // In-code parts take the zero leader without building the table.
            part.codeword = received.parts[i];
            part.message = comp.message_of(part.codeword);
            part.error = BitWord(comp.n());
            part.corrected = 0;
            part.method = DecodeMethod::CosetLeader;
        } else {
            part = coset_decode(StandardArray(comp, policy), received.parts[i]);
        }
        out.codeword.parts.push_back(part.codeword);
        out.message.parts.push_back(part.message);
        out.error.parts.push_back(part.error);
        out.parts.push_back(part);
    }
    return out;
}

NTuple hamming_n_distance(const NWord& x, const NWord& y) {
    if (x.count() != y.count()) throw input_error("component count mismatch");
    NTuple t;
    for (int i = 0; i < x.count(); ++i) t.values.push_back(hamming_distance(x.parts[i], y.parts[i]));
    return t;
}

NTuple hamming_n_weight(const NWord& x) {
    NTuple t;
    for (const auto& p : x.parts) t.values.push_back(p.weight());
    return t;
}

bool NPbaResult::complete() const {
    return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.has_value(); });
}

NWord NPbaResult::word() const {
    NWord w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i]) throw input_error("component " + std::to_string(i + 1) + " has no approximation");
        w.parts.push_back(*parts[i]);
    }
    return w;
}

NPbaResult pseudo_best_n_approx(const NCode& nc, const std::vector<std::vector<BitWord>>& bases, const NWord& beta,
                                const PbaOptions& opts) {
    check_shape(nc, beta);
    if (static_cast<int>(bases.size()) != nc.count())
        throw input_error("expected one basis per component, got " + std::to_string(bases.size()));
    NPbaResult out;
    for (int i = 0; i < nc.count(); ++i) {
        const auto& comp = nc.component(i);
        const auto& b = beta.parts[i];
        if (comp.contains(b)) {  // in-code parts are accepted as-is
            out.parts.emplace_back(b);
            continue;
        }
        auto direct = pseudo_best_approx(comp, bases[i], b);
        if (direct) {
            out.parts.emplace_back(*direct);
            continue;
        }
        auto searched = pseudo_best_approx_search(comp, bases[i], b, opts);
        out.parts.push_back(searched.word);
    }
    return out;
}

NCapability n_capability(const NCode& nc) {
    NCapability out;
    for (const auto& comp : nc.components()) {
        const Capability c = comp.capability();
        out.d.values.push_back(c.d);
        out.t.values.push_back(c.t);
        out.s.values.push_back(c.s);
    }
    return out;
}

bool hamming_bound(int n, int t, std::uint64_t M) {
    if (n < 1 || n > 63 || t < 0 || t > n) throw input_error("hamming_bound needs 1 <= n <= 63, 0 <= t <= n");
    unsigned __int128 sphere = 0;
    unsigned __int128 binom = 1;  // C(n, 0)
    for (int j = 0; j <= t; ++j) {
        sphere += binom;
        binom = binom * static_cast<unsigned>(n - j) / static_cast<unsigned>(j + 1);
    }
    return static_cast<unsigned __int128>(M) * sphere <= (static_cast<unsigned __int128>(1) << n);
}

NSize n_size(const NCode& nc) {
    NSize out;
    int total_k = 0;
    for (const auto& comp : nc.components()) {
        out.component_sizes.push_back(1ull << comp.k());
        total_k += comp.k();
    }
    if (total_k >= 64) throw cap_error("total word count exceeds 2^63");
    out.total = 1ull << total_k;
    return out;
}

NCode dual(const NCode& nc) {
    std::vector<LinearCode> duals;
    for (const auto& comp : nc.components()) duals.push_back(dual(comp));
    return NCode::compose(std::move(duals));
}

bool n_reversible(const NCode& nc) {
    return std::all_of(nc.components().begin(), nc.components().end(),
                       [](const LinearCode& c) { return c.is_reversible(); });
}

NOrthogonality n_self_orthogonality(const NCode& nc) {
    int count = 0;
    for (const auto& comp : nc.components())
        if (comp.self_orthogonality() != SelfOrthogonality::None) ++count;
    if (count == nc.count()) return NOrthogonality::SelfOrthogonal;
    return count > 0 ? NOrthogonality::Semi : NOrthogonality::None;
}

}  // namespace ncode
