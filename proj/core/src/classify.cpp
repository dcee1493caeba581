#include "ncode/classify.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace ncode {

std::vector<int> EqualityPartition::sorted_sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(b.size());
    std::sort(s.rbegin(), s.rend());
    return s;
}

std::string EqualityPartition::to_string() const {
    std::string s;
    for (const auto& b : blocks) {
        s += '{';
        for (std::size_t i = 0; i < b.members.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b.members[i] + 1);  // 1-based like the tables
        }
        s += '}';
    }
    return s;
}

EqualityPartition partition_by_equality(int n, const std::function<bool(int, int)>& equal) {
    if (n < 1) throw input_error("partition needs at least one item");
    EqualityPartition part;
    std::vector<int> owner(n, -1);
    for (int i = 0; i < n; ++i) {
        if (owner[i] >= 0) continue;
        EqualityPartition::Block block;
        block.representative = i;
        block.members.push_back(i);
        owner[i] = static_cast<int>(part.blocks.size());
        for (int j = i + 1; j < n; ++j)
            if (owner[j] < 0 && equal(i, j)) {
                owner[j] = owner[i];
                block.members.push_back(j);
            }
        part.blocks.push_back(std::move(block));
    }
    return part;
}

std::string to_string(MatrixShape s) {
    switch (s) {
        case MatrixShape::Square: return "square";
        case MatrixShape::Rectangular: return "rectangular";
        case MatrixShape::MixedSquare: return "mixed_square";
        case MatrixShape::MixedRectangular: return "mixed_rectangular";
        case MatrixShape::Mixed: return "mixed";
    }
    return "?";
}

std::string NMatrixClass::to_string() const {
    switch (kind) {
        case Kind::NotFalse: return "not_false";
        case Kind::False: return "false";
        case Kind::PseudoFalse: return std::to_string(m) + "-pseudo_false";
    }
    return "?";
}

namespace {

MatrixShape two_block_shape(const BitMatrix& a, const BitMatrix& b) {
    const bool sq_a = a.rows() == a.cols(), sq_b = b.rows() == b.cols();
    const bool same_dims = a.rows() == b.rows() && a.cols() == b.cols();
    if (sq_a && sq_b) return same_dims ? MatrixShape::Square : MatrixShape::MixedSquare;
    if (!sq_a && !sq_b) return same_dims ? MatrixShape::Rectangular : MatrixShape::MixedRectangular;
    return MatrixShape::Mixed;
}

}  // namespace

NMatrixClass classify_nmatrix(const std::vector<BitMatrix>& mats) {
    if (mats.size() < 2) throw input_error("classification needs at least 2 matrices");
    const int n = static_cast<int>(mats.size());
    NMatrixClass out;
    out.partition = partition_by_equality(mats);
    if (out.partition.count() == 1) {
        out.kind = NMatrixClass::Kind::False;
        const auto& m0 = mats[0];
        out.shape = m0.rows() == m0.cols() ? MatrixShape::Square : MatrixShape::Rectangular;
        return out;
    }
    if (out.partition.count() == 2) {
        const int a = out.partition.blocks[0].size();
        const int b = out.partition.blocks[1].size();
        const int m = std::min(a, b);
        // A two-component tuple with distinct entries is an ordinary pair,
        // not a pseudo-false one.
        if (n >= std::max(2 * m, 3)) {
            out.kind = NMatrixClass::Kind::PseudoFalse;
            out.m = m;
            out.shape = two_block_shape(mats[out.partition.blocks[0].representative],
                                        mats[out.partition.blocks[1].representative]);
            return out;
        }
    }
    out.kind = NMatrixClass::Kind::NotFalse;
    return out;
}

std::string FalseProfile::to_string() const {
    switch (kind) {
        case Kind::NotFalse: return "not_false";
        case Kind::False: return "false";
        case Kind::OnePseudo: return "1-pseudo_false";
        case Kind::MPseudo: return std::to_string(m) + "-pseudo_false";
        case Kind::OneOne: return "(1,1)-pseudo_false";
        case Kind::TT: return "(" + std::to_string(t) + "," + std::to_string(t) + ")-pseudo_false";
        case Kind::TM: return "(" + std::to_string(t) + "," + std::to_string(m) + ")-pseudo_false";
    }
    return "?";
}

namespace {

EqualityPartition component_partition(const NCode& nc) {
    return partition_by_equality(nc.count(), [&](int i, int j) {
        return LinearCode::same_codewords(nc.component(i), nc.component(j));
    });
}

}  // namespace

FalseProfile false_code_profile(const NCode& nc) {
    const int n = nc.count();
    const EqualityPartition part = component_partition(nc);
    FalseProfile out;
    if (part.count() == 1) {
        out.kind = FalseProfile::Kind::False;
        return out;
    }
    if (part.count() == 2) {
        const auto sizes = part.sorted_sizes();  // descending
        const int m = sizes[1];
        if (m == 1 && n >= 3) {
            out.kind = FalseProfile::Kind::OnePseudo;
            out.m = 1;
        } else if (m >= 2 && n >= 2 * m) {
            out.kind = FalseProfile::Kind::MPseudo;
            out.m = m;
        }
        return out;
    }
    if (part.count() == 3) {
        auto sizes = part.sorted_sizes();  // descending: rest, b, a
        const int a = sizes[2], b = sizes[1], rest = sizes[0];
        if (a == 1 && b == 1 && rest >= 2) {
            out.kind = FalseProfile::Kind::OneOne;
            out.t = out.m = 1;
        } else if (a == b && a >= 2 && n >= 2 * a + 1) {
            // Two same-size blocks of t >= 2; the largest block is the rest.
            out.kind = FalseProfile::Kind::TT;
            out.t = a;
        } else if (b == rest && b >= 2 && n >= 2 * b + 1) {
            // The tied pair may be the two larger blocks, with the smallest as rest.
            out.kind = FalseProfile::Kind::TT;
            out.t = b;
        } else if (a != b && n > a + b + 1) {
            out.kind = FalseProfile::Kind::TM;
            out.t = a;
            out.m = b;
        }
        return out;
    }
    return out;
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::No: return "false";
        case Tri::Yes: return "true";
        case Tri::NotApplicable: return "n/a";
    }
    return "?";
}

bool is_p_linear(const NCode& nc) {
    for (int i = 0; i < nc.count(); ++i) {
        bool unique = true;
        for (int j = 0; j < nc.count() && unique; ++j)
            if (j != i && nc.component(j).n() == nc.component(i).n() && nc.component(j).k() == nc.component(i).k())
                unique = false;
        if (unique) return true;
    }
    return false;
}

Tri is_weak_p_linear(const NCode& nc) {
    if (nc.count() < 3) return Tri::NotApplicable;
    for (int i = 0; i < nc.count(); ++i)
        for (int j = i + 1; j < nc.count(); ++j)
            if (nc.component(i).n() == nc.component(j).n()) return Tri::Yes;
    return Tri::No;
}

Tri is_duo_p_linear(const NCode& nc) {
    const Tri weak = is_weak_p_linear(nc);
    if (weak == Tri::NotApplicable) return Tri::NotApplicable;
    return (weak == Tri::Yes && is_p_linear(nc)) ? Tri::Yes : Tri::No;
}

FamilyProfile family_p_profile(const NCode& nc) {
    FamilyProfile out;
    const auto& comps = nc.components();
    auto all_family = [&](CodeFamily f) {
        return std::all_of(comps.begin(), comps.end(), [&](const LinearCode& c) { return c.family() == f; });
    };
    auto lengths_distinct = [&] {
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j)
                if (comps[i].n() == comps[j].n()) return false;
        return true;
    };
    out.repetition = all_family(CodeFamily::Repetition) && nc.proper();
    out.parity_check = all_family(CodeFamily::ParityCheck) && lengths_distinct();
    out.hamming = all_family(CodeFamily::Hamming) && nc.proper() && lengths_distinct();
    int kinds = 0;
    for (CodeFamily f : {CodeFamily::Repetition, CodeFamily::ParityCheck, CodeFamily::Cyclic})
        if (std::any_of(comps.begin(), comps.end(), [&](const LinearCode& c) { return c.family() == f; })) ++kinds;
    out.mixed = kinds >= 2;
    return out;
}

std::string to_string(WholeKind w) {
    switch (w) {
        case WholeKind::NotWhole: return "not_whole";
        case WholeKind::Whole2n: return "whole_2n";
        case WholeKind::PseudoWhole: return "pseudo_whole";
    }
    return "?";
}

namespace {

bool dual_pair(const LinearCode& a, const LinearCode& b) { return LinearCode::same_codewords(dual(a), b); }

bool pairs_as_duals(const NCode& nc, int upto, bool relaxed) {
    if (!relaxed) {
        for (int i = 0; i + 1 < upto; i += 2)
            if (!dual_pair(nc.component(i), nc.component(i + 1))) return false;
        return true;
    }
    // Search for any perfect matching into dual pairs.
    std::vector<int> left;
    for (int i = 0; i < upto; ++i) left.push_back(i);
    std::function<bool(std::vector<int>&)> match = [&](std::vector<int>& rem) {
        if (rem.empty()) return true;
        const int a = rem[0];
        for (std::size_t j = 1; j < rem.size(); ++j) {
            if (!dual_pair(nc.component(a), nc.component(rem[j]))) continue;
            std::vector<int> next(rem.begin() + 1, rem.end());
            next.erase(next.begin() + (j - 1));
            if (match(next)) return true;
        }
        return false;
    };
    return match(left);
}

}  // namespace

WholeKind whole_profile(const NCode& nc, bool relaxed) {
    const int n = nc.count();
    if (n % 2 == 0) {
        if (pairs_as_duals(nc, n, relaxed)) return WholeKind::Whole2n;
        return WholeKind::NotWhole;
    }
    if (n >= 3 && pairs_as_duals(nc, n - 1, relaxed)) {
        const int last_len = nc.component(n - 1).n();
        bool distinct = true;
        for (int i = 0; i + 1 < n; ++i)
            if (nc.component(i).n() == last_len) distinct = false;
        if (distinct) return WholeKind::PseudoWhole;
    }
    return WholeKind::NotWhole;
}

std::string to_string(CyclicProfile c) {
    switch (c) {
        case CyclicProfile::NotCyclicFamily: return "not_cyclic";
        case CyclicProfile::PCyclic: return "p_cyclic";
        case CyclicProfile::WeakPCyclic: return "weak_p_cyclic";
        case CyclicProfile::PseudoStrongPCyclic: return "pseudo_strong_p_cyclic";
        case CyclicProfile::PseudoPCyclic: return "pseudo_p_cyclic";
    }
    return "?";
}

CyclicProfile cyclic_p_profile(const NCode& nc) {
    const int n = nc.count();
    int cyclic = 0;
    for (const auto& comp : nc.components())
        if (comp.is_cyclic()) ++cyclic;
    if (cyclic == 0) return CyclicProfile::NotCyclicFamily;
    if (cyclic == n) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (nc.component(i).n() == nc.component(j).n()) return CyclicProfile::WeakPCyclic;
        return CyclicProfile::PCyclic;
    }
    return cyclic == n - 1 ? CyclicProfile::PseudoStrongPCyclic : CyclicProfile::PseudoPCyclic;
}

PFalseFlags weak_p_false(const NCode& nc) {
    const EqualityPartition part = component_partition(nc);
    PFalseFlags out;
    out.weak_p_false = part.count() >= 2 && std::any_of(part.blocks.begin(), part.blocks.end(),
                                                        [](const auto& b) { return b.size() >= 2; });
    out.p_false = false_code_profile(nc).kind == FalseProfile::Kind::OnePseudo;
    return out;
}

namespace {

template <typename T, typename Fn>
Field<T> guard(Fn&& fn) {
    Field<T> f;
    try {
        f.value = fn();
    } catch (const std::exception& e) {
        f.error = e.what();
    }
    return f;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

ClassificationReport classify_all(const NCode& nc) {
    ClassificationReport r;
    r.proper = nc.proper();
    for (const auto& comp : nc.components()) {
        ComponentSummary s;
        s.n = comp.n();
        s.k = comp.k();
        s.family = comp.family();
        try {
            s.cyclic = comp.is_cyclic();
        } catch (const cap_error&) {
        }
        r.components.push_back(s);
    }
    r.partition = component_partition(nc);
    r.p_linear = guard<bool>([&] { return is_p_linear(nc); });
    r.weak_p_linear = guard<Tri>([&] { return is_weak_p_linear(nc); });
    r.duo_p_linear = guard<Tri>([&] { return is_duo_p_linear(nc); });
    r.family = guard<FamilyProfile>([&] { return family_p_profile(nc); });
    r.whole = guard<WholeKind>([&] { return whole_profile(nc); });
    r.cyclic = guard<CyclicProfile>([&] { return cyclic_p_profile(nc); });
    r.false_profile = guard<FalseProfile>([&] { return false_code_profile(nc); });
    auto flags = guard<PFalseFlags>([&] { return weak_p_false(nc); });
    if (flags.ok()) {
        r.weak_p_false.value = flags.value->weak_p_false;
        r.p_false.value = flags.value->p_false;
    } else {
        r.weak_p_false.error = flags.error;
        r.p_false.error = flags.error;
    }
    return r;
}

namespace {

template <typename T, typename Render>
void put_line(std::string& out, const std::string& key, const Field<T>& f, Render&& render) {
    out += key + ": " + (f.ok() ? render(*f.value) : "error: " + f.error) + '\n';
}

}  // namespace

std::string ClassificationReport::to_text() const {
    std::string out;
    out += "proper: " + bool_str(proper) + '\n';
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& c = components[i];
        out += "component." + std::to_string(i + 1) + ": (" + std::to_string(c.n) + "," + std::to_string(c.k) +
               ") family=" + ncode::to_string(c.family) +
               " cyclic=" + (c.cyclic ? bool_str(*c.cyclic) : std::string("?")) + '\n';
    }
    out += "partition: " + partition.to_string() + '\n';
    put_line(out, "p_linear", p_linear, [](bool v) { return bool_str(v); });
    put_line(out, "weak_p_linear", weak_p_linear, [](Tri v) { return ncode::to_string(v); });
    put_line(out, "duo_p_linear", duo_p_linear, [](Tri v) { return ncode::to_string(v); });
    put_line(out, "family_repetition", family, [](const FamilyProfile& v) { return bool_str(v.repetition); });
    put_line(out, "family_parity_check", family, [](const FamilyProfile& v) { return bool_str(v.parity_check); });
    put_line(out, "family_hamming", family, [](const FamilyProfile& v) { return bool_str(v.hamming); });
    put_line(out, "family_mixed", family, [](const FamilyProfile& v) { return bool_str(v.mixed); });
    put_line(out, "whole_profile", whole, [](WholeKind v) { return ncode::to_string(v); });
    put_line(out, "cyclic_profile", cyclic, [](CyclicProfile v) { return ncode::to_string(v); });
    put_line(out, "false_profile", false_profile, [](const FalseProfile& v) { return v.to_string(); });
    put_line(out, "weak_p_false", weak_p_false, [](bool v) { return bool_str(v); });
    put_line(out, "p_false", p_false, [](bool v) { return bool_str(v); });
    return out;
}

std::optional<LinearCode> find_cyclic_not_reversible(int max_n) {
    for (int n = 2; n <= max_n && n <= 20; ++n) {
        for (unsigned bits = 2; bits < (1u << n); ++bits) {
            std::vector<std::uint8_t> coeffs;
            for (int i = 0; i <= n; ++i) coeffs.push_back((bits >> i) & 1);
            const BinPoly g(std::move(coeffs));
            if (g.degree() < 1 || g.degree() >= n || !poly_divides(g, BinPoly::xn_plus_1(n))) continue;
            LinearCode c = cyclic_from_poly(g, n);
            if (!c.is_reversible()) return c;
        }
    }
    return std::nullopt;
}

std::string ClassificationReport::to_json() const {
    nlohmann::json j;
    j["proper"] = proper;
    j["components"] = nlohmann::json::array();
    for (const auto& c : components) {
        nlohmann::json jc;
        jc["n"] = c.n;
        jc["k"] = c.k;
        jc["family"] = ncode::to_string(c.family);
        if (c.cyclic) jc["cyclic"] = *c.cyclic;
        j["components"].push_back(jc);
    }
    j["partition"] = partition.to_string();
    auto put = [&j](const std::string& key, const auto& field, auto&& render) {
        if (field.ok())
            j[key] = render(*field.value);
        else
            j[key] = nlohmann::json{{"error", field.error}};
    };
    put("p_linear", p_linear, [](bool v) { return v; });
    put("weak_p_linear", weak_p_linear, [](Tri v) { return ncode::to_string(v); });
    put("duo_p_linear", duo_p_linear, [](Tri v) { return ncode::to_string(v); });
    put("family_repetition", family, [](const FamilyProfile& v) { return v.repetition; });
    put("family_parity_check", family, [](const FamilyProfile& v) { return v.parity_check; });
    put("family_hamming", family, [](const FamilyProfile& v) { return v.hamming; });
    put("family_mixed", family, [](const FamilyProfile& v) { return v.mixed; });
    put("whole_profile", whole, [](WholeKind v) { return ncode::to_string(v); });
    put("cyclic_profile", cyclic, [](CyclicProfile v) { return ncode::to_string(v); });
    put("false_profile", false_profile, [](const FalseProfile& v) { return v.to_string(); });
    put("weak_p_false", weak_p_false, [](bool v) { return v; });
    put("p_false", p_false, [](bool v) { return v; });
    return j.dump(2);
}

}  // namespace ncode
