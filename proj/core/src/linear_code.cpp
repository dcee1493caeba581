#include "ncode/linear_code.hpp"

#include <algorithm>
#include <mutex>

namespace ncode {

std::string to_string(CodeFamily f) {
    switch (f) {
        case CodeFamily::General: return "general";
        case CodeFamily::Repetition: return "repetition";
        case CodeFamily::ParityCheck: return "parity_check";
        case CodeFamily::Hamming: return "hamming";
        case CodeFamily::Cyclic: return "cyclic";
    }
    return "?";
}

struct LinearCode::Body {
    int n = 0, k = 0;
    BitMatrix G;  // k x n, encoding map
    BitMatrix H;  // (n-k) x n
    CodeFamily family = CodeFamily::General;
    std::optional<BinPoly> gen;
    std::vector<int> info_cols;  // k columns of G forming an invertible block
    BitMatrix uncode;            // inverse of that block: a = x[info_cols] * uncode

    mutable std::once_flag words_once;
    mutable std::vector<BitWord> words;
};

namespace {

// Columns of G at the RREF pivots are invertible; standard forms keep 0..k-1.
std::vector<int> information_set(const BitMatrix& G) {
    auto [rref, pivots] = G.rref();
    if (static_cast<int>(pivots.size()) != G.rows()) throw input_error("generator rows are not independent");
    return pivots;
}

}  // namespace

LinearCode LinearCode::make(BitMatrix G, BitMatrix H, CodeFamily family, std::optional<BinPoly> gen) {
    auto body = std::make_shared<Body>();
    body->n = G.cols();
    body->k = G.rows();
    if (H.cols() != body->n || H.rows() != body->n - body->k)
        throw input_error("parity-check shape does not match an (n, k) code");
    if (body->k < 1 || body->k > body->n) throw input_error("need 1 <= k <= n");
    if (!(G * H.transposed()).is_zero()) throw input_error("G H^T != 0: matrices describe different codes");
    if (H.rank() != body->n - body->k) throw input_error("parity-check rows are not independent");
    body->info_cols = information_set(G);
    body->uncode = G.select_columns(body->info_cols).inverted();
    body->G = std::move(G);
    body->H = std::move(H);
    body->family = family;
    body->gen = std::move(gen);
    return LinearCode(std::move(body));
}

LinearCode LinearCode::from_parity_standard(const BitMatrix& A) {
    const int r = A.rows(), k = A.cols();
    BitMatrix H = BitMatrix::hconcat(A, BitMatrix::identity(r));
    BitMatrix G = BitMatrix::hconcat(BitMatrix::identity(k), A.transposed());
    return make(std::move(G), std::move(H), CodeFamily::General, std::nullopt);
}

LinearCode LinearCode::from_generator_standard(const BitMatrix& B) {
    const int k = B.rows(), r = B.cols();
    BitMatrix G = BitMatrix::hconcat(BitMatrix::identity(k), B);
    BitMatrix H = BitMatrix::hconcat(B.transposed(), BitMatrix::identity(r));
    return make(std::move(G), std::move(H), CodeFamily::General, std::nullopt);
}

LinearCode LinearCode::from_generator(const BitMatrix& G) {
    if (G.rank() != G.rows()) throw input_error("generator rows are not independent");
    if (G.rows() == G.cols()) throw input_error("k = n leaves no check symbols");
    BitMatrix H = G.null_space();
    return make(G, std::move(H), CodeFamily::General, std::nullopt);
}

LinearCode LinearCode::from_parity(const BitMatrix& H) {
    if (H.rank() != H.rows()) throw input_error("parity-check rows are not independent");
    if (H.rows() >= H.cols()) throw input_error("parity-check leaves no message symbols");
    BitMatrix G = H.null_space(/*rightmost_pivots=*/true);
    return make(std::move(G), H, CodeFamily::General, std::nullopt);
}

int LinearCode::n() const { return body_->n; }
int LinearCode::k() const { return body_->k; }
const BitMatrix& LinearCode::generator() const { return body_->G; }
const BitMatrix& LinearCode::parity() const { return body_->H; }
CodeFamily LinearCode::family() const { return body_->family; }

const BinPoly& LinearCode::gen_poly() const {
    if (!body_->gen) throw input_error("not a cyclic-family code");
    return *body_->gen;
}

BitWord LinearCode::encode(const BitWord& message) const {
    if (message.size() != body_->k)
        throw input_error("message length " + std::to_string(message.size()) + " != k = " + std::to_string(body_->k));
    return message * body_->G;
}

BitWord LinearCode::message_of(const BitWord& codeword) const {
    if (codeword.size() != body_->n) throw input_error("codeword length mismatch");
    BitWord picked(body_->k);
    for (int i = 0; i < body_->k; ++i) picked.set(i, codeword.bit(body_->info_cols[i]));
    return picked * body_->uncode;
}

bool LinearCode::contains(const BitWord& word) const {
    if (word.size() != body_->n) return false;
    return body_->H.apply(word).is_zero();
}

const std::vector<BitWord>& LinearCode::codewords() const {
    if (body_->k > kEnumerationCapK)
        throw cap_error("codeword enumeration capped at k <= " + std::to_string(kEnumerationCapK) +
                        ", code has k = " + std::to_string(body_->k));
    std::call_once(body_->words_once, [this] {
        std::vector<BitWord> words;
        words.reserve(1ull << body_->k);
        for (std::uint64_t m = 0; m < (1ull << body_->k); ++m)
            words.push_back(encode(BitWord(body_->k, m)));
        std::sort(words.begin(), words.end());
        body_->words = std::move(words);
    });
    return body_->words;
}

int LinearCode::min_distance() const {
    int best = body_->n;
    for (const auto& w : codewords())
        if (!w.is_zero()) best = std::min(best, w.weight());
    return best;
}

Capability LinearCode::capability() const {
    Capability c;
    c.d = min_distance();
    c.t = (c.d - 1) / 2;
    c.s = c.d - 2 * c.t;
    return c;
}

bool LinearCode::is_cyclic() const {
    const auto& words = codewords();
    return std::all_of(words.begin(), words.end(),
                       [&](const BitWord& w) { return std::binary_search(words.begin(), words.end(), cyclic_shift(w)); });
}

bool LinearCode::is_reversible() const {
    const auto& words = codewords();
    return std::all_of(words.begin(), words.end(),
                       [&](const BitWord& w) { return std::binary_search(words.begin(), words.end(), reversed(w)); });
}

SelfOrthogonality LinearCode::self_orthogonality() const {
    // C is self-orthogonal iff all generator rows are pairwise (and self) orthogonal.
    const auto& G = body_->G;
    for (int i = 0; i < G.rows(); ++i)
        for (int j = i; j < G.rows(); ++j)
            if (dot(G.row(i), G.row(j))) return SelfOrthogonality::None;
    return 2 * body_->k == body_->n ? SelfOrthogonality::SelfDual : SelfOrthogonality::SelfOrthogonal;
}

BinPoly LinearCode::check_poly() const {
    const BinPoly& g = gen_poly();
    auto [h, rem] = poly_divmod(BinPoly::xn_plus_1(body_->n), g);
    if (!rem.is_zero()) throw input_error("generator polynomial does not divide x^n + 1");
    return h;
}

bool LinearCode::same_codewords(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    return BitMatrix::vconcat(a.generator(), b.generator()).rank() == a.k();
}

LinearCode dual(const LinearCode& code) {
    // Generator and parity-check matrices swap roles.
    return LinearCode::make(code.parity(), code.generator(), CodeFamily::General, std::nullopt);
}

LinearCode repetition_code(int n) {
    if (n < 2) throw input_error("repetition code needs n >= 2");
    // First column all ones, identity block to the right.
    BitMatrix A(n - 1, 1);
    for (int r = 0; r < n - 1; ++r) A.set(r, 0, true);
    BitMatrix H = BitMatrix::hconcat(A, BitMatrix::identity(n - 1));
    BitMatrix G(1, n);
    for (int c = 0; c < n; ++c) G.set(0, c, true);
    return LinearCode::make(std::move(G), std::move(H), CodeFamily::Repetition, std::nullopt);
}

LinearCode parity_check_code(int n) {
    if (n < 2) throw input_error("parity-check code needs n >= 2");
    BitMatrix H(1, n);
    for (int c = 0; c < n; ++c) H.set(0, c, true);
    BitMatrix ones(n - 1, 1);
    for (int r = 0; r < n - 1; ++r) ones.set(r, 0, true);
    BitMatrix G = BitMatrix::hconcat(BitMatrix::identity(n - 1), ones);
    return LinearCode::make(std::move(G), std::move(H), CodeFamily::ParityCheck, std::nullopt);
}

LinearCode hamming_code(int m, const BitMatrix& H) {
    if (m < 2) throw input_error("Hamming parameter m must be >= 2");
    const int n = (1 << m) - 1;
    if (H.rows() != m || H.cols() != n)
        throw input_error("Hamming check matrix must be " + std::to_string(m) + " x " + std::to_string(n));
    std::vector<bool> seen(1 << m, false);
    for (int c = 0; c < n; ++c) {
        std::uint64_t col = 0;
        for (int r = 0; r < m; ++r)
            if (H.at(r, c)) col |= 1ull << r;
        if (col == 0) throw input_error("Hamming check matrix has a zero column");
        if (seen[col]) throw input_error("Hamming check matrix has duplicate columns");
        seen[col] = true;
    }
    BitMatrix G = H.null_space(/*rightmost_pivots=*/true);
    return LinearCode::make(std::move(G), H, CodeFamily::Hamming, std::nullopt);
}

LinearCode hamming_code(int m) {
    if (m < 2) throw input_error("Hamming parameter m must be >= 2");
    const int n = (1 << m) - 1;
    BitMatrix H(m, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < m; ++r)
            if ((c + 1) & (1 << (m - 1 - r))) H.set(r, c, true);
    return hamming_code(m, H);
}

LinearCode cyclic_from_poly(const BinPoly& g, int n) {
    if (g.is_zero() || g.degree() < 1 || g.degree() >= n)
        throw input_error("cyclic generator needs 1 <= deg(g) < n");
    if (!poly_divides(g, BinPoly::xn_plus_1(n)))
        throw input_error("generator polynomial " + g.to_string() + " does not divide x^" + std::to_string(n) + "+1");
    const int k = n - g.degree();
    BitMatrix G(k, n);
    for (int r = 0; r < k; ++r)
        for (int i = 0; i <= g.degree(); ++i)
            if (g.coeff(i)) G.set(r, r + i, true);
    // Check rows are the reversed shifts of h = (x^n + 1)/g.
    BinPoly h = poly_divmod(BinPoly::xn_plus_1(n), g).first;
    BitMatrix H(n - k, n);
    for (int r = 0; r < n - k; ++r)
        for (int i = 0; i <= k; ++i)
            if (h.coeff(i)) H.set(r, n - 1 - r - i, true);
    return LinearCode::make(std::move(G), std::move(H), CodeFamily::Cyclic, g);
}

}  // namespace ncode
