#include "lbc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace lbc {

namespace {
int word_count(int length) { return (length + 63) / 64; }
} // namespace

BitVector::BitVector(int length) : length_(length) {
    if (length < 1 || length > kMaxLength)
        throw DomainError("vector length out of range [1, 512]");
    words_.assign(word_count(length), 0);
}

BitVector::BitVector(int length, std::uint64_t pattern) : BitVector(length) {
    if (length < 64 && (pattern >> length) != 0)
        throw DomainError("pattern has bits beyond the vector length");
    words_[0] = pattern;
}

int BitVector::weight() const {
    int w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::get(int coord) const {
    return (words_[(coord - 1) >> 6] >> ((coord - 1) & 63)) & 1u;
}

void BitVector::set(int coord, bool value) {
    std::uint64_t mask = std::uint64_t{1} << ((coord - 1) & 63);
    if (value)
        words_[(coord - 1) >> 6] |= mask;
    else
        words_[(coord - 1) >> 6] &= ~mask;
}

void BitVector::flip(int coord) { words_[(coord - 1) >> 6] ^= std::uint64_t{1} << ((coord - 1) & 63); }

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.length_ != length_) throw DomainError("length mismatch in vector sum");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

int BitVector::lowest_coord() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words_[i])) + 1;
    return 0;
}

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols) {
    rows_.assign(rows, BitVector(cols));
}

BitMatrix::BitMatrix(std::vector<BitVector> rows, int cols) : cols_(cols), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.length() != cols_) throw DomainError("matrix rows have unequal lengths");
}

void BitMatrix::append_row(const BitVector& r) {
    if (r.length() != cols_) throw DomainError("matrix rows have unequal lengths");
    rows_.push_back(r);
}

EchelonBasis::EchelonBasis(int n) : n_(n) {
    if (n < 1 || n > kMaxLength) throw DomainError("ambient dimension out of range [1, 512]");
}

EchelonBasis::EchelonBasis(int n, const std::vector<BitVector>& generators) : EchelonBasis(n) {
    for (const auto& g : generators) {
        if (g.length() != n_) throw DomainError("generator length mismatch");
        insert_reduced(g);
    }
}

void EchelonBasis::insert_reduced(BitVector v) {
    // Reduce v against current rows.
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    int p = v.lowest_coord();
    if (p == 0) return; // spanned
    // Back-substitute into earlier rows, then insert keeping pivots sorted.
    for (auto& r : rows_)
        if (r.get(p)) r ^= v;
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
}

bool EchelonBasis::contains(const BitVector& v) const {
    if (v.length() != n_) throw DomainError("length mismatch");
    BitVector r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.get(pivots_[i])) r ^= rows_[i];
    return r.zero();
}

EchelonBasis EchelonBasis::extended(const BitVector& v) const {
    if (contains(v)) throw AlreadyInSpan();
    EchelonBasis out = *this;
    out.insert_reduced(v);
    return out;
}

BitMatrix EchelonBasis::as_matrix() const { return BitMatrix(rows_, n_); }

int weight(const BitVector& v) { return v.weight(); }

bool dot(const BitVector& a, const BitVector& b) {
    if (a.length() != b.length()) throw DomainError("length mismatch in inner product");
    int parity = 0;
    for (std::size_t i = 0; i < a.words().size(); ++i)
        parity ^= std::popcount(a.words()[i] & b.words()[i]) & 1;
    return parity;
}

BitVector apply(const BitMatrix& m, const BitVector& x) {
    if (m.row_count() == 0) throw DomainError("cannot apply a matrix with no rows");
    BitVector y(m.row_count());
    for (int i = 0; i < m.row_count(); ++i) y.set(i + 1, dot(m.row(i), x));
    return y;
}

int rank(const BitMatrix& m) {
    if (m.col_count() == 0) return 0;
    EchelonBasis b(m.col_count(), m.rows());
    return b.dim();
}

EchelonBasis kernel_basis(const BitMatrix& m) {
    int n = m.col_count();
    EchelonBasis row_space(n, m.rows());
    const auto& pivots = row_space.pivots();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n) + 1, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<BitVector> gens;
    for (int f = 1; f <= n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        BitVector v(n);
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (row_space.rows()[i].get(f)) v.set(pivots[i], true);
        gens.push_back(std::move(v));
    }
    return EchelonBasis(n, gens);
}

EchelonBasis extend_basis(const EchelonBasis& b, const BitVector& v) { return b.extended(v); }

bool span_contains(const EchelonBasis& b, const BitVector& v) { return b.contains(v); }

void for_each_span_element(const EchelonBasis& b,
                           const std::function<void(const BitVector&)>& visit,
                           int enumeration_cap) {
    int d = b.dim();
    if (d > enumeration_cap) throw CapExceeded("span dimension exceeds the enumeration cap");
    BitVector cur(b.ambient_dim());
    visit(cur);
    std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t i = 1; i < total; ++i) {
        // Gray code: flip the basis row indexed by the lowest set bit of i.
        cur ^= b.rows()[static_cast<std::size_t>(std::countr_zero(i))];
        visit(cur);
    }
}

std::vector<BitVector> enumerate_span(const EchelonBasis& b, int enumeration_cap) {
    std::vector<BitVector> out;
    out.reserve(std::size_t{1} << std::min(b.dim(), 20));
    for_each_span_element(b, [&](const BitVector& v) { out.push_back(v); }, enumeration_cap);
    return out;
}

int min_nonzero_weight(const EchelonBasis& b, int enumeration_cap) {
    if (b.dim() == 0) throw EmptySubspace();
    int best = b.ambient_dim() + 1;
    for_each_span_element(
        b,
        [&](const BitVector& v) {
            int w = v.weight();
            if (w > 0 && w < best) best = w;
        },
        enumeration_cap);
    return best;
}

} // namespace lbc
