#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lbc/errors.hpp"

namespace lbc {

inline constexpr int kMaxLength = 512;
inline constexpr int kDefaultEnumerationCap = 28;

// Packed GF(2) vector. Coordinate 1 is the least significant bit of word 0;
// bits beyond `length` are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(int length);
    // Low-coordinate initialization from a word pattern (bit i = coordinate i+1).
    BitVector(int length, std::uint64_t pattern);

    int length() const { return length_; }
    int weight() const;
    bool zero() const;

    bool get(int coord) const; // 1-based
    void set(int coord, bool value);
    void flip(int coord);

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend auto operator<=>(const BitVector& a, const BitVector& b) {
        return a.words_ <=> b.words_; // length ties broken by content first is fine for ordering maps
    }

    // Lowest set coordinate (1-based), or 0 if the vector is zero.
    int lowest_coord() const;

    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int length_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-major GF(2) matrix; all rows share one length.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols);
    BitMatrix(std::vector<BitVector> rows, int cols);

    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return cols_; }
    const BitVector& row(int i) const { return rows_[i]; }
    BitVector& row(int i) { return rows_[i]; }
    const std::vector<BitVector>& rows() const { return rows_; }

    void append_row(const BitVector& r);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int cols_ = 0;
    std::vector<BitVector> rows_;
};

// Canonical reduced-row-echelon basis of a subspace of F_2^n. Pivot of a row
// is its lowest set coordinate; pivots strictly increase down the rows and
// each pivot column carries exactly one set bit. The representation is unique
// per subspace.
class EchelonBasis {
public:
    explicit EchelonBasis(int n);
    // Canonicalizes arbitrary spanning rows.
    EchelonBasis(int n, const std::vector<BitVector>& generators);

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<BitVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const BitVector& v) const;
    // Returns the extended canonical basis; throws AlreadyInSpan if v is
    // already spanned.
    EchelonBasis extended(const BitVector& v) const;

    BitMatrix as_matrix() const;

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

private:
    void insert_reduced(BitVector v);

    int n_ = 0;
    std::vector<BitVector> rows_;
    std::vector<int> pivots_;
};

int weight(const BitVector& v);
int rank(const BitMatrix& m);

// GF(2) inner product.
bool dot(const BitVector& a, const BitVector& b);
// y = Mx; requires at least one row.
BitVector apply(const BitMatrix& m, const BitVector& x);

// Canonical basis of {x : Mx = 0}; dim = n - rank(M).
EchelonBasis kernel_basis(const BitMatrix& m);

EchelonBasis extend_basis(const EchelonBasis& b, const BitVector& v);
bool span_contains(const EchelonBasis& b, const BitVector& v);

// Visits all 2^dim span elements exactly once, starting with the zero vector,
// in Gray-code order over basis combinations. Throws CapExceeded when dim
// exceeds the cap.
void for_each_span_element(const EchelonBasis& b,
                           const std::function<void(const BitVector&)>& visit,
                           int enumeration_cap = kDefaultEnumerationCap);

std::vector<BitVector> enumerate_span(const EchelonBasis& b,
                                      int enumeration_cap = kDefaultEnumerationCap);

// Minimum weight over nonzero span elements; EmptySubspace when dim = 0.
int min_nonzero_weight(const EchelonBasis& b, int enumeration_cap = kDefaultEnumerationCap);

} // namespace lbc
