#pragma once

#include "lbc/sets.hpp"

namespace lbc {

inline constexpr double kRealTolerance = 1e-9;

// floor(log2(x)) for x >= 1.
long floor_log2(const BigInt& x);
// ceil(log2(x)) for x >= 1.
long ceil_log2(const BigInt& x);

struct EmptySet : DomainError {
    EmptySet() : DomainError("bounds require a nonempty set") {}
};

// Integer sandwich on the linear compression dimension of S, plus the exact
// cardinalities it is computed from. All rate values carry the GV-proxy
// caveat: the optimal compression rate is evaluated through the entropy
// function, which matches it only if the GV bound is tight.
struct BoundsReport {
    int n;
    BigInt set_size;    // |S|
    BigInt sumset_size; // |S+S|
    long lower;         // ceil(log2 |S|)
    long upper;         // floor(log2(|S+S|-1)) + 1, clamped to lower when |S+S| = 1
};

BoundsReport lemma1_bounds(const SymmetricClass& s);

// Binary entropy, flattened to 1 on (1/2, 1]; H(0) = H(1 pre-flattening) = 0.
double entropy(double x);
// The raw formula without flattening (H(1) = 0); exposed for symmetry checks.
double entropy_raw(double x);

// (1 - alpha) * H(beta / (1 - alpha)); the flattened branch realizes the
// dense-sumset regime where the rate is 1 - alpha. Requires 0 <= alpha < beta <= 1.
double conjecture_rate(double alpha, double beta);

} // namespace lbc
