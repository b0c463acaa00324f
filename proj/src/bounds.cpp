#include "lbc/bounds.hpp"

#include <cmath>

namespace lbc {

long floor_log2(const BigInt& x) {
    if (x < 1) throw DomainError("log2 requires a positive argument");
    return static_cast<long>(boost::multiprecision::msb(x));
}

long ceil_log2(const BigInt& x) {
    long f = floor_log2(x);
    return (BigInt(1) << static_cast<unsigned>(f)) == x ? f : f + 1;
}

BoundsReport lemma1_bounds(const SymmetricClass& s) {
    if (s.empty()) throw EmptySet();
    BigInt size = class_size(s);
    WeightSet sum = sumset_weights(s.weights, s.weights, s.n);
    BigInt sum_size = class_size(SymmetricClass(s.n, sum));
    long lower = ceil_log2(size);
    long upper = sum_size <= 1 ? lower : floor_log2(sum_size - 1) + 1;
    return BoundsReport{s.n, std::move(size), std::move(sum_size), lower, upper};
}

double entropy_raw(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("entropy argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy(double x) {
    if (x < 0.0 || x > 1.0) throw DomainError("entropy argument outside [0,1]");
    if (x > 0.5) return 1.0;
    return entropy_raw(x);
}

double conjecture_rate(double alpha, double beta) {
    if (!(0.0 <= alpha && alpha < beta && beta <= 1.0))
        throw DomainError("require 0 <= alpha < beta <= 1");
    double ratio = beta / (1.0 - alpha);
    if (ratio > 1.0) ratio = 1.0; // beta can exceed 1 - alpha; the annulus is then all-dense
    return (1.0 - alpha) * entropy(ratio);
}

} // namespace lbc
