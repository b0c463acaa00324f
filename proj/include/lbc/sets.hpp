#pragma once

#include <bitset>
#include <boost/multiprecision/cpp_int.hpp>

#include "lbc/gf2.hpp"

namespace lbc {

using BigInt = boost::multiprecision::cpp_int;

// Set of permitted Hamming weights, as a mask over 0..n (n <= 512).
using WeightSet = std::bitset<kMaxLength + 1>;

WeightSet weight_interval(int a, int b); // {a..b}; empty when a > b

// Weight-defined subset of {0,1}^n; membership depends only on w(x).
struct SymmetricClass {
    int n;
    WeightSet weights;

    SymmetricClass(int n, WeightSet weights);

    bool member(const BitVector& x) const;
    bool empty() const { return weights.none(); }
};

// A(a,b,n) = {x : a <= w(x) <= b}. a > b designates the empty annulus.
struct Annulus {
    int n;
    int a;
    int b;

    SymmetricClass as_class() const;
    bool empty() const { return a > b; }
};

Annulus make_annulus(int a, int b, int n);

// Pair of disjoint symmetric classes over the same n.
struct ClassPair {
    SymmetricClass s1;
    SymmetricClass s2;

    ClassPair(SymmetricClass s1, SymmetricClass s2);
};

BigInt binomial(int n, int k);

// Exact cardinality: sum of C(n, w) over permitted weights.
BigInt class_size(const SymmetricClass& s);

// Exact set of achievable weights of x1 + x2 with w(x1) in w1, w(x2) in w2.
// For single weights the rule is w1 + w2 - 2i over max(0, w1+w2-n) <= i <= min(w1, w2).
WeightSet sumset_weights(const WeightSet& w1, const WeightSet& w2, int n);

SymmetricClass sumset_class(const ClassPair& p);

} // namespace lbc
