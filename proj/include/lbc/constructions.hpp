#pragma once

#include "lbc/solver.hpp"

namespace lbc {

// Subspaces of the counterexample family: V is block-constant with weight
// divisible by 2d, W vanishes on the second half of every block, W' is the
// densest-distance subspace of W, and `combined` is the direct sum V + W'.
struct CounterexampleParts {
    int n;
    int d;
    int b;
    int a;
    EchelonBasis V;
    EchelonBasis W;
    EchelonBasis Wprime;
    EchelonBasis combined;
    bool wprime_exact;     // false when the greedy fallback produced W'
    int implied_upper;     // m*(a,b,n) <= n - dim(combined)
};

// Greedy packing: scans candidates in increasing integer order and keeps every
// vector whose extended span stays clear of the forbidden weights. Guarantees
// dim >= n - floor(log2 |F|) - 1, |F| the number of forbidden vectors.
EchelonBasis greedy_avoiding(const WeightSet& forbidden, int n,
                             int enumeration_cap = kDefaultEnumerationCap);

// a-1 unit vectors plus `inner` embedded on coordinates a..n; avoids A(a,b,n)
// provided every nonzero element of `inner` has weight > b.
EchelonBasis zero_pad(int a, int b, int n, const EchelonBasis& inner,
                      int enumeration_cap = kDefaultEnumerationCap);

// dim n-1, every nonzero element of even weight; avoids A(a,a,n) for odd a.
EchelonBasis even_weight_basis(int n);

// Block-constant vectors with weight divisible by 2d; dim = floor(n/d) - 1.
EchelonBasis construct_V(int n, int d);

// Vectors vanishing on the trailing ceil(d/2) positions of each block;
// dim = floor(d/2)*floor(n/d) + n - d*floor(n/d).
EchelonBasis construct_W(int n, int d);

int dim_W(int n, int d);

// Maximal subspace of W with min nonzero weight > b. Exact via the solver
// when the free-coordinate count allows it, else greedy; `exact` reports which.
EchelonBasis construct_Wprime(int n, int d, int b, Solver& solver, bool* exact = nullptr);

// Direct sum V + W', which avoids A(a,b,n) whenever no multiple of 2d lies in
// [a,b].
CounterexampleParts combine_V_Wprime(int n, int d, int b, int a, Solver& solver);

} // namespace lbc
