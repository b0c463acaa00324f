#pragma once

#include "lbc/constructions.hpp"
#include "lbc/solver.hpp"

namespace lbc {

enum class Strategy { Exact, Greedy, ZeroPad };

// NeitherClass: the coset is reachable but meets neither class (input outside
// the model). Unreachable: y is not in the image of M at all.
enum class Verdict { Class1, Class2, NeitherClass, Unreachable };

std::string to_string(Strategy s);
std::string to_string(Verdict v);

// A separable measurement matrix for a pair of symmetric classes: ker(M) is a
// subspace avoiding the nonzero sumset weights, and M's rows are the canonical
// echelon basis of its orthogonal complement.
struct Classifier {
    ClassPair pair;
    BitMatrix M;
    Strategy strategy;
    SymmetricClass sumset;
    int rank;
    EchelonBasis kernel;
};

Classifier build_classifier(const ClassPair& p, Strategy strategy, Solver& solver);

// Decodes a measurement y of length rank(M): solves Mx = y and scans the
// coset x0 + ker(M) for class membership. Separability guarantees at most one
// class intersects the coset.
Verdict classify_point(const Classifier& c, const BitVector& y,
                       int enumeration_cap = kDefaultEnumerationCap);

// True iff ker(M) avoids the nonzero sumset weights.
bool validate_classifier(const Classifier& c, int enumeration_cap = kDefaultEnumerationCap);

} // namespace lbc
