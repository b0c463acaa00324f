#include "lbc/classify.hpp"

#include <algorithm>
#include <optional>

namespace lbc {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Exact: return "exact";
        case Strategy::Greedy: return "greedy";
        case Strategy::ZeroPad: return "zeropad";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Class1: return "class1";
        case Verdict::Class2: return "class2";
        case Verdict::NeitherClass: return "neither";
        case Verdict::Unreachable: return "unreachable";
    }
    return "?";
}

Classifier build_classifier(const ClassPair& p, Strategy strategy, Solver& solver) {
    SymmetricClass sum = sumset_class(p);
    int n = sum.n;
    if (sum.weights.test(0))
        throw NotDisjoint("sumset contains the zero vector; the classes intersect");

    EchelonBasis avoiding(n);
    switch (strategy) {
        case Strategy::Exact:
            avoiding = solver.max_avoiding_subspace(sum.weights, n).witness;
            break;
        case Strategy::Greedy:
            avoiding = greedy_avoiding(sum.weights, n, solver.config().enumeration_cap);
            break;
        case Strategy::ZeroPad: {
            int a = 0, b = 0;
            for (int w = 1; w <= n; ++w)
                if (sum.weights.test(static_cast<std::size_t>(w))) {
                    if (a == 0) a = w;
                    b = w;
                }
            int inner_n = n - a + 1;
            EchelonBasis inner =
                greedy_avoiding(weight_interval(1, std::min(b, inner_n)), inner_n,
                                solver.config().enumeration_cap);
            avoiding = zero_pad(a, b, n, inner, solver.config().enumeration_cap);
            break;
        }
    }

    // Measurement rows: canonical basis of the orthogonal complement.
    EchelonBasis complement = kernel_basis(avoiding.as_matrix());
    BitMatrix m = complement.as_matrix();
    EchelonBasis kernel = kernel_basis(m);
    if (kernel != avoiding) throw std::logic_error("kernel round-trip mismatch");
    int rank_m = m.row_count();
    return Classifier{p, std::move(m), strategy, std::move(sum), rank_m, std::move(kernel)};
}

namespace {

// Solves Mx = y with free variables set to zero, via an augmented echelon
// form; empty result means y is outside the image.
std::optional<BitVector> solve_particular(const BitMatrix& m, const BitVector& y) {
    int n = m.col_count();
    std::vector<BitVector> ech;
    std::vector<int> pivots;
    for (int i = 0; i < m.row_count(); ++i) {
        BitVector v(n + 1);
        for (int j = 1; j <= n; ++j) v.set(j, m.row(i).get(j));
        v.set(n + 1, y.get(i + 1));
        for (std::size_t r = 0; r < ech.size(); ++r)
            if (v.get(pivots[r])) v ^= ech[r];
        int p = v.lowest_coord();
        if (p == 0) continue;
        if (p == n + 1) return std::nullopt;
        for (auto& r : ech)
            if (r.get(p)) r ^= v;
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
        pivots.insert(pos, p);
        ech.insert(ech.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    }
    BitVector x(n);
    for (std::size_t r = 0; r < ech.size(); ++r) x.set(pivots[r], ech[r].get(n + 1));
    return x;
}

} // namespace

Verdict classify_point(const Classifier& c, const BitVector& y, int enumeration_cap) {
    if (y.length() != c.M.row_count())
        throw DomainError("measurement length must equal the number of matrix rows");
    auto x0 = solve_particular(c.M, y);
    if (!x0) return Verdict::Unreachable;

    bool hit1 = false, hit2 = false;
    for_each_span_element(
        c.kernel,
        [&](const BitVector& k) {
            BitVector x = *x0 ^ k;
            if (c.pair.s1.member(x)) hit1 = true;
            if (c.pair.s2.member(x)) hit2 = true;
        },
        enumeration_cap);
    if (hit1 && hit2) throw std::logic_error("coset meets both classes; classifier not separable");
    if (hit1) return Verdict::Class1;
    if (hit2) return Verdict::Class2;
    return Verdict::NeitherClass;
}

bool validate_classifier(const Classifier& c, int enumeration_cap) {
    WeightSet nonzero = c.sumset.weights;
    nonzero.reset(0);
    return verify_avoiding(kernel_basis(c.M), nonzero, enumeration_cap);
}

} // namespace lbc
