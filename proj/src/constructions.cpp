#include "lbc/constructions.hpp"

#include <bit>

namespace lbc {

namespace {

std::uint64_t low_mask_of(const WeightSet& forbidden, int n) {
    std::uint64_t m = 0;
    for (int w = 0; w <= n; ++w)
        if (forbidden.test(static_cast<std::size_t>(w))) m |= std::uint64_t{1} << w;
    return m;
}

// Embeds a basis over `coords.size()` coordinates into length n at the given
// 1-based coordinate positions (increasing).
std::vector<BitVector> embed_rows(const EchelonBasis& inner, const std::vector<int>& coords,
                                  int n) {
    std::vector<BitVector> out;
    for (const auto& row : inner.rows()) {
        BitVector v(n);
        for (std::size_t j = 0; j < coords.size(); ++j)
            if (row.get(static_cast<int>(j) + 1)) v.set(coords[j], true);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

EchelonBasis greedy_avoiding(const WeightSet& forbidden, int n, int enumeration_cap) {
    if (forbidden.test(0)) throw InfeasibleZeroWeight();
    if (n < 1) throw DomainError("n must be >= 1");
    if (n > enumeration_cap) throw CapExceeded("greedy scan requires n <= enumeration cap");

    std::uint64_t mask = low_mask_of(forbidden, n);
    std::vector<std::uint64_t> span{0};
    std::vector<bool> in_span(std::size_t{1} << n, false);
    in_span[0] = true;
    std::vector<BitVector> gens;

    std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 1; v < total; ++v) {
        if (in_span[v]) continue;
        bool ok = true;
        for (std::uint64_t s : span) {
            if ((mask >> std::popcount(v ^ s)) & 1) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::size_t old = span.size();
        for (std::size_t i = 0; i < old; ++i) {
            std::uint64_t e = v ^ span[i];
            span.push_back(e);
            in_span[e] = true;
        }
        gens.emplace_back(n, v);
    }
    return EchelonBasis(n, gens);
}

EchelonBasis zero_pad(int a, int b, int n, const EchelonBasis& inner, int enumeration_cap) {
    if (n < 1 || a < 1 || a > b || b > n) throw RadiusOutOfRange("require 1 <= a <= b <= n");
    if (inner.ambient_dim() != n - a + 1)
        throw DomainError("inner basis must live on n - a + 1 coordinates");
    if (inner.dim() > 0 && min_nonzero_weight(inner, enumeration_cap) <= b)
        throw InnerTooShallow("inner subspace contains a nonzero element of weight <= b");

    std::vector<BitVector> gens;
    for (int i = 1; i <= a - 1; ++i) {
        BitVector e(n);
        e.set(i, true);
        gens.push_back(std::move(e));
    }
    std::vector<int> coords;
    for (int j = a; j <= n; ++j) coords.push_back(j);
    for (auto& row : embed_rows(inner, coords, n)) gens.push_back(std::move(row));
    return EchelonBasis(n, gens);
}

EchelonBasis even_weight_basis(int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    std::vector<BitVector> gens;
    for (int i = 1; i < n; ++i) {
        BitVector v(n);
        v.set(i, true);
        v.set(n, true);
        gens.push_back(std::move(v));
    }
    return EchelonBasis(n, gens);
}

EchelonBasis construct_V(int n, int d) {
    if (d < 1 || n < 1) throw DomainError("require n, d >= 1");
    int blocks = n / d;
    if (blocks < 2) throw BlockCountTooSmall("floor(n/d) must be >= 2");
    std::vector<BitVector> gens;
    for (int j = 1; j < blocks; ++j) {
        // block j plus the last block: 2d set coordinates, so every span
        // element toggles an even number of blocks
        BitVector v(n);
        for (int r = 1; r <= d; ++r) {
            v.set(d * (j - 1) + r, true);
            v.set(d * (blocks - 1) + r, true);
        }
        gens.push_back(std::move(v));
    }
    return EchelonBasis(n, gens);
}

namespace {

std::vector<int> free_coords_W(int n, int d) {
    int blocks = n / d;
    std::vector<int> coords;
    for (int j = 1; j <= blocks; ++j)
        for (int r = 1; r <= d / 2; ++r) coords.push_back(d * (j - 1) + r);
    for (int i = d * blocks + 1; i <= n; ++i) coords.push_back(i);
    return coords;
}

} // namespace

int dim_W(int n, int d) { return (d / 2) * (n / d) + n - d * (n / d); }

EchelonBasis construct_W(int n, int d) {
    if (d < 1 || n < 1) throw DomainError("require n, d >= 1");
    std::vector<BitVector> gens;
    for (int c : free_coords_W(n, d)) {
        BitVector v(n);
        v.set(c, true);
        gens.push_back(std::move(v));
    }
    return EchelonBasis(n, gens);
}

EchelonBasis construct_Wprime(int n, int d, int b, Solver& solver, bool* exact) {
    if (d < 1 || n < 1) throw DomainError("require n, d >= 1");
    if (b < 0 || b > n) throw RadiusOutOfRange("require 0 <= b <= n");
    std::vector<int> coords = free_coords_W(n, d);
    int f = static_cast<int>(coords.size());
    if (exact) *exact = true;
    if (f == 0) return EchelonBasis(n);
    if (b == 0) return construct_W(n, d);

    WeightSet forbidden = weight_interval(1, std::min(b, f));
    if (f <= 14) {
        SearchResult inner = solver.max_avoiding_subspace(forbidden, f);
        if (exact) *exact = inner.status == SearchStatus::Optimal;
        return EchelonBasis(n, embed_rows(inner.witness, coords, n));
    }
    if (exact) *exact = false;
    return EchelonBasis(n, embed_rows(greedy_avoiding(forbidden, f), coords, n));
}

CounterexampleParts combine_V_Wprime(int n, int d, int b, int a, Solver& solver) {
    if (n < 1 || a < 1 || a > b || b > n) throw RadiusOutOfRange("require 1 <= a <= b <= n");
    for (int m = 2 * d; m <= b; m += 2 * d)
        if (m >= a)
            throw ForbiddenMultiple("multiple of 2d " + std::to_string(m) + " lies in [a,b]");

    EchelonBasis V = construct_V(n, d);
    EchelonBasis W = construct_W(n, d);
    bool exact = false;
    EchelonBasis Wp = construct_Wprime(n, d, b, solver, &exact);

    std::vector<BitVector> gens = V.rows();
    for (const auto& r : Wp.rows()) gens.push_back(r);
    EchelonBasis combined(n, gens);
    if (combined.dim() != V.dim() + Wp.dim())
        throw std::logic_error("V and W' are not in direct sum");
    if (!verify_avoiding(combined, weight_interval(a, b)))
        throw std::logic_error("combined basis fails to avoid the annulus");

    int implied_upper = n - combined.dim();
    return CounterexampleParts{n,
                               d,
                               b,
                               a,
                               std::move(V),
                               std::move(W),
                               std::move(Wp),
                               std::move(combined),
                               exact,
                               implied_upper};
}

} // namespace lbc
