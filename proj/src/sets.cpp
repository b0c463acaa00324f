#include "lbc/sets.hpp"

#include <algorithm>

namespace lbc {

WeightSet weight_interval(int a, int b) {
    WeightSet s;
    if (a < 0) a = 0;
    for (int w = a; w <= b; ++w) s.set(static_cast<std::size_t>(w));
    return s;
}

SymmetricClass::SymmetricClass(int n_, WeightSet weights_) : n(n_), weights(weights_) {
    if (n < 1 || n > kMaxLength) throw DomainError("ambient dimension out of range [1, 512]");
    for (int w = n + 1; w <= kMaxLength; ++w)
        if (weights.test(static_cast<std::size_t>(w)))
            throw DomainError("permitted weight exceeds the ambient dimension");
}

bool SymmetricClass::member(const BitVector& x) const {
    if (x.length() != n) throw DomainError("length mismatch");
    return weights.test(static_cast<std::size_t>(x.weight()));
}

SymmetricClass Annulus::as_class() const {
    return SymmetricClass(n, weight_interval(a, std::min(b, n)));
}

Annulus make_annulus(int a, int b, int n) {
    if (n < 1 || n > kMaxLength) throw RadiusOutOfRange("n out of range [1, 512]");
    if (a < 0 || b > n) throw RadiusOutOfRange("annulus radii out of range");
    return Annulus{n, a, b};
}

ClassPair::ClassPair(SymmetricClass s1_, SymmetricClass s2_) : s1(std::move(s1_)), s2(std::move(s2_)) {
    if (s1.n != s2.n) throw DomainError("class pair over different ambient dimensions");
    if ((s1.weights & s2.weights).any())
        throw NotDisjoint("class weight sets overlap");
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt class_size(const SymmetricClass& s) {
    BigInt total = 0;
    for (int w = 0; w <= s.n; ++w)
        if (s.weights.test(static_cast<std::size_t>(w))) total += binomial(s.n, w);
    return total;
}

WeightSet sumset_weights(const WeightSet& w1, const WeightSet& w2, int n) {
    WeightSet out;
    for (int u = 0; u <= n; ++u) {
        if (!w1.test(static_cast<std::size_t>(u))) continue;
        for (int v = 0; v <= n; ++v) {
            if (!w2.test(static_cast<std::size_t>(v))) continue;
            int lo = std::max(0, u + v - n);
            int hi = std::min(u, v);
            for (int i = lo; i <= hi; ++i) out.set(static_cast<std::size_t>(u + v - 2 * i));
        }
    }
    return out;
}

SymmetricClass sumset_class(const ClassPair& p) {
    return SymmetricClass(p.s1.n, sumset_weights(p.s1.weights, p.s2.weights, p.s1.n));
}

} // namespace lbc
