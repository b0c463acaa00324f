#include "lbc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "lbc/bounds.hpp"

namespace lbc {

std::string to_string(SearchStatus s) {
    return s == SearchStatus::Optimal ? "optimal" : "lower_bound_only";
}

bool verify_avoiding(const EchelonBasis& b, const WeightSet& forbidden, int enumeration_cap) {
    bool ok = true;
    for_each_span_element(
        b,
        [&](const BitVector& v) {
            if (!v.zero() && forbidden.test(static_cast<std::size_t>(v.weight()))) ok = false;
        },
        enumeration_cap);
    return ok;
}

namespace {

using Pattern = std::uint32_t;

std::uint64_t mask_of(const WeightSet& forbidden, int n) {
    std::uint64_t m = 0;
    for (int w = 0; w <= n; ++w)
        if (forbidden.test(static_cast<std::size_t>(w))) m |= std::uint64_t{1} << w;
    return m;
}

EchelonBasis basis_from_patterns(const std::vector<Pattern>& rows, int n) {
    std::vector<BitVector> gens;
    gens.reserve(rows.size());
    for (Pattern r : rows) gens.emplace_back(n, r);
    return EchelonBasis(n, gens);
}

// Shared search state; workers only ever improve `best` and append nodes.
struct Shared {
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::mutex witness_mu;
    std::vector<Pattern> witness_rows; // guarded by witness_mu
    int witness_dim = -1;              // guarded by witness_mu

    std::uint64_t node_budget;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

class Search {
public:
    Search(std::uint64_t forbidden_mask, int n, Shared& shared)
        : forbidden_(forbidden_mask), n_(n), shared_(shared) {}

    // One DFS step: `span` holds all 2^dim current span elements, `rows` the
    // echelon rows (pivot order decreasing as added), `cands` the admissible
    // reduced candidates in increasing integer value.
    void dfs(std::vector<Pattern>& span, std::vector<Pattern>& rows,
             const std::vector<Pattern>& cands) {
        if (count_node()) return;
        report(rows);
        int dim = static_cast<int>(rows.size());
        // Distinct available pivot columns bound the reachable dimension.
        Pattern lows = 0;
        for (Pattern c : cands) lows |= c & (~c + 1);
        if (dim + std::popcount(lows) <= shared_.best.load(std::memory_order_relaxed)) return;

        std::vector<Pattern> child;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            Pattern v = cands[i];
            int pivot = std::countr_zero(v);
            if (dim + pivot + 1 <= shared_.best.load(std::memory_order_relaxed)) continue;
            if (shared_.out_of_budget.load(std::memory_order_relaxed)) return;

            child.clear();
            if (!filter_candidates(cands, v, span, child)) {
                // no admissible extensions below this pivot; still descend to
                // record the dim+1 subspace
            }
            std::size_t old = span.size();
            for (std::size_t s = 0; s < old; ++s) span.push_back(span[s] ^ v);
            rows.push_back(v);
            dfs(span, rows, child);
            rows.pop_back();
            span.resize(old);
        }
    }

    // Keeps u from `cands` that stay reduced (pivot below v's, zero in v's
    // pivot column) and admissible against the extended span (u + v + span
    // weights all allowed). Returns false when empty.
    bool filter_candidates(const std::vector<Pattern>& cands, Pattern v,
                           const std::vector<Pattern>& span, std::vector<Pattern>& out) const {
        Pattern pivot_bit = v & (~v + 1);
        for (Pattern u : cands) {
            if (u & pivot_bit) continue;            // v's pivot column is no longer free
            if ((u & (pivot_bit - 1)) == 0) continue; // pivot must lie strictly below v's
            bool ok = true;
            for (Pattern s : span) {
                if ((forbidden_ >> std::popcount(u ^ v ^ s)) & 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.push_back(u);
        }
        return !out.empty();
    }

    std::vector<Pattern> root_candidates() const {
        std::vector<Pattern> out;
        Pattern total = Pattern{1} << n_;
        for (Pattern v = 1; v < total; ++v)
            if (!((forbidden_ >> std::popcount(v)) & 1)) out.push_back(v);
        return out;
    }

private:
    bool count_node() {
        std::uint64_t c = shared_.nodes.fetch_add(1, std::memory_order_relaxed);
        if (c >= shared_.node_budget) {
            shared_.out_of_budget.store(true, std::memory_order_relaxed);
            return true;
        }
        if (shared_.deadline && (c & 1023) == 0 &&
            std::chrono::steady_clock::now() > *shared_.deadline) {
            shared_.out_of_budget.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void report(const std::vector<Pattern>& rows) {
        int dim = static_cast<int>(rows.size());
        int cur = shared_.best.load(std::memory_order_relaxed);
        while (dim > cur &&
               !shared_.best.compare_exchange_weak(cur, dim, std::memory_order_relaxed)) {
        }
        if (dim > cur) {
            std::lock_guard lock(shared_.witness_mu);
            if (dim > shared_.witness_dim) {
                shared_.witness_dim = dim;
                shared_.witness_rows = rows;
            }
        }
    }

    std::uint64_t forbidden_;
    int n_;
    Shared& shared_;
};

} // namespace

Solver::Solver(SearchConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.worker_count < 1) throw DomainError("worker_count must be >= 1");
    if (cfg_.node_budget == 0) throw DomainError("node_budget must be positive");
}

SearchResult Solver::max_avoiding_subspace(const WeightSet& forbidden, int n) {
    if (n < 1) throw DomainError("n must be >= 1");
    if (n > kMaxSolverN) throw CapExceeded("exact search supports n <= 24");
    if (forbidden.test(0)) throw InfeasibleZeroWeight();

    std::uint64_t mask = mask_of(forbidden, n);
    auto key = std::make_pair(mask, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    SearchResult result{n, WeightSet{}, 0, 0, EchelonBasis(n), SearchStatus::Optimal, 0, 0};
    for (int w = 0; w <= n; ++w)
        if ((mask >> w) & 1) result.forbidden.set(static_cast<std::size_t>(w));

    if (mask == 0) {
        // Vacuous constraint: the full space avoids nothing.
        std::vector<BitVector> id;
        for (int i = 1; i <= n; ++i) {
            BitVector e(n);
            e.set(i, true);
            id.push_back(e);
        }
        result.k = n;
        result.m_star = 0;
        result.witness = EchelonBasis(n, id);
        result.sparsest_witness_weight = 1;
        memo_.emplace(key, result);
        return result;
    }

    Shared shared;
    shared.node_budget = cfg_.node_budget;
    if (cfg_.time_limit_seconds)
        shared.deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(*cfg_.time_limit_seconds));
    if (cfg_.initial_lower_bound && *cfg_.initial_lower_bound > 0)
        shared.best.store(*cfg_.initial_lower_bound - 1);

    Search search(mask, n, shared);
    std::vector<Pattern> roots = search.root_candidates();

    auto run_root = [&](std::size_t idx) {
        Pattern v = roots[idx];
        std::vector<Pattern> span{0, v};
        std::vector<Pattern> rows{v};
        std::vector<Pattern> child;
        search.filter_candidates(roots, v, {0}, child);
        search.dfs(span, rows, child);
    };

    // The empty subspace is the root node.
    shared.nodes.fetch_add(1);
    shared.witness_dim = 0;

    if (cfg_.worker_count == 1) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (shared.out_of_budget.load()) break;
            run_root(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < cfg_.worker_count; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= roots.size() || shared.out_of_budget.load()) return;
                    run_root(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    result.k = shared.best.load();
    result.m_star = n - result.k;
    result.status =
        shared.out_of_budget.load() ? SearchStatus::LowerBoundOnly : SearchStatus::Optimal;
    result.nodes_explored = std::min(shared.nodes.load(), shared.node_budget);
    result.witness = basis_from_patterns(shared.witness_rows, n);
    if (result.witness.dim() != result.k)
        throw std::logic_error("witness dimension does not match k");
    if (!verify_avoiding(result.witness, result.forbidden, cfg_.enumeration_cap))
        throw std::logic_error("witness fails verification");
    result.sparsest_witness_weight =
        result.k == 0 ? 0 : min_nonzero_weight(result.witness, cfg_.enumeration_cap);

    if (result.status == SearchStatus::Optimal) memo_.emplace(key, result);
    return result;
}

SearchResult Solver::m_star(int a, int b, int n) {
    if (n < 1 || a < 1 || a > b || b > n) throw RadiusOutOfRange("require 1 <= a <= b <= n");
    return max_avoiding_subspace(weight_interval(a, b), n);
}

std::vector<TableRecord> Solver::build_table(std::pair<int, int> a_range,
                                             std::pair<int, int> b_range,
                                             std::pair<int, int> n_range) {
    std::vector<TableRecord> out;
    for (int n = n_range.first; n <= n_range.second; ++n)
        for (int a = std::max(1, a_range.first); a <= std::min(a_range.second, n); ++a)
            for (int b = std::max(a, b_range.first); b <= std::min(b_range.second, n); ++b) {
                SearchResult r = m_star(a, b, n);
                out.push_back({a, b, n, r.k, r.m_star, r.status, r.nodes_explored});
            }
    return out;
}

namespace {

struct TableIndex {
    std::map<std::tuple<int, int, int>, const TableRecord*> by_key;

    explicit TableIndex(const std::vector<TableRecord>& table) {
        for (const auto& r : table) by_key[{r.a, r.b, r.n}] = &r;
    }

    // b clamped to n: weights above n are unachievable, so the annulus is the same set.
    const TableRecord& at(int a, int b, int n) const {
        auto it = by_key.find({a, std::min(b, n), n});
        if (it == by_key.end() || it->second->status != SearchStatus::Optimal)
            throw MissingDependency("referenced table entry (" + std::to_string(a) + "," +
                                    std::to_string(std::min(b, n)) + "," + std::to_string(n) +
                                    ") absent or not optimal");
        return *it->second;
    }
};

} // namespace

std::vector<RelationViolation> check_relations(const std::vector<TableRecord>& table,
                                               Solver& solver) {
    std::vector<RelationViolation> out;
    TableIndex index(table);
    auto report = [&](const char* rule, const TableRecord& r, std::string detail) {
        out.push_back({rule, r.a, r.b, r.n, std::move(detail)});
    };

    for (const auto& r : table) {
        if (r.status != SearchStatus::Optimal) continue;
        const int a = r.a, b = r.b, n = r.n;

        // (i) translation identity when b >= 2a-2
        if (b >= 2 * a - 2) {
            int rhs = index.at(1, b, n - a + 1).m_star;
            if (r.m_star != rhs)
                report("prop1-equality", r,
                       "m*=" + std::to_string(r.m_star) + " vs m*(1,b,n-a+1)=" + std::to_string(rhs));
        }

        // (ii) sparsest-vector recursion
        if (b >= 2 * a - 2 && a >= 2) {
            int bound = -1;
            for (int s = 1; s <= a - 1; ++s)
                bound = std::max(bound, s + (n - s) - index.at(a - s, b, n - s).m_star);
            if (r.k > bound)
                report("claim1-recursion", r,
                       "k=" + std::to_string(r.k) + " exceeds " + std::to_string(bound));
        }

        // (iii) zero-padding upper bound, unconditionally
        {
            int rhs = index.at(1, b, n - a + 1).m_star;
            if (r.m_star > rhs)
                report("prop3-upper", r,
                       "m*=" + std::to_string(r.m_star) + " > " + std::to_string(rhs));
        }

        // (iv) injectivity sandwich: log2|A| <= m_inj(A) <= floor(log2(|A+A|-1))+1,
        // where m_inj(A) is the solver value for the sumset (A+A) \ {0}.
        {
            SymmetricClass annulus = make_annulus(a, b, n).as_class();
            BigInt size = class_size(annulus);
            WeightSet sum = sumset_weights(annulus.weights, annulus.weights, n);
            BigInt sum_size = class_size(SymmetricClass(n, sum));
            WeightSet nonzero_sum = sum;
            nonzero_sum.reset(0);
            int m_inj = n - solver.max_avoiding_subspace(nonzero_sum, n).k;
            int lower = static_cast<int>(ceil_log2(size));
            int upper = sum_size <= 1 ? lower : static_cast<int>(floor_log2(sum_size - 1)) + 1;
            if (m_inj < lower || m_inj > upper)
                report("lemma1-sandwich", r,
                       "m_inj=" + std::to_string(m_inj) + " outside [" + std::to_string(lower) +
                           "," + std::to_string(upper) + "]");
        }

        // (v) single-coordinate monotonicity along the a=1 line
        if (a == 1 && n >= 2) {
            int lhs = (n - 1) - index.at(1, b, n - 1).m_star + 1;
            if (lhs < r.k)
                report("puncture-monotonicity", r,
                       "k(1,b,n-1)+1=" + std::to_string(lhs) + " < k=" + std::to_string(r.k));
        }
    }
    return out;
}

std::vector<RelationViolation> prop1_gaps(const std::vector<TableRecord>& table) {
    std::vector<RelationViolation> out;
    TableIndex index(table);
    for (const auto& r : table) {
        if (r.status != SearchStatus::Optimal) continue;
        if (r.b >= 2 * r.a - 2) continue;
        const TableRecord* rhs = nullptr;
        try {
            rhs = &index.at(1, r.b, r.n - r.a + 1);
        } catch (const MissingDependency&) {
            continue;
        }
        if (r.m_star != rhs->m_star)
            out.push_back({"prop1-gap", r.a, r.b, r.n,
                           "m*=" + std::to_string(r.m_star) + " vs m*(1,b,n-a+1)=" +
                               std::to_string(rhs->m_star)});
    }
    return out;
}

} // namespace lbc
