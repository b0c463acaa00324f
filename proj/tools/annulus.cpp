// Command-line surface for the annulus critical-problem toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lbc/bounds.hpp"
#include "lbc/classify.hpp"
#include "lbc/constructions.hpp"
#include "lbc/io.hpp"
#include "lbc/solver.hpp"

using json = nlohmann::ordered_json;

namespace {

// "a..b" or "w1,w2,...".
lbc::WeightSet parse_weight_set(const std::string& spec, int n) {
    lbc::WeightSet out;
    auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw lbc::FormatError("bad weight `" + s + "`");
        if (v < 0 || v > n) throw lbc::RadiusOutOfRange("weight " + s + " outside 0..n");
        return v;
    };
    if (auto dots = spec.find(".."); dots != std::string::npos) {
        int a = parse_int(spec.substr(0, dots));
        int b = parse_int(spec.substr(dots + 2));
        out = lbc::weight_interval(a, b);
    } else {
        std::size_t start = 0;
        while (start <= spec.size()) {
            std::size_t comma = spec.find(',', start);
            std::string tok = spec.substr(start, comma == std::string::npos ? comma : comma - start);
            if (tok.empty()) throw lbc::FormatError("empty weight token");
            out.set(static_cast<std::size_t>(parse_int(tok)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

std::pair<int, int> parse_range(const std::string& spec) {
    if (auto dots = spec.find(".."); dots != std::string::npos)
        return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
    int v = std::stoi(spec);
    return {v, v};
}

std::string weight_set_string(const lbc::WeightSet& ws, int n) {
    std::string s;
    for (int w = 0; w <= n; ++w)
        if (ws.test(static_cast<std::size_t>(w))) {
            if (!s.empty()) s += ',';
            s += std::to_string(w);
        }
    return s;
}

json result_json(const lbc::SearchResult& r) {
    return json{{"n", r.n},
                {"k", r.k},
                {"m_star", r.m_star},
                {"status", lbc::to_string(r.status)},
                {"nodes", r.nodes_explored},
                {"sparsest_witness_weight", r.sparsest_witness_weight}};
}

struct CommonOpts {
    int workers = 1;
    std::uint64_t budget = 1'000'000'000;
    std::optional<double> time_limit;
    unsigned seed = 0;
};

lbc::SearchConfig make_config(const CommonOpts& c) {
    lbc::SearchConfig cfg;
    cfg.worker_count = c.workers;
    cfg.node_budget = c.budget;
    cfg.time_limit_seconds = c.time_limit;
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"Critical-problem solver for Hamming annuli over GF(2)"};
    app.require_subcommand(1);

    CommonOpts common;
    if (const char* env = std::getenv("LBC_NODE_BUDGET")) common.budget = std::stoull(env);
    app.add_option("--workers", common.workers, "parallel search workers")->capture_default_str();
    app.add_option("--budget", common.budget, "search node budget")->capture_default_str();
    app.add_option("--time-limit", common.time_limit, "wall-clock limit in seconds");
    app.add_option("--seed", common.seed, "seed for randomized helpers (recorded only)");

    // mstar
    auto* mstar = app.add_subcommand("mstar", "compute m*(a,b,n) exactly");
    int ma = 0, mb = 0, mn = 0;
    std::string witness_path;
    mstar->add_option("--a", ma)->required();
    mstar->add_option("--b", mb)->required();
    mstar->add_option("--n", mn)->required();
    mstar->add_option("--emit-witness", witness_path, "write the witness basis to a file");

    // table
    auto* table = app.add_subcommand("table", "sweep m*(a,b,n) over ranges");
    std::string tn, ta = "1..512", tb = "1..512", tformat = "jsonl";
    bool tcheck = false;
    table->add_option("--n", tn)->required();
    table->add_option("--a", ta);
    table->add_option("--b", tb);
    table->add_option("--format", tformat)->check(CLI::IsMember({"jsonl", "tsv"}));
    table->add_flag("--check", tcheck, "cross-check the table against the known identities");

    // construct
    auto* construct = app.add_subcommand("construct", "emit a certified basis construction");
    std::string family, forbidden_spec, out_path;
    int cn = 0, cd = 2, cb = 0, ca = 1;
    construct->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"greedy", "zeropad", "parity", "V", "W", "Wprime", "combined"}));
    construct->add_option("--n", cn)->required();
    construct->add_option("--d", cd);
    construct->add_option("--b", cb);
    construct->add_option("--a", ca);
    construct->add_option("--forbidden", forbidden_spec, "weight set, `a..b` or comma list");
    construct->add_option("--out", out_path, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "check that a matrix kernel avoids a weight set");
    std::string vmatrix, vforbidden;
    verify->add_option("--matrix", vmatrix)->required();
    verify->add_option("--forbidden", vforbidden)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "build a linear classifier and decode points");
    int kn = 0;
    std::string class1_spec, class2_spec, strategy_name = "exact", emit_matrix, batch_path;
    classify->add_option("--n", kn)->required();
    classify->add_option("--class1", class1_spec)->required();
    classify->add_option("--class2", class2_spec)->required();
    classify->add_option("--strategy", strategy_name)
        ->check(CLI::IsMember({"exact", "greedy", "zeropad"}));
    classify->add_option("--emit-matrix", emit_matrix);
    classify->add_option("--batch", batch_path, "file of bitstrings to decode, `-` for stdin");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate the compression-dimension sandwich");
    int bn = 0;
    std::string bset;
    std::optional<double> balpha, bbeta;
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--set", bset)->required();
    bounds->add_option("--alpha", balpha);
    bounds->add_option("--beta", bbeta);

    // counterexample
    auto* counter = app.add_subcommand("counterexample", "run the V + W' pipeline");
    int xn = 0, xd = 2, xa = 0, xb = 0;
    counter->add_option("--n", xn)->required();
    counter->add_option("--d", xd);
    counter->add_option("--a", xa)->required();
    counter->add_option("--b", xb)->required();

    CLI11_PARSE(app, argc, argv);

    lbc::Solver solver(make_config(common));
    int exit_code = 0;

    if (mstar->parsed()) {
        lbc::SearchResult r = solver.m_star(ma, mb, mn);
        json j = result_json(r);
        j["a"] = ma;
        j["b"] = mb;
        std::cout << j.dump(2) << "\n";
        if (!witness_path.empty()) lbc::write_matrix_file(witness_path, r.witness.as_matrix());
        if (r.status != lbc::SearchStatus::Optimal) exit_code = 2;
    } else if (table->parsed()) {
        auto records = solver.build_table(parse_range(ta), parse_range(tb), parse_range(tn));
        for (const auto& r : records) {
            if (tformat == "tsv") {
                std::cout << r.a << '\t' << r.b << '\t' << r.n << '\t' << r.k << '\t' << r.m_star
                          << '\t' << lbc::to_string(r.status) << '\t' << r.nodes << "\n";
            } else {
                std::cout << json{{"a", r.a},       {"b", r.b},
                                  {"n", r.n},       {"k", r.k},
                                  {"m_star", r.m_star}, {"status", lbc::to_string(r.status)},
                                  {"nodes", r.nodes}}
                                 .dump()
                          << "\n";
            }
            if (r.status != lbc::SearchStatus::Optimal) exit_code = 2;
        }
        if (tcheck) {
            for (const auto& g : lbc::prop1_gaps(records))
                std::cerr << "note " << g.rule << " at (" << g.a << "," << g.b << "," << g.n
                          << "): " << g.detail << "\n";
            auto violations = lbc::check_relations(records, solver);
            for (const auto& v : violations)
                std::cerr << "violation " << v.rule << " at (" << v.a << "," << v.b << "," << v.n
                          << "): " << v.detail << "\n";
            std::cerr << violations.size() << " violation(s)\n";
            if (!violations.empty()) exit_code = 1;
        }
    } else if (construct->parsed()) {
        lbc::EchelonBasis basis(cn > 0 ? cn : 1);
        if (family == "greedy") {
            basis = lbc::greedy_avoiding(parse_weight_set(forbidden_spec, cn), cn);
        } else if (family == "zeropad") {
            lbc::EchelonBasis inner = lbc::greedy_avoiding(
                lbc::weight_interval(1, std::min(cb, cn - ca + 1)), cn - ca + 1);
            basis = lbc::zero_pad(ca, cb, cn, inner);
        } else if (family == "parity") {
            basis = lbc::even_weight_basis(cn);
        } else if (family == "V") {
            basis = lbc::construct_V(cn, cd);
        } else if (family == "W") {
            basis = lbc::construct_W(cn, cd);
        } else if (family == "Wprime") {
            bool exact = false;
            basis = lbc::construct_Wprime(cn, cd, cb, solver, &exact);
            std::cerr << (exact ? "exact" : "greedy") << " W'\n";
        } else {
            lbc::CounterexampleParts parts = lbc::combine_V_Wprime(cn, cd, cb, ca, solver);
            basis = parts.combined;
            std::cerr << (parts.wprime_exact ? "exact" : "greedy") << " W'\n";
        }
        std::string text = lbc::write_matrix(basis.as_matrix());
        if (out_path.empty())
            std::cout << text;
        else
            std::ofstream(out_path, std::ios::binary) << text;
    } else if (verify->parsed()) {
        lbc::BitMatrix m = lbc::read_matrix_file(vmatrix);
        lbc::EchelonBasis kernel = lbc::kernel_basis(m);
        lbc::WeightSet forbidden = parse_weight_set(vforbidden, m.col_count());
        forbidden.reset(0);
        bool ok = lbc::verify_avoiding(kernel, forbidden);
        std::cout << json{{"n", m.col_count()},
                          {"kernel_dim", kernel.dim()},
                          {"avoids", ok}}
                         .dump(2)
                  << "\n";
    } else if (classify->parsed()) {
        lbc::ClassPair pair(lbc::SymmetricClass(kn, parse_weight_set(class1_spec, kn)),
                            lbc::SymmetricClass(kn, parse_weight_set(class2_spec, kn)));
        lbc::Strategy strategy = strategy_name == "exact"    ? lbc::Strategy::Exact
                                 : strategy_name == "greedy" ? lbc::Strategy::Greedy
                                                             : lbc::Strategy::ZeroPad;
        lbc::Classifier c = lbc::build_classifier(pair, strategy, solver);
        if (!emit_matrix.empty()) lbc::write_matrix_file(emit_matrix, c.M);
        if (batch_path.empty()) {
            std::cout << json{{"n", kn},
                              {"rank", c.rank},
                              {"strategy", lbc::to_string(c.strategy)},
                              {"sumset_weights", weight_set_string(c.sumset.weights, kn)},
                              {"valid", lbc::validate_classifier(c)}}
                             .dump(2)
                      << "\n";
        } else {
            std::ifstream file;
            std::istream* in = &std::cin;
            if (batch_path != "-") {
                file.open(batch_path);
                if (!file) throw lbc::FormatError("cannot open " + batch_path);
                in = &file;
            }
            std::string line;
            while (std::getline(*in, line)) {
                if (line.empty()) continue;
                lbc::BitVector x = lbc::parse_bitvector(line);
                lbc::BitVector y = lbc::apply(c.M, x);
                std::cout << lbc::to_string(lbc::classify_point(c, y)) << "\n";
            }
        }
    } else if (bounds->parsed()) {
        lbc::SymmetricClass s(bn, parse_weight_set(bset, bn));
        lbc::BoundsReport r = lbc::lemma1_bounds(s);
        json j{{"n", r.n},
               {"set_size", r.set_size.str()},
               {"sumset_size", r.sumset_size.str()},
               {"lower", r.lower},
               {"upper", r.upper},
               {"rate_model", "GV-proxy"}};
        if (balpha && bbeta) {
            j["alpha"] = *balpha;
            j["beta"] = *bbeta;
            j["conjectured_rate"] = lbc::conjecture_rate(*balpha, *bbeta);
        }
        std::cout << j.dump(2) << "\n";
    } else if (counter->parsed()) {
        lbc::CounterexampleParts parts = lbc::combine_V_Wprime(xn, xd, xb, xa, solver);
        json j{{"n", xn},
               {"d", xd},
               {"a", xa},
               {"b", xb},
               {"dim_V", parts.V.dim()},
               {"dim_W", parts.W.dim()},
               {"dim_Wprime", parts.Wprime.dim()},
               {"dim_combined", parts.combined.dim()},
               {"wprime_mode", parts.wprime_exact ? "exact" : "greedy"},
               {"implied_upper_bound", parts.implied_upper},
               {"verified", true}};
        if (xd == 2) {
            int half = (xn + 1) / 2;
            int inner_b = std::min(xb, half);
            lbc::SearchResult inner = solver.m_star(1, inner_b, half);
            j["rhs_1_plus_mstar_1_b_halfn"] = 1 + inner.m_star;
            j["rhs_mode"] = lbc::to_string(inner.status);
            if (xn <= 14) {
                lbc::SearchResult exact = solver.m_star(xa, xb, xn);
                j["exact_m_star"] = exact.m_star;
                j["exact_mode"] = lbc::to_string(exact.status);
            }
        }
        std::cout << j.dump(2) << "\n";
    }

    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lbc::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const lbc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
