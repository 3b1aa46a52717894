// dtcodes: construct, analyze, search, and verify double Toeplitz codes.
//
// Exit codes: 0 success, 1 property violation, 2 usage/parse error,
// 3 budget/infeasible request.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <dtc/dtc.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw dtc::error("cannot open output file '" + path + "'");
    out << text;
}

struct AnalyzeArgs {
    std::string gen_text;
    std::string construction;
    unsigned p = 0;
    unsigned q = 0;
    std::size_t n = 0;
    std::string variant;
    std::size_t i = 0;
    std::string t = "w";
    std::uint64_t budget = dtc::default_budget;
    std::string out;
};

dtc::ToeplitzGen resolve_generator(const AnalyzeArgs& a) {
    if (!a.gen_text.empty()) return dtc::parse_toeplitz_gen(a.gen_text);
    if (a.construction == "qr-example") return dtc::paper_example_generator(a.p);
    if (a.construction == "qr") {
        dtc::FieldSpec f4 = dtc::FieldSpec::make(4);
        return dtc::qr_generator(dtc::QRSpec(a.p, f4.parse(a.t)));
    }
    if (a.construction == "self-dual") {
        dtc::FieldSpec spec = dtc::FieldSpec::make(a.q);
        dtc::SelfDualVariant v;
        if (a.variant == "circulant")
            v = dtc::SelfDualVariant::circulant;
        else if (a.variant == "negacirculant")
            v = dtc::SelfDualVariant::negacirculant;
        else if (a.variant == "scalar")
            v = dtc::SelfDualVariant::scalar;
        else
            throw CLI::ValidationError("--variant must be circulant, negacirculant or scalar");
        return dtc::self_dual_generator(spec, a.n, v, a.i);
    }
    throw CLI::ValidationError("analyze needs --gen or a known --construction (qr, qr-example, self-dual)");
}

int run_analyze(const AnalyzeArgs& a) {
    dtc::DTCode code(resolve_generator(a));
    write_text(a.out, dtc::analysis_report(code, a.budget).dump(2) + "\n");
    return exit_ok;
}

struct SearchArgs {
    unsigned q = 0;
    std::size_t len = 0;
    bool exhaustive = false;
    bool random = false;
    std::uint64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::string reduction = "scalar_and_swap";
    std::uint64_t budget = std::uint64_t(1) << 26;
    unsigned shards = 1;
    std::string shard_spec; // "i/total" to run a single shard
    std::string checkpoint;
    std::string out;
    std::string csv;
};

int run_search(const SearchArgs& a) {
    if (a.len % 2 != 0 || a.len == 0) throw CLI::ValidationError("--len must be a positive even length 2n");
    if (a.exhaustive == a.random) throw CLI::ValidationError("choose exactly one of --exhaustive / --random");
    dtc::FieldSpec spec = dtc::FieldSpec::make(a.q);
    std::size_t n = a.len / 2;
    auto started = std::chrono::steady_clock::now();

    dtc::SearchReport rep;
    if (a.random) {
        if (!a.seed) throw CLI::ValidationError("--random requires an explicit --seed");
        if (a.trials == 0) throw CLI::ValidationError("--random requires --trials >= 1");
        rep = dtc::random_search(spec, n, a.trials, *a.seed);
    } else {
        dtc::Reduction red = dtc::parse_reduction(a.reduction);
        if (!a.shard_spec.empty()) {
            unsigned idx = 0, total = 0;
            if (std::sscanf(a.shard_spec.c_str(), "%u/%u", &idx, &total) != 2 || total == 0 || idx >= total)
                throw CLI::ValidationError("--shard must be i/total with i < total");
            rep = dtc::exhaustive_search(spec, n, red, a.budget, dtc::Shard{idx, total}, a.checkpoint);
        } else if (a.shards > 1) {
            std::vector<dtc::SearchReport> parts;
            for (unsigned i = 0; i < a.shards; ++i)
                parts.push_back(dtc::exhaustive_search(spec, n, red, a.budget, dtc::Shard{i, a.shards}));
            rep = dtc::merge_reports(parts);
        } else {
            rep = dtc::exhaustive_search(spec, n, red, a.budget, dtc::Shard{}, a.checkpoint);
        }
    }

    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::cerr << "search finished in " << elapsed << " s, examined " << rep.codes_examined << " codes\n";
    write_text(a.out, rep.to_json().dump(2) + "\n");
    if (!a.csv.empty()) write_text(a.csv, rep.csv_row() + "\n");
    return exit_ok;
}

struct VerifyArgs {
    std::string theorem;
    unsigned q = 2;
    std::size_t n = 3;
    bool exhaustive = false;
    std::uint64_t random_trials = 0;
    std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
    dtc::FieldSpec spec = dtc::FieldSpec::make(a.q);

    if (a.theorem == "isodual") {
        // A Q = Q A^T for every Toeplitz A
        auto check = [&](const dtc::ToeplitzGen& g) {
            if (!dtc::isoduality_witness(dtc::DTCode(g)).verified) {
                std::cout << "violation: " << dtc::to_string(g) << "\n";
                return false;
            }
            return true;
        };
        bool ok = true;
        if (a.random_trials > 0) {
            std::size_t len = 2 * a.n - 1;
            std::vector<dtc::Felt> digits(len);
            for (std::uint64_t i = 0; i < a.random_trials && ok; ++i) {
                for (std::size_t j = 0; j < len; ++j) digits[j] = dtc::Felt(dtc::stream_mod(a.seed, i * len + j, a.q));
                ok = check(dtc::detail::gen_from_digits(spec, a.n, digits));
            }
        } else {
            dtc::for_each_tuple(spec, a.n, dtc::Reduction::none, dtc::Shard{},
                                [&](std::uint64_t, const std::vector<dtc::Felt>& d) {
                                    if (ok) ok = check(dtc::detail::gen_from_digits(spec, a.n, d));
                                });
        }
        std::cout << (ok ? "pass" : "fail") << ": isodual witness, q=" << a.q << " n=" << a.n << "\n";
        return ok ? exit_ok : exit_violation;
    }

    if (a.theorem == "selfdual-structure") {
        bool ok = true;
        std::string counterexample;
        dtc::for_each_tuple(spec, a.n, dtc::Reduction::none, dtc::Shard{},
                            [&](std::uint64_t, const std::vector<dtc::Felt>& d) {
                                if (!ok) return;
                                dtc::DTCode code(dtc::detail::gen_from_digits(spec, a.n, d));
                                try {
                                    dtc::classify_self_dual_structure(code);
                                } catch (const dtc::error& e) {
                                    ok = false;
                                    counterexample = e.what();
                                }
                            });
        if (!ok) std::cout << counterexample << "\n";
        std::cout << (ok ? "pass" : "fail") << ": self-dual structure, q=" << a.q << " n=" << a.n << "\n";
        return ok ? exit_ok : exit_violation;
    }

    if (a.theorem == "even-circulant") {
        if (a.q != 2) throw CLI::ValidationError("even-circulant is a binary theorem; use --q 2");
        bool ok = true;
        std::string counterexample;
        dtc::for_each_tuple(spec, a.n, dtc::Reduction::none, dtc::Shard{},
                            [&](std::uint64_t, const std::vector<dtc::Felt>& d) {
                                if (!ok) return;
                                dtc::ToeplitzGen g = dtc::detail::gen_from_digits(spec, a.n, d);
                                if (dtc::is_even(dtc::DTCode(g)) && !dtc::is_circulant(g)) {
                                    ok = false;
                                    counterexample = dtc::to_string(g);
                                }
                            });
        if (!ok) std::cout << "violation: " << counterexample << "\n";
        std::cout << (ok ? "pass" : "fail") << ": even => circulant, q=2 n=" << a.n << "\n";
        return ok ? exit_ok : exit_violation;
    }

    if (a.theorem == "containment-caps") {
        dtc::u128 cap_v = dtc::checked_pow(a.q, unsigned(a.n));
        dtc::u128 cap_0 = dtc::checked_pow(a.q, unsigned(a.n - 1));
        std::uint64_t vecs = std::uint64_t(cap_v);
        bool ok = true;
        for (std::uint64_t ui = 1; ui < vecs && ok; ++ui)
            for (std::uint64_t vi = 0; vi < vecs && ok; ++vi) {
                std::vector<dtc::Felt> ud, vd;
                dtc::detail::decode_tuple(ui, a.q, a.n, ud);
                dtc::detail::decode_tuple(vi, a.q, a.n, vd);
                dtc::FVector u{spec, ud}, v{spec, vd};
                std::uint64_t c = dtc::count_containing(spec, a.n, u, v);
                dtc::u128 cap = (v.weight() == 0) ? cap_0 : cap_v;
                if (dtc::u128(c) > cap) {
                    ok = false;
                    std::cout << "violation: u=" << dtc::to_string(u) << " v=" << dtc::to_string(v)
                              << " count=" << c << "\n";
                }
            }
        std::cout << (ok ? "pass" : "fail") << ": containment caps, q=" << a.q << " n=" << a.n << "\n";
        return ok ? exit_ok : exit_violation;
    }

    if (a.theorem == "tuple-count") {
        std::uint64_t seen = dtc::for_each_tuple(spec, a.n, dtc::Reduction::none, dtc::Shard{},
                                                 [](std::uint64_t, const std::vector<dtc::Felt>&) {});
        bool ok = dtc::u128(seen) == dtc::space_size_full(spec, a.n);
        std::cout << (ok ? "pass" : "fail") << ": tuple count, q=" << a.q << " n=" << a.n << " seen=" << seen
                  << " expected=" << dtc::to_string(dtc::space_size_full(spec, a.n)) << "\n";
        return ok ? exit_ok : exit_violation;
    }

    throw CLI::ValidationError("unknown theorem id '" + a.theorem +
                               "' (isodual, selfdual-structure, even-circulant, containment-caps, tuple-count)");
}

struct BoundsArgs {
    unsigned q = 2;
    double tol = 1e-9;
    std::string out;
    std::string curve_csv;
    std::size_t samples = 101;
};

int run_bounds(const BoundsArgs& a) {
    write_text(a.out, dtc::bound_report(a.q, a.tol).dump(2) + "\n");
    if (!a.curve_csv.empty()) {
        std::string csv = "x,H\n";
        for (std::size_t i = 0; i < a.samples; ++i) {
            double x = double(i) / double(a.samples - 1);
            csv += std::to_string(x) + "," + std::to_string(dtc::entropy(a.q, x)) + "\n";
        }
        write_text(a.curve_csv, csv);
    }
    return exit_ok;
}

struct TableArgs {
    unsigned q = 2;
    std::size_t max_len = 8;
    std::string reduction = "scalar_and_swap";
    std::uint64_t budget = std::uint64_t(1) << 26;
    std::string out;
};

int run_table(const TableArgs& a) {
    dtc::FieldSpec spec = dtc::FieldSpec::make(a.q);
    dtc::Reduction red = dtc::parse_reduction(a.reduction);
    std::string csv = "q,2n,best_d,strategy,codes_examined,seed\n";
    for (std::size_t len = 4; len <= a.max_len; len += 2)
        csv += dtc::exhaustive_search(spec, len / 2, red, a.budget).csv_row() + "\n";
    write_text(a.out, csv);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"double Toeplitz code toolbox"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "analyze one DT code (JSON report)");
    analyze->add_option("--gen", an.gen_text, "generator text form, e.g. \"q=2 n=2 t=1 a=0 b=0\"");
    analyze->add_option("--construction", an.construction, "qr | qr-example | self-dual");
    analyze->add_option("--p", an.p, "prime for the QR constructions");
    analyze->add_option("--q", an.q, "field order for --construction self-dual");
    analyze->add_option("--n", an.n, "block size for --construction self-dual");
    analyze->add_option("--variant", an.variant, "circulant | negacirculant | scalar");
    analyze->add_option("--i", an.i, "diagonal index for the circulant/negacirculant variants");
    analyze->add_option("--t", an.t, "diagonal element for --construction qr (default w)");
    analyze->add_option("--budget", an.budget, "max enumerated messages");
    analyze->add_option("--out", an.out, "output path (default stdout)");

    SearchArgs se;
    auto* search = app.add_subcommand("search", "search the DT generator space for the best minimum distance");
    search->add_option("--q", se.q, "field order")->required();
    search->add_option("--len", se.len, "code length 2n")->required();
    search->add_flag("--exhaustive", se.exhaustive, "exact scan of the full (reduced) space");
    search->add_flag("--random", se.random, "seeded random sampling");
    search->add_option("--trials", se.trials, "random trials");
    auto* seed_opt = search->add_option("--seed", "64-bit seed (mandatory for --random)");
    search->add_option("--reduction", se.reduction, "none | scalar_normalized | scalar_and_swap");
    search->add_option("--budget", se.budget, "max tuples for exhaustive mode");
    search->add_option("--shards", se.shards, "split into N shards, run all, merge");
    search->add_option("--shard", se.shard_spec, "run a single shard i/total");
    search->add_option("--checkpoint", se.checkpoint, "checkpoint file (resumes if present)");
    search->add_option("--out", se.out, "report JSON path (default stdout)");
    search->add_option("--csv", se.csv, "also write the CSV summary row here");

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "run a theorem property suite");
    verify->add_option("theorem", ve.theorem,
                       "isodual | selfdual-structure | even-circulant | containment-caps | tuple-count")
        ->required();
    verify->add_option("--q", ve.q, "field order");
    verify->add_option("--n", ve.n, "block size");
    verify->add_flag("--exhaustive", ve.exhaustive, "exhaustive scan (default)");
    verify->add_option("--random", ve.random_trials, "randomized trials instead of exhaustive scan");
    verify->add_option("--seed", ve.seed, "seed for --random");

    BoundsArgs bo;
    auto* bounds = app.add_subcommand("bounds", "entropy / GV-bound report");
    bounds->add_option("--q", bo.q, "field order");
    bounds->add_option("--tol", bo.tol, "bisection tolerance");
    bounds->add_option("--out", bo.out, "report JSON path (default stdout)");
    bounds->add_option("--curve", bo.curve_csv, "write the entropy curve as CSV (x,H)");
    bounds->add_option("--samples", bo.samples, "curve sample count");

    TableArgs ta;
    auto* table = app.add_subcommand("table", "exhaustive best-d table as CSV");
    table->add_option("--q", ta.q, "field order")->required();
    table->add_option("--max-len", ta.max_len, "largest length 2n")->required();
    table->add_option("--reduction", ta.reduction, "space reduction");
    table->add_option("--budget", ta.budget, "max tuples per length");
    table->add_option("--out", ta.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze) return run_analyze(an);
        if (*search) {
            if (seed_opt->count() > 0) se.seed = seed_opt->as<std::uint64_t>();
            return run_search(se);
        }
        if (*verify) return run_verify(ve);
        if (*bounds) return run_bounds(bo);
        if (*table) return run_table(ta);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const dtc::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const dtc::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
