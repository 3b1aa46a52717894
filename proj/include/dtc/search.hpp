#pragma once

// Exhaustive and seeded-random search over the DT generator space.
//
// The space of generators for block size n is the set of flat tuples
// (t, a_1..a_{n-1}, b_1..b_{n-1}), q^(2n-1) of them, indexed in lexicographic
// order (digit 0 = t most significant). Reductions keep one representative
// per cheap symmetry orbit: nonzero scalar multiples (first nonzero digit
// fixed to 1) and the a/b swap (a <=_lex b); both preserve the weight
// distribution, hence the optimum.
//
// Reports are fully deterministic: identical invocations (including seed and
// shard layout) produce byte-identical JSON, and merged shard reports equal
// the unsharded report.

#include <bit>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "code.hpp"
#include "int128.hpp"

namespace dtc {

enum class Reduction { none, scalar_normalized, scalar_and_swap };

inline const char* to_string(Reduction r) {
    switch (r) {
        case Reduction::none: return "none";
        case Reduction::scalar_normalized: return "scalar_normalized";
        case Reduction::scalar_and_swap: return "scalar_and_swap";
    }
    return "?";
}

inline Reduction parse_reduction(const std::string& s) {
    if (s == "none") return Reduction::none;
    if (s == "scalar_normalized") return Reduction::scalar_normalized;
    if (s == "scalar_and_swap") return Reduction::scalar_and_swap;
    throw error("unknown reduction '" + s + "'");
}

struct Shard {
    unsigned index = 0;
    unsigned total = 1;
};

/// q^(2n-1), the full tuple count.
inline u128 space_size_full(const FieldSpec& spec, std::size_t n) {
    return checked_pow(spec.q(), unsigned(2 * n - 1));
}

namespace detail {

/// Decode a tuple index into its 2n-1 base-q digits, digit 0 most significant.
inline void decode_tuple(std::uint64_t index, unsigned q, std::size_t len, std::vector<Felt>& digits) {
    digits.resize(len);
    for (std::size_t i = len; i > 0; --i) {
        digits[i - 1] = Felt(index % q);
        index /= q;
    }
}

inline bool is_representative(const std::vector<Felt>& digits, std::size_t n, Reduction red) {
    if (red == Reduction::none) return true;
    // first nonzero digit must be 1 (the all-zero tuple represents itself)
    for (Felt d : digits) {
        if (d == 0) continue;
        if (d != 1) return false;
        break;
    }
    if (red == Reduction::scalar_and_swap) {
        // a <=_lex b
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Felt ai = digits[1 + i], bi = digits[n + i];
            if (ai < bi) return true;
            if (ai > bi) return false;
        }
    }
    return true;
}

inline ToeplitzGen gen_from_digits(const FieldSpec& spec, std::size_t n, const std::vector<Felt>& digits) {
    std::vector<Felt> a(digits.begin() + 1, digits.begin() + std::ptrdiff_t(n));
    std::vector<Felt> b(digits.begin() + std::ptrdiff_t(n), digits.end());
    return ToeplitzGen(spec, n, digits[0], std::move(a), std::move(b));
}

/// Exact minimum distance over F_2 via Gray-code enumeration of all 2^n - 1
/// nonzero messages with bit-packed rows; aborts once a codeword of weight
/// <= abort_leq is seen (returns that weight).
inline unsigned min_dist_f2(const std::uint32_t* rows, unsigned n, unsigned abort_leq) {
    std::uint32_t msg = 0, acc = 0;
    unsigned best = 2 * n + 1;
    const std::uint64_t end = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < end; ++k) {
        unsigned bit = unsigned(std::countr_zero(k));
        msg ^= std::uint32_t(1) << bit;
        acc ^= rows[bit];
        unsigned wt = unsigned(std::popcount(msg)) + unsigned(std::popcount(acc));
        if (wt < best) {
            best = wt;
            if (best <= abort_leq) return best;
        }
    }
    return best;
}

inline void pack_rows_f2(const std::vector<std::vector<Felt>>& rows, std::uint32_t* packed) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint32_t m = 0;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j]) m |= std::uint32_t(1) << j;
        packed[i] = m;
    }
}

} // namespace detail

/// Walk every tuple of the (reduced, sharded) space in index order; f receives
/// (index, digits). Returns the number of tuples visited.
template <typename F>
std::uint64_t for_each_tuple(const FieldSpec& spec, std::size_t n, Reduction red, Shard shard, F&& f,
                             std::uint64_t start_cursor = 0) {
    u128 size128 = space_size_full(spec, n);
    if (size128 > (u128(1) << 62)) throw budget_exceeded("generator space too large to enumerate", 0);
    std::uint64_t size = std::uint64_t(size128);
    if (shard.total == 0 || shard.index >= shard.total) throw error("bad shard descriptor");
    std::uint64_t lo = std::uint64_t((u128(size) * shard.index) / shard.total);
    std::uint64_t hi = std::uint64_t((u128(size) * (shard.index + 1)) / shard.total);
    if (start_cursor > lo) lo = start_cursor;
    std::uint64_t visited = 0;
    std::vector<Felt> digits;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        detail::decode_tuple(idx, spec.q(), 2 * n - 1, digits);
        if (!detail::is_representative(digits, n, red)) continue;
        ++visited;
        f(idx, digits);
    }
    return visited;
}

struct SearchReport {
    unsigned q = 0;
    std::size_t n = 0;
    std::string strategy;                 // "exhaustive" or "random"
    Reduction reduction = Reduction::none; // exhaustive only
    std::uint64_t trials = 0;             // random only
    std::uint64_t seed = 0;               // random only
    Shard shard;
    unsigned best_d = 0;
    std::vector<ToeplitzGen> witnesses;   // lex-smallest achievers, capped
    std::uint64_t witness_total = 0;      // full achiever count
    std::uint64_t codes_examined = 0;

    static constexpr std::size_t witness_cap = 16;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["len"] = 2 * n;
        j["strategy"] = strategy;
        if (strategy == "exhaustive") j["reduction"] = dtc::to_string(reduction);
        if (strategy == "random") {
            j["trials"] = trials;
            j["seed"] = seed;
        }
        j["shard"] = {{"index", shard.index}, {"total", shard.total}};
        j["best_d"] = best_d;
        j["witness_count"] = witness_total;
        std::vector<std::string> ws;
        for (const auto& g : witnesses) ws.push_back(dtc::to_string(g));
        j["witnesses"] = ws;
        j["codes_examined"] = codes_examined;
        return j;
    }

    /// `q,2n,best_d,strategy,codes_examined,seed` (seed blank for exhaustive).
    std::string csv_row() const {
        std::string s = std::to_string(q) + "," + std::to_string(2 * n) + "," + std::to_string(best_d) + "," +
                        strategy + "," + std::to_string(codes_examined) + ",";
        if (strategy == "random") s += std::to_string(seed);
        return s;
    }
};

namespace detail {

/// Shared candidate bookkeeping: early-abandon threshold, best-so-far, capped
/// lex-ordered witness list.
struct BestTracker {
    unsigned best_d = 0;
    std::vector<std::vector<Felt>> witnesses; // flat tuples, kept sorted unique
    std::uint64_t witness_total = 0;
    bool witnesses_lex_complete = true; // false once the cap truncated in arrival order

    unsigned abort_leq() const { return best_d == 0 ? 0 : best_d - 1; }

    /// Candidates arriving in lex order (exhaustive search): the first cap
    /// achievers are automatically the lex-smallest.
    void offer_in_order(unsigned d, const std::vector<Felt>& tuple) {
        if (d > best_d) {
            best_d = d;
            witnesses.assign(1, tuple);
            witness_total = 1;
        } else if (d == best_d) {
            ++witness_total;
            if (witnesses.size() < SearchReport::witness_cap) witnesses.push_back(tuple);
        }
    }

    /// Candidates in arbitrary order (random search): keep a sorted, deduped,
    /// capped set plus the distinct achiever count.
    std::set<std::vector<Felt>> seen_achievers;
    void offer_unordered(unsigned d, const std::vector<Felt>& tuple) {
        if (d > best_d) {
            best_d = d;
            seen_achievers.clear();
            seen_achievers.insert(tuple);
        } else if (d == best_d) {
            seen_achievers.insert(tuple);
        }
    }
    void finalize_unordered() {
        witness_total = seen_achievers.size();
        witnesses.clear();
        for (const auto& t : seen_achievers) {
            if (witnesses.size() >= SearchReport::witness_cap) break;
            witnesses.push_back(t);
        }
    }
};

/// Exact minimum distance of the candidate, or any value <= abort_leq when the
/// candidate provably cannot beat/tie best_d. Returns (d, aborted).
inline std::pair<unsigned, bool> evaluate_candidate(const FieldSpec& spec, std::size_t n,
                                                    const std::vector<Felt>& digits, unsigned abort_leq,
                                                    std::uint64_t budget = default_budget) {
    if (spec.q() == 2 && n <= 32) {
        std::uint32_t rows[32];
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t m = 0;
            for (std::size_t j = 0; j < n; ++j) {
                Felt v = (i == j) ? digits[0] : (j > i ? digits[j - i] : digits[n + i - j - 1]);
                if (v) m |= std::uint32_t(1) << j;
            }
            rows[i] = m;
        }
        unsigned d = min_dist_f2(rows, unsigned(n), abort_leq);
        return {d, d <= abort_leq};
    }
    std::vector<std::vector<Felt>> rows(n, std::vector<Felt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = (i == j) ? digits[0] : (j > i ? digits[j - i] : digits[n + i - j - 1]);
    MinDistResult r = min_distance_tiered(spec, rows, budget, abort_leq);
    return {r.d, !r.exact};
}

} // namespace detail

/// Resumable exhaustive search state; serialized as the checkpoint file.
struct Checkpoint {
    std::uint64_t cursor = 0; // next tuple index to process
    unsigned best_d = 0;
    std::vector<std::vector<Felt>> witnesses;
    std::uint64_t witness_total = 0;
    std::uint64_t codes_examined = 0;
};

inline nlohmann::ordered_json checkpoint_to_json(const FieldSpec& spec, std::size_t n, Reduction red, Shard shard,
                                                 const Checkpoint& cp) {
    nlohmann::ordered_json j;
    j["q"] = spec.q();
    j["len"] = 2 * n;
    j["reduction"] = to_string(red);
    j["shard"] = {{"index", shard.index}, {"total", shard.total}};
    j["cursor"] = cp.cursor;
    j["best_d"] = cp.best_d;
    std::vector<std::string> ws;
    for (const auto& t : cp.witnesses) ws.push_back(to_string(detail::gen_from_digits(spec, n, t)));
    j["witnesses"] = ws;
    j["witness_total"] = cp.witness_total;
    j["codes_examined"] = cp.codes_examined;
    return j;
}

inline Checkpoint checkpoint_from_json(const FieldSpec& spec, std::size_t n, Reduction red, Shard shard,
                                       const nlohmann::json& j) {
    if (j.at("q").get<unsigned>() != spec.q() || j.at("len").get<std::size_t>() != 2 * n ||
        j.at("reduction").get<std::string>() != to_string(red) ||
        j.at("shard").at("index").get<unsigned>() != shard.index ||
        j.at("shard").at("total").get<unsigned>() != shard.total)
        throw error("checkpoint does not match the requested search");
    Checkpoint cp;
    cp.cursor = j.at("cursor").get<std::uint64_t>();
    cp.best_d = j.at("best_d").get<unsigned>();
    for (const auto& s : j.at("witnesses")) cp.witnesses.push_back(parse_toeplitz_gen(s.get<std::string>()).flat());
    cp.witness_total = j.at("witness_total").get<std::uint64_t>();
    cp.codes_examined = j.at("codes_examined").get<std::uint64_t>();
    return cp;
}

/// Exact best minimum distance over all DT codes of length 2n over F_q.
/// Invariant to the reduction setting. `checkpoint_path`, when nonempty, is
/// read if present (resume) and rewritten every `checkpoint_every` tuples.
inline SearchReport exhaustive_search(const FieldSpec& spec, std::size_t n, Reduction red = Reduction::none,
                                      std::uint64_t budget = std::uint64_t(1) << 26, Shard shard = {},
                                      const std::string& checkpoint_path = "",
                                      std::uint64_t checkpoint_every = std::uint64_t(1) << 22) {
    u128 size = space_size_full(spec, n);
    if (size > budget)
        throw budget_exceeded("exhaustive space " + to_string(size) + " exceeds budget, use random search", 0);

    detail::BestTracker tracker;
    std::uint64_t start_cursor = 0;
    std::uint64_t examined_before = 0;
    if (!checkpoint_path.empty()) {
        std::ifstream in(checkpoint_path);
        if (in) {
            Checkpoint cp = checkpoint_from_json(spec, n, red, shard, nlohmann::json::parse(in));
            start_cursor = cp.cursor;
            tracker.best_d = cp.best_d;
            tracker.witnesses = cp.witnesses;
            tracker.witness_total = cp.witness_total;
            examined_before = cp.codes_examined;
        }
    }

    std::uint64_t since_checkpoint = 0;
    std::uint64_t examined = 0;
    auto save_checkpoint = [&](std::uint64_t next_cursor) {
        Checkpoint cp{next_cursor, tracker.best_d, tracker.witnesses, tracker.witness_total,
                      examined_before + examined};
        std::ofstream out(checkpoint_path, std::ios::trunc);
        out << checkpoint_to_json(spec, n, red, shard, cp).dump(2) << "\n";
    };

    for_each_tuple(
        spec, n, red, shard,
        [&](std::uint64_t idx, const std::vector<Felt>& digits) {
            auto [d, aborted] = detail::evaluate_candidate(spec, n, digits, tracker.abort_leq());
            if (!aborted) tracker.offer_in_order(d, digits);
            ++examined;
            if (!checkpoint_path.empty() && ++since_checkpoint >= checkpoint_every) {
                since_checkpoint = 0;
                save_checkpoint(idx + 1);
            }
        },
        start_cursor);

    SearchReport rep;
    rep.q = spec.q();
    rep.n = n;
    rep.strategy = "exhaustive";
    rep.reduction = red;
    rep.shard = shard;
    rep.best_d = tracker.best_d;
    rep.witness_total = tracker.witness_total;
    rep.codes_examined = examined_before + examined;
    for (const auto& t : tracker.witnesses) rep.witnesses.push_back(detail::gen_from_digits(spec, n, t));
    if (!checkpoint_path.empty()) save_checkpoint(std::uint64_t(-1));
    return rep;
}

/// Lower bound on the optimum from `trials` i.i.d. uniform tuples drawn from
/// the counter-based stream; bit-for-bit reproducible from (q, n, trials, seed).
inline SearchReport random_search(const FieldSpec& spec, std::size_t n, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw error("random search needs trials >= 1");
    const unsigned q = spec.q();
    const std::size_t len = 2 * n - 1;
    detail::BestTracker tracker;
    std::vector<Felt> digits(len);
    for (std::uint64_t i = 0; i < trials; ++i) {
        for (std::size_t j = 0; j < len; ++j) digits[j] = Felt(stream_mod(seed, i * len + j, q));
        auto [d, aborted] = detail::evaluate_candidate(spec, n, digits, tracker.abort_leq());
        if (!aborted) tracker.offer_unordered(d, digits);
    }
    tracker.finalize_unordered();
    SearchReport rep;
    rep.q = q;
    rep.n = n;
    rep.strategy = "random";
    rep.trials = trials;
    rep.seed = seed;
    rep.best_d = tracker.best_d;
    rep.witness_total = tracker.witness_total;
    rep.codes_examined = trials;
    for (const auto& t : tracker.witnesses) rep.witnesses.push_back(detail::gen_from_digits(spec, n, t));
    return rep;
}

/// Deterministic merge of disjoint shard reports; equals the unsharded report.
inline SearchReport merge_reports(const std::vector<SearchReport>& parts) {
    if (parts.empty()) throw error("merge_reports: no parts");
    SearchReport out = parts[0];
    out.shard = Shard{0, 1};
    out.witnesses.clear();
    out.witness_total = 0;
    out.codes_examined = 0;
    out.best_d = 0;
    for (const auto& p : parts) {
        if (p.q != out.q || p.n != out.n || p.strategy != out.strategy) throw error("merge_reports: mismatched parts");
        out.best_d = std::max(out.best_d, p.best_d);
        out.codes_examined += p.codes_examined;
    }
    for (const auto& p : parts) { // parts arrive in shard index order = lex order
        if (p.best_d != out.best_d) continue;
        out.witness_total += p.witness_total;
        for (const auto& w : p.witnesses)
            if (out.witnesses.size() < SearchReport::witness_cap) out.witnesses.push_back(w);
    }
    return out;
}

/// Brute-force count of generator tuples whose code contains (u, v), i.e.
/// tuples with u.A = v. Theorem bound: <= q^n for v != 0, <= q^(n-1) for v = 0.
inline std::uint64_t count_containing(const FieldSpec& spec, std::size_t n, const FVector& u, const FVector& v) {
    if (u.size() != n || v.size() != n || u.spec != spec || v.spec != spec)
        throw error("count_containing: length/field mismatch");
    if (u.weight() == 0) throw error("count_containing: u must be nonzero");
    std::uint64_t count = 0;
    for_each_tuple(spec, n, Reduction::none, Shard{}, [&](std::uint64_t, const std::vector<Felt>& digits) {
        for (std::size_t c = 0; c < n; ++c) {
            Felt acc = 0;
            for (std::size_t r = 0; r < n; ++r) {
                Felt arc = (r == c) ? digits[0] : (c > r ? digits[c - r] : digits[n + r - c - 1]);
                if (u[r] != 0 && arc != 0) acc = spec.add(acc, spec.mul(u[r], arc));
            }
            if (acc != v[c]) return;
        }
        ++count;
    });
    return count;
}

/// Number of distinct codes (as codeword sets) among all q^(2n-1) generator
/// tuples; tiny sizes only. Distinct tuples need not give distinct codes, so
/// this is reported separately from the tuple count.
inline std::uint64_t distinct_code_count(const FieldSpec& spec, std::size_t n, std::uint64_t budget = 1 << 16) {
    if (checked_mul(space_size_full(spec, n), checked_pow(spec.q(), unsigned(n))) > budget)
        throw budget_exceeded("distinct_code_count budget exceeded", 0);
    std::set<std::vector<std::uint64_t>> canon;
    for_each_tuple(spec, n, Reduction::none, Shard{}, [&](std::uint64_t, const std::vector<Felt>& digits) {
        DTCode code(detail::gen_from_digits(spec, n, digits));
        std::vector<std::uint64_t> words;
        std::vector<Felt> msg(n, 0);
        // odometer over all q^n messages
        while (true) {
            FVector cw = encode(code, FVector{spec, msg});
            std::uint64_t packed = 0;
            for (Felt x : cw.v) packed = packed * spec.q() + x;
            words.push_back(packed);
            std::size_t j = n;
            while (j > 0 && msg[j - 1] + 1u == spec.q()) msg[--j] = 0;
            if (j == 0) break;
            ++msg[j - 1];
        }
        std::sort(words.begin(), words.end());
        canon.insert(words);
    });
    return canon.size();
}

} // namespace dtc
