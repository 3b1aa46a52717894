#pragma once

// The double Toeplitz code object and per-code analysis: encoding, exact and
// sampled minimum distance, weight distribution, MacWilliams transform,
// duality and structure predicates.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "rng.hpp"

namespace dtc {

class budget_exceeded : public error {
  public:
    budget_exceeded(const std::string& what, unsigned partial_bound)
        : error(what), partial_bound_(partial_bound) {}

    /// Best (smallest) codeword weight seen before the budget ran out;
    /// an upper bound on the true minimum distance.
    unsigned partial_bound() const { return partial_bound_; }

  private:
    unsigned partial_bound_;
};

constexpr std::uint64_t default_budget = std::uint64_t(1) << 28;

/// Linear [2n, n] code with generator matrix (I | A), A Toeplitz.
struct DTCode {
    FieldSpec spec;
    ToeplitzGen gen;

    explicit DTCode(ToeplitzGen g) : spec(g.spec), gen(std::move(g)) {}

    std::size_t n() const { return gen.n; }
    std::size_t length() const { return 2 * gen.n; }

    FMatrix A() const { return toeplitz_matrix(gen); }

    FMatrix G() const {
        std::size_t k = n();
        FMatrix g(spec, k, 2 * k);
        FMatrix a = A();
        for (std::size_t i = 0; i < k; ++i) {
            g.at(i, i) = 1;
            for (std::size_t j = 0; j < k; ++j) g.at(i, k + j) = a.at(i, j);
        }
        return g;
    }

    /// Parity check matrix (-A^T | I); G H^T = 0.
    FMatrix H() const {
        std::size_t k = n();
        FMatrix h(spec, k, 2 * k);
        FMatrix at = mat_negate(transpose(A()));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) h.at(i, j) = at.at(i, j);
            h.at(i, k + i) = 1;
        }
        return h;
    }
};

inline FVector encode(const DTCode& code, const FVector& m) {
    if (m.size() != code.n() || m.spec != code.spec) throw error("encode: message length/field mismatch");
    FVector tail = vec_mat_mul(m, code.A());
    FVector out{code.spec, m.v};
    out.v.insert(out.v.end(), tail.v.begin(), tail.v.end());
    return out;
}

struct MinDistResult {
    unsigned d = 0;
    std::vector<Felt> witness; // message achieving d, lex-smallest among ties
    bool exact = true;
};

namespace detail {

/// Rows of the Toeplitz block, the representation all hot loops run on.
inline std::vector<std::vector<Felt>> toeplitz_rows(const ToeplitzGen& g) {
    std::vector<std::vector<Felt>> rows(g.n, std::vector<Felt>(g.n));
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            rows[i][j] = (i == j) ? g.t : (j > i ? g.a[j - i - 1] : g.b[i - j - 1]);
    return rows;
}

/// Exact minimum distance of the code (I | A) by message-weight-tiered
/// enumeration. Since wt(mG) = wt(m) + wt(mA) >= wt(m), tiers above the
/// current best cannot improve it; scanning stops after tier ww = best so the
/// lex-smallest witness among ties is found.
///
/// If abort_leq > 0, returns as soon as any codeword of weight <= abort_leq is
/// seen (result then carries exact = false and d = that weight); used by the
/// search loop to discard non-improving candidates early.
inline MinDistResult min_distance_tiered(const FieldSpec& spec, const std::vector<std::vector<Felt>>& rows,
                                         std::uint64_t budget = default_budget, unsigned abort_leq = 0) {
    const std::size_t n = rows.size();
    const unsigned q = spec.q();
    unsigned best = std::numeric_limits<unsigned>::max();
    std::vector<Felt> best_msg;
    std::uint64_t enumerated = 0;

    std::vector<std::size_t> pos(n);
    std::vector<Felt> vals(n);
    std::vector<Felt> acc(n);
    std::vector<Felt> msg(n);

    auto apply = [&](std::size_t row, Felt delta) {
        if (delta == 0) return;
        for (std::size_t c = 0; c < n; ++c) acc[c] = spec.add(acc[c], spec.mul(delta, rows[row][c]));
    };

    for (unsigned ww = 1; ww <= n; ++ww) {
        if (best < ww) break; // tiers >= ww cannot improve or tie
        for (unsigned j = 0; j < ww; ++j) pos[j] = j;
        bool more_supports = true;
        while (more_supports) {
            // all-ones starting assignment on this support
            std::fill(acc.begin(), acc.end(), 0);
            for (unsigned j = 0; j < ww; ++j) {
                vals[j] = 1;
                apply(pos[j], 1);
            }
            bool more_vals = true;
            while (more_vals) {
                if (++enumerated > budget)
                    throw budget_exceeded("min_distance budget exceeded, use sampled mode",
                                          best == std::numeric_limits<unsigned>::max() ? 0 : best);
                unsigned wt = ww;
                for (std::size_t c = 0; c < n; ++c) wt += (acc[c] != 0);
                if (wt <= best) {
                    std::fill(msg.begin(), msg.end(), 0);
                    for (unsigned j = 0; j < ww; ++j) msg[pos[j]] = vals[j];
                    if (wt < best || (wt == best && (best_msg.empty() || msg < best_msg))) {
                        best = wt;
                        best_msg = msg;
                    }
                    if (abort_leq > 0 && best <= abort_leq) return {best, best_msg, false};
                }
                // odometer over values 1..q-1, rightmost digit fastest
                int j = int(ww) - 1;
                while (j >= 0 && vals[j] + 1u >= q) {
                    apply(pos[j], spec.sub(1, vals[j]));
                    vals[j] = 1;
                    --j;
                }
                if (j < 0) {
                    more_vals = false;
                } else {
                    Felt nv = Felt(vals[j] + 1);
                    apply(pos[j], spec.sub(nv, vals[j]));
                    vals[j] = nv;
                }
            }
            // next support combination in lexicographic order
            int j = int(ww) - 1;
            while (j >= 0 && pos[j] == n - (ww - std::size_t(j))) --j;
            if (j < 0) {
                more_supports = false;
            } else {
                ++pos[j];
                for (unsigned l = unsigned(j) + 1; l < ww; ++l) pos[l] = pos[l - 1] + 1;
            }
        }
    }
    if (best == std::numeric_limits<unsigned>::max()) throw error("min_distance: empty message space");
    return {best, best_msg, true};
}

} // namespace detail

/// Exact minimum distance with pruned enumeration; throws budget_exceeded
/// (carrying the partial upper bound) if the scan cannot finish in budget.
inline MinDistResult min_distance_exact(const DTCode& code, std::uint64_t budget = default_budget) {
    return detail::min_distance_tiered(code.spec, detail::toeplitz_rows(code.gen), budget);
}

/// Upper bound on the minimum distance from `trials` random nonzero messages;
/// reproducible from seed via the counter-based stream.
inline MinDistResult min_distance_sampled(const DTCode& code, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw error("sampled mode needs trials >= 1");
    const std::size_t n = code.n();
    const unsigned q = code.spec.q();
    auto rows = detail::toeplitz_rows(code.gen);
    unsigned best = std::numeric_limits<unsigned>::max();
    std::vector<Felt> best_msg;
    std::vector<Felt> msg(n);
    for (std::uint64_t i = 0; i < trials; ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < n; ++j) {
            msg[j] = Felt(stream_mod(seed, i * n + j, q));
            zero = zero && msg[j] == 0;
        }
        if (zero) continue;
        unsigned wt = 0;
        for (std::size_t j = 0; j < n; ++j) wt += (msg[j] != 0);
        for (std::size_t c = 0; c < n; ++c) {
            Felt acc = 0;
            for (std::size_t r = 0; r < n; ++r)
                if (msg[r] != 0) acc = code.spec.add(acc, code.spec.mul(msg[r], rows[r][c]));
            wt += (acc != 0);
        }
        if (wt < best || (wt == best && msg < best_msg)) {
            best = wt;
            best_msg = msg;
        }
    }
    if (best == std::numeric_limits<unsigned>::max())
        throw error("sampled min_distance: all sampled messages were zero, increase trials");
    return {best, best_msg, false};
}

/// Integer counts A_0..A_N of codewords by weight.
struct WeightDistribution {
    FieldSpec spec;
    std::size_t length = 0;
    std::vector<std::uint64_t> counts; // size length+1

    unsigned min_distance() const {
        for (std::size_t i = 1; i < counts.size(); ++i)
            if (counts[i] > 0) return unsigned(i);
        throw error("weight distribution has a single codeword");
    }

    friend bool operator==(const WeightDistribution& l, const WeightDistribution& r) {
        return l.spec == r.spec && l.length == r.length && l.counts == r.counts;
    }
};

/// Weight distribution of the row space of G by full odometer enumeration of
/// the q^k row combinations with incremental accumulator updates.
inline WeightDistribution rowspace_weight_distribution(const FMatrix& G, std::uint64_t budget = default_budget) {
    const FieldSpec& spec = G.spec;
    const std::size_t k = G.rows, N = G.cols;
    const unsigned q = spec.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / q) throw budget_exceeded("weight_distribution budget exceeded", 0);
        total *= q;
    }
    WeightDistribution wd{spec, N, std::vector<std::uint64_t>(N + 1, 0)};
    std::vector<Felt> digits(k, 0);
    std::vector<Felt> acc(N, 0);
    std::size_t nnz = 0;
    auto apply = [&](std::size_t row, Felt delta) {
        for (std::size_t c = 0; c < N; ++c) {
            Felt g = G.at(row, c);
            if (g == 0) continue;
            Felt old = acc[c];
            acc[c] = spec.add(old, spec.mul(delta, g));
            nnz += (acc[c] != 0);
            nnz -= (old != 0);
        }
    };
    for (std::uint64_t it = 0;; ++it) {
        ++wd.counts[nnz];
        // odometer step, rightmost digit fastest
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (digits[j] + 1u < q) {
                apply(j, spec.sub(Felt(digits[j] + 1), digits[j]));
                ++digits[j];
                break;
            }
            apply(j, spec.sub(0, digits[j]));
            digits[j] = 0;
            if (j == 0) return wd;
        }
        if (k == 0) return wd;
    }
}

inline WeightDistribution weight_distribution(const DTCode& code, std::uint64_t budget = default_budget) {
    return rowspace_weight_distribution(code.G(), budget);
}

/// MacWilliams transform: weight distribution of the dual from that of the
/// code, via Krawtchouk polynomials, with exact integer arithmetic.
inline WeightDistribution macwilliams_dual_distribution(const WeightDistribution& wd, unsigned q, std::size_t k) {
    const std::size_t N = wd.length;
    if (wd.counts.size() != N + 1) throw error("macwilliams: malformed counts");
    __int128 size = 1;
    for (std::size_t i = 0; i < k; ++i) size *= q;
    __int128 total = 0;
    for (auto c : wd.counts) total += __int128(c);
    if (total != size) throw error("macwilliams: counts do not sum to q^k");

    // Pascal triangle up to N
    std::vector<std::vector<__int128>> binom(N + 1, std::vector<__int128>(N + 1, 0));
    for (std::size_t i = 0; i <= N; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<__int128> qm1pow(N + 1, 1);
    for (std::size_t i = 1; i <= N; ++i) qm1pow[i] = qm1pow[i - 1] * (q - 1);

    WeightDistribution dual{wd.spec, N, std::vector<std::uint64_t>(N + 1, 0)};
    for (std::size_t j = 0; j <= N; ++j) {
        __int128 sum = 0;
        for (std::size_t i = 0; i <= N; ++i) {
            if (wd.counts[i] == 0) continue;
            __int128 kraw = 0;
            for (std::size_t s = 0; s <= j; ++s) {
                if (s > i || j - s > N - i) continue;
                __int128 term = binom[i][s] * binom[N - i][j - s] * qm1pow[j - s];
                kraw += (s % 2 == 0) ? term : -term;
            }
            sum += __int128(wd.counts[i]) * kraw;
        }
        if (sum % size != 0 || sum < 0) throw error("macwilliams: transform not integral (inconsistent input)");
        dual.counts[j] = std::uint64_t(sum / size);
    }
    return dual;
}

/// Formally self-dual: wd(C) equals the directly enumerated wd of <H>.
inline bool is_fsd(const DTCode& code, std::uint64_t budget = default_budget) {
    return rowspace_weight_distribution(code.G(), budget).counts ==
           rowspace_weight_distribution(code.H(), budget).counts;
}

/// Self-dual iff A A^T = -I.
inline bool is_self_dual(const DTCode& code) {
    FMatrix a = code.A();
    return mat_mul(a, transpose(a)) == mat_negate(FMatrix::identity(code.spec, code.n()));
}

struct IsodualityWitness {
    FMatrix Q;
    bool verified;
};

/// The reversal permutation Q with A Q = Q A^T; holds for every Toeplitz A,
/// so verified = false signals a library bug.
inline IsodualityWitness isoduality_witness(const DTCode& code) {
    FMatrix a = code.A();
    FMatrix q = reversal_permutation(code.spec, code.n());
    bool ok = mat_mul(a, q) == mat_mul(q, transpose(a));
    return {q, ok};
}

enum class SelfDualStructure { not_self_dual, circulant, negacirculant, both };

inline const char* to_string(SelfDualStructure s) {
    switch (s) {
        case SelfDualStructure::not_self_dual: return "not_self_dual";
        case SelfDualStructure::circulant: return "circulant";
        case SelfDualStructure::negacirculant: return "negacirculant";
        case SelfDualStructure::both: return "both";
    }
    return "?";
}

/// Every self-dual DT code must classify circulant and/or negacirculant; a
/// self-dual code matching neither predicate is an invariant violation.
inline SelfDualStructure classify_self_dual_structure(const DTCode& code) {
    if (!is_self_dual(code)) return SelfDualStructure::not_self_dual;
    bool c = is_circulant(code.gen);
    bool nc = is_negacirculant(code.gen);
    if (c && nc) return SelfDualStructure::both;
    if (c) return SelfDualStructure::circulant;
    if (nc) return SelfDualStructure::negacirculant;
    throw error("invariant violation: self-dual DT code neither circulant nor negacirculant: " +
                to_string(code.gen));
}

/// All codewords have even weight; defined for binary codes only. By linearity
/// of parity it suffices to check the rows of G.
inline bool is_even(const DTCode& code) {
    if (code.spec.q() != 2) throw error("evenness defined only over F_2");
    FMatrix g = code.G();
    for (std::size_t i = 0; i < g.rows; ++i) {
        unsigned w = 0;
        for (std::size_t j = 0; j < g.cols; ++j) w += (g.at(i, j) != 0);
        if (w % 2 != 0) return false;
    }
    return true;
}

/// Analysis report with the fixed field-name contract.
inline nlohmann::ordered_json analysis_report(const DTCode& code, std::uint64_t budget = default_budget) {
    nlohmann::ordered_json j;
    j["q"] = code.spec.q();
    j["n"] = code.n();
    j["gen"] = to_string(code.gen);
    MinDistResult md = min_distance_exact(code, budget);
    j["d"] = md.d;
    j["d_exact"] = md.exact;
    WeightDistribution wd = weight_distribution(code, budget);
    j["weight_distribution"] = wd.counts;
    j["fsd"] = rowspace_weight_distribution(code.H(), budget).counts == wd.counts;
    j["self_dual"] = is_self_dual(code);
    j["structure"] = to_string(classify_self_dual_structure(code));
    if (code.spec.q() == 2)
        j["even"] = is_even(code);
    else
        j["even"] = nullptr;
    return j;
}

} // namespace dtc
