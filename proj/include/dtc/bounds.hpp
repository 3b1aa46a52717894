#pragma once

// q-ary entropy, its inverse at rate 1/2, the Gilbert-Varshamov rate, and the
// exact counting ingredients of the random-coding argument. Real arithmetic is
// double precision with explicit tolerances; counts are exact wide integers.

#include <cmath>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "int128.hpp"

namespace dtc {

/// H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x), with 0 log 0 = 0.
inline double entropy(unsigned q, double x) {
    if (q < 2) throw error("entropy: q must be >= 2");
    if (x < 0.0 || x > 1.0) throw error("entropy: x must be in [0,1]");
    double logq = std::log(double(q));
    double h = x * std::log(double(q - 1)) / logq;
    if (x > 0.0) h -= x * std::log(x) / logq;
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x) / logq;
    return h;
}

/// The unique delta in (0, 1-1/q) with H_q(delta) = 1/2, by bisection; H_q is
/// strictly increasing on that interval.
inline double entropy_inverse_half(unsigned q, double tol = 1e-9) {
    if (tol <= 0.0) throw error("entropy_inverse_half: tol must be positive");
    double lo = 0.0, hi = 1.0 - 1.0 / double(q);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        (entropy(q, mid) < 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Gilbert-Varshamov rate 1 - H_q(delta).
inline double gv_rate(unsigned q, double delta) {
    if (delta < 0.0 || delta > 1.0 - 1.0 / double(q)) throw error("gv_rate: delta outside [0, 1-1/q]");
    return 1.0 - entropy(q, delta);
}

/// q^(2n-1), the number of DT generator tuples of length 2n.
inline u128 dt_code_count(unsigned q, std::size_t n) {
    return checked_pow(q, unsigned(2 * n - 1));
}

/// Exact number of vectors in F_q^N of weight < d: sum_{i<d} C(N,i) (q-1)^i.
inline u128 ball_size(unsigned q, std::size_t N, std::size_t d) {
    if (d > N + 1) throw error("ball_size: d must be <= N+1");
    u128 total = 0;
    u128 binom = 1; // C(N, i)
    u128 pw = 1;    // (q-1)^i
    for (std::size_t i = 0; i < d; ++i) {
        total = checked_add(total, checked_mul(binom, pw));
        binom = checked_mul(binom, N - i) / (i + 1);
        pw = checked_mul(pw, q - 1);
    }
    return total;
}

/// ball_size(q, N, floor(N delta)) <= q^(N H_q(delta)); the volume bound used
/// by the random-coding argument, checked at finite scale.
inline bool ball_bound_check(unsigned q, std::size_t N, double delta) {
    if (delta < 0.0 || delta > 1.0 - 1.0 / double(q)) throw error("ball_bound_check: delta outside [0, 1-1/q]");
    std::size_t d = std::size_t(std::floor(double(N) * delta));
    u128 v = ball_size(q, N, d);
    double bound = double(N) * entropy(q, delta) * std::log(double(q));
    // compare in log space to avoid overflow
    return v == 0 || std::log(u128_to_double(v)) <= bound + 1e-12;
}

/// Smallest n at which the counting inequality q^(2n-1) > q^n * V_n holds and
/// keeps holding up to `horizon`, where V_n = ball_size(q, 2n, floor(2n delta)).
/// Requires H_q(delta) < 1/2; the inequality compares in log_q space so large
/// n do not overflow.
inline std::size_t counting_threshold(unsigned q, double delta, std::size_t horizon = 512) {
    if (entropy(q, delta) >= 0.5) throw error("counting_threshold: needs H_q(delta) < 1/2");
    auto holds = [&](std::size_t n) {
        // log_q(q^n V_n) vs 2n-1; V_n computed exactly when it fits, else via
        // the entropy bound (which only overestimates V_n, so a pass is safe).
        std::size_t N = 2 * n, d = std::size_t(std::floor(double(N) * delta));
        double log_v;
        try {
            u128 v = ball_size(q, N, d);
            log_v = v == 0 ? 0.0 : std::log(u128_to_double(v)) / std::log(double(q));
        } catch (const error&) {
            log_v = double(N) * entropy(q, delta);
        }
        return double(n) + log_v < double(2 * n - 1);
    };
    std::size_t first = 0;
    for (std::size_t n = 1; n <= horizon; ++n) {
        if (holds(n)) {
            if (first == 0) first = n;
        } else {
            first = 0;
        }
    }
    if (first == 0) throw error("counting_threshold: inequality never stabilizes below horizon");
    return first;
}

/// JSON report: delta at rate 1/2, entropy curve samples, ball sizes against
/// the volume bound, and the counting-inequality threshold.
inline nlohmann::ordered_json bound_report(unsigned q, double tol = 1e-9, std::size_t curve_samples = 21) {
    nlohmann::ordered_json j;
    j["q"] = q;
    double dgv = entropy_inverse_half(q, tol);
    j["delta_gv_half"] = dgv;
    j["gv_rate_at_delta"] = gv_rate(q, dgv);
    nlohmann::ordered_json curve = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < curve_samples; ++i) {
        double x = (1.0 - 1.0 / double(q)) * double(i) / double(curve_samples - 1);
        curve.push_back({{"x", x}, {"H", entropy(q, x)}});
    }
    j["entropy_curve"] = curve;
    nlohmann::ordered_json balls = nlohmann::ordered_json::array();
    double delta = dgv * 0.9; // inside the valid range, H_q(delta) < 1/2
    for (std::size_t N = 4; N <= 24; N += 4) {
        std::size_t d = std::size_t(std::floor(double(N) * delta));
        balls.push_back({{"N", N},
                         {"d", d},
                         {"ball_size", to_string(ball_size(q, N, d))},
                         {"bound_holds", ball_bound_check(q, N, delta)}});
    }
    j["ball_sizes"] = balls;
    j["counting_threshold"] = {{"delta", delta}, {"n0", counting_threshold(q, delta)}};
    return j;
}

} // namespace dtc
