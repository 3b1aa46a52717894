#pragma once

// Vectors and dense matrices over a small finite field, with first-class
// Toeplitz generators and the row-reversal permutation.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "galois.hpp"

namespace dtc {

struct FVector {
    FieldSpec spec;
    std::vector<Felt> v;

    std::size_t size() const { return v.size(); }
    Felt operator[](std::size_t i) const { return v[i]; }
    Felt& operator[](std::size_t i) { return v[i]; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (Felt x : v) w += (x != 0);
        return w;
    }

    friend bool operator==(const FVector& l, const FVector& r) { return l.spec == r.spec && l.v == r.v; }
};

struct FMatrix {
    FieldSpec spec;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Felt> a; // row-major

    FMatrix(FieldSpec s, std::size_t r, std::size_t c) : spec(s), rows(r), cols(c), a(r * c, 0) {
        if (r == 0 || c == 0) throw error("matrix dimensions must be positive");
    }

    Felt at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    Felt& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

    static FMatrix identity(FieldSpec s, std::size_t n) {
        FMatrix m(s, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const FMatrix& l, const FMatrix& r) {
        return l.spec == r.spec && l.rows == r.rows && l.cols == r.cols && l.a == r.a;
    }
};

/// Generator of an n x n Toeplitz matrix: shared diagonal t, upper tail
/// a_1..a_{n-1}, lower tail b_1..b_{n-1}.
struct ToeplitzGen {
    FieldSpec spec;
    std::size_t n = 1;
    Felt t = 0;
    std::vector<Felt> a; // length n-1
    std::vector<Felt> b; // length n-1

    ToeplitzGen(FieldSpec s, std::size_t n_, Felt t_, std::vector<Felt> a_, std::vector<Felt> b_)
        : spec(s), n(n_), t(t_), a(std::move(a_)), b(std::move(b_)) {
        if (n == 0) throw error("Toeplitz block size must be >= 1");
        if (a.size() != n - 1 || b.size() != n - 1) throw error("generator tails must have length n-1");
        spec.check(t);
        for (Felt x : a) spec.check(x);
        for (Felt x : b) spec.check(x);
    }

    /// Flat tuple (t, a_1..a_{n-1}, b_1..b_{n-1}); the canonical serialization
    /// and comparison order for search.
    std::vector<Felt> flat() const {
        std::vector<Felt> c;
        c.reserve(2 * n - 1);
        c.push_back(t);
        c.insert(c.end(), a.begin(), a.end());
        c.insert(c.end(), b.begin(), b.end());
        return c;
    }

    friend bool operator==(const ToeplitzGen& l, const ToeplitzGen& r) {
        return l.spec == r.spec && l.n == r.n && l.t == r.t && l.a == r.a && l.b == r.b;
    }
};

inline FMatrix toeplitz_matrix(const ToeplitzGen& g) {
    FMatrix m(g.spec, g.n, g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = 0; j < g.n; ++j)
            m.at(i, j) = (i == j) ? g.t : (j > i ? g.a[j - i - 1] : g.b[i - j - 1]);
    return m;
}

/// The anti-diagonal permutation Q (identity with rows reversed); Q^2 = I.
inline FMatrix reversal_permutation(FieldSpec spec, std::size_t n) {
    FMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
    return m;
}

inline FMatrix transpose(const FMatrix& m) {
    FMatrix r(m.spec, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

inline FMatrix mat_add(const FMatrix& l, const FMatrix& r) {
    if (l.rows != r.rows || l.cols != r.cols || l.spec != r.spec)
        throw error("matrix addition: dimension or field mismatch");
    FMatrix out(l.spec, l.rows, l.cols);
    for (std::size_t i = 0; i < l.a.size(); ++i) out.a[i] = l.spec.add(l.a[i], r.a[i]);
    return out;
}

inline FMatrix mat_mul(const FMatrix& l, const FMatrix& r) {
    if (l.cols != r.rows || l.spec != r.spec) throw error("matrix product: dimension or field mismatch");
    FMatrix out(l.spec, l.rows, r.cols);
    for (std::size_t i = 0; i < l.rows; ++i)
        for (std::size_t k = 0; k < l.cols; ++k) {
            Felt lik = l.at(i, k);
            if (lik == 0) continue;
            for (std::size_t j = 0; j < r.cols; ++j)
                out.at(i, j) = l.spec.add(out.at(i, j), l.spec.mul(lik, r.at(k, j)));
        }
    return out;
}

inline FMatrix scalar_mul(Felt c, const FMatrix& m) {
    FMatrix out(m.spec, m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.spec.mul(c, m.a[i]);
    return out;
}

inline FMatrix mat_negate(const FMatrix& m) { return scalar_mul(m.spec.neg(1), m); }

inline FVector vec_mat_mul(const FVector& v, const FMatrix& m) {
    if (v.size() != m.rows || v.spec != m.spec) throw error("vector-matrix product: dimension or field mismatch");
    FVector out{m.spec, std::vector<Felt>(m.cols, 0)};
    for (std::size_t i = 0; i < m.rows; ++i) {
        Felt vi = v[i];
        if (vi == 0) continue;
        for (std::size_t j = 0; j < m.cols; ++j)
            out[j] = m.spec.add(out[j], m.spec.mul(vi, m.at(i, j)));
    }
    return out;
}

/// b_i = a_{n-i} for all i.
inline bool is_circulant(const ToeplitzGen& g) {
    for (std::size_t i = 1; i < g.n; ++i)
        if (g.b[i - 1] != g.a[g.n - i - 1]) return false;
    return true;
}

/// b_i = -a_{n-i} for all i; coincides with is_circulant in characteristic 2.
inline bool is_negacirculant(const ToeplitzGen& g) {
    for (std::size_t i = 1; i < g.n; ++i)
        if (g.b[i - 1] != g.spec.neg(g.a[g.n - i - 1])) return false;
    return true;
}

// ---- text forms ----

inline std::string elements_to_string(const FieldSpec& spec, const std::vector<Felt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += spec.to_string(v[i]);
    }
    return s;
}

inline std::vector<Felt> parse_elements(const FieldSpec& spec, std::string_view s) {
    std::vector<Felt> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(spec.parse(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string to_string(const FVector& v) { return elements_to_string(v.spec, v.v); }

inline std::string to_string(const FMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (i) s += '\n';
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) s += ',';
            s += m.spec.to_string(m.at(i, j));
        }
    }
    return s;
}

/// `q=<q> n=<n> t=<elt> a=<e1,...> b=<e1,...>` (a/b empty when n=1).
inline std::string to_string(const ToeplitzGen& g) {
    std::ostringstream os;
    os << "q=" << g.spec.q() << " n=" << g.n << " t=" << g.spec.to_string(g.t)
       << " a=" << elements_to_string(g.spec, g.a) << " b=" << elements_to_string(g.spec, g.b);
    return os.str();
}

inline ToeplitzGen parse_toeplitz_gen(std::string_view s) {
    // tokens are key=value, value possibly empty
    unsigned q = 0;
    std::size_t n = 0;
    std::string t_str, a_str, b_str;
    bool have_q = false, have_n = false, have_t = false, have_a = false, have_b = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && s[pos] == ' ') ++pos;
        if (pos >= s.size()) break;
        std::size_t end = s.find(' ', pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view tok = s.substr(pos, end - pos);
        pos = end;
        std::size_t eq = tok.find('=');
        if (eq == std::string_view::npos) throw error("bad generator token '" + std::string(tok) + "'");
        std::string_view key = tok.substr(0, eq);
        std::string_view val = tok.substr(eq + 1);
        if (key == "q") {
            q = unsigned(std::stoul(std::string(val)));
            have_q = true;
        } else if (key == "n") {
            n = std::stoul(std::string(val));
            have_n = true;
        } else if (key == "t") {
            t_str = std::string(val);
            have_t = true;
        } else if (key == "a") {
            a_str = std::string(val);
            have_a = true;
        } else if (key == "b") {
            b_str = std::string(val);
            have_b = true;
        } else {
            throw error("unknown generator key '" + std::string(key) + "'");
        }
    }
    if (!have_q || !have_n || !have_t || !have_a || !have_b)
        throw error("generator text must contain q=, n=, t=, a=, b=");
    FieldSpec spec = FieldSpec::make(q);
    return ToeplitzGen(spec, n, spec.parse(t_str), parse_elements(spec, a_str), parse_elements(spec, b_str));
}

/// Lexicographic order on canonical encodings.
inline bool lex_less(const std::vector<Felt>& l, const std::vector<Felt>& r) { return l < r; }

} // namespace dtc
