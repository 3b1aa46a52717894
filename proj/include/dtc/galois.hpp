#pragma once

// Exact arithmetic for small finite fields: prime fields F_p (p < 256)
// and the quartic field F_4 = F_2[w]/(w^2+w+1).
//
// Elements are canonical integer encodings 0..q-1. For F_4 the encoding is
//   0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2,
// chosen so that elements print as "0", "1", "w", "w^2". All lexicographic
// comparisons in this library use the encoding order.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dtc {

/// Canonical element encoding, valid range 0..q-1 for the owning field.
using Felt = std::uint8_t;

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

constexpr bool is_prime(unsigned m) {
    if (m < 2) return false;
    for (unsigned d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// F_4 multiplication in the encoding above; addition is XOR.
constexpr Felt f4_mul_table[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

} // namespace detail

class FieldSpec {
  public:
    static constexpr unsigned max_prime = 256; // primes below this are supported

    /// q must be a prime below max_prime, or 4.
    static FieldSpec make(unsigned q) {
        if (q == 4) return FieldSpec(4, 2, 2);
        if (q >= 2 && q < max_prime && detail::is_prime(q)) return FieldSpec(q, q, 1);
        throw error("unsupported field order q=" + std::to_string(q));
    }

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return degree_; }
    bool is_prime_field() const { return degree_ == 1; }

    bool valid(Felt x) const { return x < q_; }

    void check(Felt x) const {
        if (!valid(x)) throw error("element encoding " + std::to_string(x) + " out of range for q=" + std::to_string(q_));
    }

    Felt add(Felt x, Felt y) const {
        if (degree_ == 2) return x ^ y;
        unsigned s = unsigned(x) + y;
        return Felt(s >= q_ ? s - q_ : s);
    }

    Felt sub(Felt x, Felt y) const {
        if (degree_ == 2) return x ^ y;
        return Felt(x >= y ? x - y : x + q_ - y);
    }

    Felt neg(Felt x) const { return sub(0, x); }

    Felt mul(Felt x, Felt y) const {
        if (degree_ == 2) return detail::f4_mul_table[x][y];
        return Felt((unsigned(x) * y) % q_);
    }

    Felt inv(Felt x) const {
        if (x == 0) throw error("division by zero in F_" + std::to_string(q_));
        for (unsigned c = 1; c < q_; ++c)
            if (mul(x, Felt(c)) == 1) return Felt(c);
        throw error("no inverse found (internal)");
    }

    Felt div(Felt x, Felt y) const { return mul(x, inv(y)); }

    /// Smallest s (by encoding) with s^2 = -1; defined for prime q = 1 (mod 4).
    Felt sqrt_minus_one() const {
        if (!is_prime_field() || q_ % 4 != 1)
            throw error("no square root of -1 in F_" + std::to_string(q_));
        Felt minus_one = neg(1);
        for (unsigned s = 0; s < q_; ++s)
            if (mul(Felt(s), Felt(s)) == minus_one) return Felt(s);
        throw error("no square root of -1 found (internal)");
    }

    std::string to_string(Felt x) const {
        check(x);
        if (degree_ == 2) {
            static const char* names[4] = {"0", "1", "w", "w^2"};
            return names[x];
        }
        return std::to_string(unsigned(x));
    }

    Felt parse(std::string_view s) const {
        if (degree_ == 2) {
            if (s == "0") return 0;
            if (s == "1") return 1;
            if (s == "w") return 2;
            if (s == "w^2") return 3;
            throw error("bad F_4 element '" + std::string(s) + "'");
        }
        unsigned v = 0;
        if (s.empty()) throw error("empty field element");
        for (char c : s) {
            if (c < '0' || c > '9') throw error("bad field element '" + std::string(s) + "'");
            v = v * 10 + unsigned(c - '0');
            if (v >= q_) throw error("element '" + std::string(s) + "' out of range for q=" + std::to_string(q_));
        }
        return Felt(v);
    }

    friend bool operator==(const FieldSpec& l, const FieldSpec& r) { return l.q_ == r.q_; }
    friend bool operator!=(const FieldSpec& l, const FieldSpec& r) { return l.q_ != r.q_; }

  private:
    FieldSpec(unsigned q, unsigned p, unsigned degree) : q_(q), p_(p), degree_(degree) {}

    unsigned q_;
    unsigned p_;
    unsigned degree_;
};

/// Dispatch helper for the four binary operations.
enum class FieldOp { add, sub, mul, div };

inline Felt arith(const FieldSpec& spec, FieldOp op, Felt x, Felt y) {
    spec.check(x);
    spec.check(y);
    switch (op) {
        case FieldOp::add: return spec.add(x, y);
        case FieldOp::sub: return spec.sub(x, y);
        case FieldOp::mul: return spec.mul(x, y);
        case FieldOp::div: return spec.div(x, y);
    }
    throw error("bad field op");
}

} // namespace dtc
