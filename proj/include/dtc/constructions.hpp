#pragma once

// Explicit DT code families: self-dual generators built from a square root of
// -1 over prime fields with q = 1 (mod 4), quadratic-residue generators over
// F_4, and the five worked example generators as named fixtures.
//
// Note the residue indicator rule and the worked example vectors disagree on b
// (and on a for p=7); both are exposed, the fixtures carry the claimed
// [N, k, d] parameters.

#include <vector>

#include "algebra.hpp"

namespace dtc {

/// E_i = E_1^i: ones on the i-th superdiagonal, zero elsewhere.
inline FMatrix shift_nilpotent(FieldSpec spec, std::size_t n, std::size_t i) {
    if (i < 1 || i > n - 1) throw error("shift_nilpotent: i must be in 1..n-1");
    FMatrix m(spec, n, n);
    for (std::size_t r = 0; r + i < n; ++r) m.at(r, r + i) = 1;
    return m;
}

enum class SelfDualVariant { circulant, negacirculant, scalar };

/// Generator of a self-dual DT code over a prime field with q = 1 (mod 4):
///   circulant(i):     A = s E_i + s E_{n-i}^T
///   negacirculant(i): A = s E_i - s E_{n-i}^T
///   scalar:           A = s I
/// with s the square root of -1. All satisfy A A^T = -I.
inline ToeplitzGen self_dual_generator(FieldSpec spec, std::size_t n, SelfDualVariant variant, std::size_t i = 0) {
    Felt s = spec.sqrt_minus_one();
    std::vector<Felt> a(n - 1, 0), b(n - 1, 0);
    Felt t = 0;
    switch (variant) {
        case SelfDualVariant::scalar:
            t = s;
            break;
        case SelfDualVariant::circulant:
        case SelfDualVariant::negacirculant:
            if (i < 1 || i > n - 1) throw error("self_dual_generator: i must be in 1..n-1");
            a[i - 1] = s;                                                              // E_i term
            b[n - i - 1] = (variant == SelfDualVariant::circulant) ? s : spec.neg(s);  // E_{n-i}^T term
            break;
    }
    return ToeplitzGen(spec, n, t, std::move(a), std::move(b));
}

/// Quadratic residues mod p by Euler's criterion (here: squaring, p is small).
inline std::vector<bool> quadratic_residues(unsigned p) {
    std::vector<bool> qr(p, false);
    for (unsigned x = 1; x < p; ++x) qr[(x * x) % p] = true;
    return qr;
}

struct QRSpec {
    unsigned p;
    Felt t = 2; // default t = w

    QRSpec(unsigned p_, Felt t_ = 2) : p(p_), t(t_) {
        if (!detail::is_prime(p)) throw error("QR construction: p must be prime");
        FieldSpec::make(4).check(t);
    }
};

/// Generator over F_4 with n = p: a_i = 1 iff i is a quadratic residue mod p,
/// b_i = 1 iff i is a non-residue. p = 2 has no residue structure and is
/// served by the fixed Example-1 pair a = b = (1).
inline ToeplitzGen qr_generator(const QRSpec& qr) {
    FieldSpec f4 = FieldSpec::make(4);
    if (qr.p == 2) return ToeplitzGen(f4, 2, qr.t, {1}, {1});
    std::vector<bool> res = quadratic_residues(qr.p);
    std::vector<Felt> a(qr.p - 1), b(qr.p - 1);
    for (unsigned i = 1; i < qr.p; ++i) {
        a[i - 1] = res[i] ? 1 : 0;
        b[i - 1] = res[i] ? 0 : 1;
    }
    return ToeplitzGen(f4, qr.p, qr.t, std::move(a), std::move(b));
}

/// The worked example generators for p = 2, 3, 5, 7, 11, exactly as printed;
/// they yield [4,2,3], [6,3,3], [10,5,4], [14,7,5], [22,11,7] codes.
inline ToeplitzGen paper_example_generator(unsigned p) {
    FieldSpec f4 = FieldSpec::make(4);
    const Felt w = 2;
    switch (p) {
        case 2: return ToeplitzGen(f4, 2, w, {1}, {1});
        case 3: return ToeplitzGen(f4, 3, w, {1, 0}, {1, 0});
        case 5: return ToeplitzGen(f4, 5, w, {1, 0, 0, 1}, {1, 0, 1, 1});
        case 7: return ToeplitzGen(f4, 7, w, {0, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 1, 1});
        case 11:
            return ToeplitzGen(f4, 11, w, {1, 0, 1, 1, 1, 0, 0, 0, 1, 0}, {1, 0, 0, 1, 0, 1, 1, 1, 1, 1});
        default: throw error("no example generator for p=" + std::to_string(p));
    }
}

} // namespace dtc
