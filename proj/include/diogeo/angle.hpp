#pragma once

// Rational-cosine angle classification: an angle commensurable with pi whose
// cosine is rational has cosine in {-1, -1/2, 0, 1/2, 1}. The denominator
// trace exposes the 2-adic growth argument behind that fact as a computation.

#include "diogeo/exact.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace diogeo {

enum class AngleTag { Zero, PiOver3, PiOver2, TwoPiOver3, Pi, NotCommensurable };

inline const char* to_string(AngleTag t) {
    switch (t) {
        case AngleTag::Zero: return "Zero";
        case AngleTag::PiOver3: return "PiOver3";
        case AngleTag::PiOver2: return "PiOver2";
        case AngleTag::TwoPiOver3: return "TwoPiOver3";
        case AngleTag::Pi: return "Pi";
        case AngleTag::NotCommensurable: return "NotCommensurable";
    }
    return "?";
}

struct AngleClass {
    AngleTag tag;
    Rational witness_cos;
};

// Classifies a rational cosine. NotCommensurable means arccos(r) is not a
// rational multiple of pi; the contract only covers rational inputs.
inline AngleClass classify_cos(const Rational& r) {
    if (r > 1 || r < -1) throw std::domain_error("classify_cos: |cos| > 1");
    if (r == 1) return {AngleTag::Zero, r};
    if (r == Rational(1, 2)) return {AngleTag::PiOver3, r};
    if (r == 0) return {AngleTag::PiOver2, r};
    if (r == Rational(-1, 2)) return {AngleTag::TwoPiOver3, r};
    if (r == -1) return {AngleTag::Pi, r};
    return {AngleTag::NotCommensurable, r};
}

// Law of cosines: angle between sides u and v, opposite side w.
// Degenerate (collinear) triangles are allowed.
inline Rational cos_from_sides(const Integer& u, const Integer& v, const Integer& w) {
    if (u <= 0 || v <= 0) throw std::domain_error("cos_from_sides: sides must be positive");
    Integer lo = abs(u - v);
    if (w < lo || w > u + v) throw std::domain_error("cos_from_sides: triangle inequality violated");
    return make_rational(u * u + v * v - w * w, 2 * u * v);
}

// Same angle from squared side lengths; rational exactly when u*v is, i.e.
// when uu*vv is a perfect square. Covers points whose distances are
// irrational but have integral squares.
inline std::optional<Rational> cos_from_squared_sides(const Integer& uu, const Integer& vv,
                                                      const Integer& ww) {
    if (uu <= 0 || vv <= 0) throw std::domain_error("cos_from_squared_sides: sides must be positive");
    auto s = as_perfect_square(uu * vv);
    if (!s) return std::nullopt;
    return make_rational(uu + vv - ww, 2 * *s);
}

// cos(k*alpha) where cos(alpha) = r, via the two-term recurrence
// cos((k+1)a) = 2 r cos(ka) - cos((k-1)a).
inline Rational cos_multiple(const Rational& r, unsigned k) {
    if (r > 1 || r < -1) throw std::domain_error("cos_multiple: |cos| > 1");
    Rational prev = 1, cur = r;
    if (k == 0) return prev;
    for (unsigned i = 1; i < k; ++i) {
        Rational next = 2 * r * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

struct DenominatorTrace {
    Integer u;                        // odd numerator of cos(alpha) = u / 2^p
    unsigned p;                       // 2-adic exponent, p >= 2
    std::vector<unsigned> valuations; // b_k = v2 of the reduced denominator of cos(k alpha)
    std::vector<Integer> numerators;  // a_k, all odd
    bool strictly_increasing;
    bool numerators_odd;
};

// Runs the recurrence for cos(alpha) = u / 2^p and records the 2-adic
// valuation of each reduced denominator. With u odd and p >= 2 the
// valuations must strictly increase and every numerator stays odd.
inline DenominatorTrace denominator_valuation_trace(const Integer& u, unsigned p, unsigned n) {
    if (p < 2) throw std::domain_error("denominator_valuation_trace: requires p >= 2");
    if ((u & 1) == 0) throw std::domain_error("denominator_valuation_trace: u must be odd");
    Integer pow2 = Integer(1) << p;
    if (abs(u) >= pow2) throw std::domain_error("denominator_valuation_trace: |u| must be < 2^p");
    if (n < 1) throw std::domain_error("denominator_valuation_trace: n >= 1");

    DenominatorTrace trace{u, p, {}, {}, true, true};
    Rational r = make_rational(u, pow2);
    Rational prev = 1, cur = r;
    for (unsigned k = 1; k <= n; ++k) {
        Integer den = denominator(cur);
        unsigned b = boost::multiprecision::lsb(den);
        if ((Integer(1) << b) != den)
            throw std::logic_error("denominator_valuation_trace: denominator not a power of two");
        Integer num = numerator(cur);
        trace.valuations.push_back(b);
        trace.numerators.push_back(num);
        if ((num & 1) == 0) trace.numerators_odd = false;
        if (k > 1 && trace.valuations[k - 1] <= trace.valuations[k - 2])
            trace.strictly_increasing = false;
        Rational next = 2 * r * cur - prev;
        prev = cur;
        cur = next;
    }
    return trace;
}

// Classifies the three interior angles of an integer-sided triangle, in the
// order: between (a,b), between (b,c), between (c,a). Any commensurable
// angle of a nondegenerate integer triangle lands in {PiOver3, PiOver2,
// TwoPiOver3}.
inline std::array<AngleClass, 3> diophantine_triangle_angle_filter(const Integer& a,
                                                                   const Integer& b,
                                                                   const Integer& c) {
    if (a <= 0 || b <= 0 || c <= 0) throw std::domain_error("triangle sides must be positive");
    if (a + b <= c || b + c <= a || c + a <= b)
        throw std::domain_error("degenerate triangle");
    return {classify_cos(cos_from_sides(a, b, c)),
            classify_cos(cos_from_sides(b, c, a)),
            classify_cos(cos_from_sides(c, a, b))};
}

}  // namespace diogeo
