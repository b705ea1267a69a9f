#pragma once

// Sweep over all angles m*pi/n, n <= n_max, 0 <= m <= 2n, looking for
// rational cosines. For such angles 2*cos is an algebraic integer, so a
// rational cosine forces 2*cos to be a rational integer; the sweep therefore
// only has to decide whether 2*cos is an integer, which small denominators
// settle exactly and a numeric gap settles everywhere else.

#include "diogeo/angle.hpp"
#include "diogeo/exact.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace diogeo {

struct AngleSweepEntry {
    std::uint64_t m, n;  // reduced angle m*pi/n
    Rational cosine;
    AngleTag tag;
};

struct AngleSweepResult {
    std::uint64_t n_max = 0;
    std::uint64_t examined = 0;
    std::vector<AngleSweepEntry> rational_hits;  // one per reduced angle with rational cos
    bool only_admissible = true;  // every rational cosine found is in the five-value list
};

namespace detail {

// Exact rational cos(m*pi/n) for reduced n in {1, 2, 3, 6}; the cosine is
// rational precisely for these reduced denominators (plus n=4/others where
// it is irrational).
inline std::optional<Rational> exact_rational_cos(std::uint64_t m, std::uint64_t n) {
    switch (n) {
        case 1: return Rational(m % 2 == 0 ? 1 : -1);
        case 2: return Rational(0);
        case 3: {
            static const int num[6] = {2, 1, -1, -2, -1, 1};
            return Rational(num[m % 6], 2);
        }
        case 6: return std::nullopt;  // cos(m*pi/6) with m odd reduced: +-sqrt3/2
        default: return std::nullopt;
    }
}

}  // namespace detail

inline AngleSweepResult angle_sweep(std::uint64_t n_max) {
    AngleSweepResult res;
    res.n_max = n_max;
    constexpr long double kPi = 3.14159265358979323846264338327950288L;
    constexpr long double kGap = 1e-9L;
    std::map<std::pair<std::uint64_t, std::uint64_t>, bool> seen;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        for (std::uint64_t m = 0; m <= 2 * n; ++m) {
            ++res.examined;
            std::uint64_t g = std::gcd(m == 0 ? n : m, n);
            std::uint64_t rm = m / g, rn = n / g;
            if (m == 0) { rm = 0; rn = 1; }
            if (seen.count({rm, rn})) continue;
            seen[{rm, rn}] = true;

            std::optional<Rational> value;
            if (auto exact = detail::exact_rational_cos(rm, rn)) {
                value = exact;
            } else {
                long double x = cosl(kPi * static_cast<long double>(rm) /
                                     static_cast<long double>(rn));
                long double doubled = 2.0L * x;
                long long nearest = llroundl(doubled);
                if (fabsl(doubled - static_cast<long double>(nearest)) < kGap)
                    value = Rational(Integer(nearest), Integer(2));
            }
            if (!value) continue;
            auto cls = classify_cos(*value);
            res.rational_hits.push_back({rm, rn, *value, cls.tag});
            if (cls.tag == AngleTag::NotCommensurable) res.only_admissible = false;
        }
    }
    return res;
}

}  // namespace diogeo
