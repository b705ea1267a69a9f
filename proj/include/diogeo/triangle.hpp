#pragma once

// Equilateral-triangle engine. Frame: A=(0,0), B=(a,0), C=(a/2, a*sqrt3/2);
// p, q, k are the distances from the candidate point M to A, C, B. Points
// live in Q + Q*sqrt3 coordinates: (x, t*sqrt3) with x, t rational.

#include "diogeo/angle.hpp"
#include "diogeo/exact.hpp"
#include "diogeo/forms.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace diogeo {

struct TriangleConfig {
    Integer a;        // side
    Integer p, q, k;  // distances M->A, M->C (apex), M->B
};

struct TrianglePoint {
    Rational x, t;    // the point (x, t*sqrt3)
    Rational defect;  // p^2 - x^2 - 3t^2; zero iff a real point exists
};

struct FamilyParams {
    Integer l, m, n;  // m > n >= 1, l >= 1
};

struct TriangleHit {
    Integer a, p, q, k;  // canonical p <= q <= k
    Rational defect;
    bool collinear;  // on a line through two vertices
    bool inside;     // strictly interior
};

struct TriangleScanResult {
    Integer a_max;
    Rational ratio;
    std::vector<TriangleHit> hits;
    std::uint64_t enumerated = 0;
    double elapsed_seconds = 0;
};

// The symmetric quartic whose vanishing is necessary for an integer-distance
// point: a^4+p^4+k^4+q^4 minus all pairwise products of squares.
inline Integer quartic_residual(const Integer& a, const Integer& p, const Integer& q,
                            const Integer& k) {
    Integer aa = a * a, pp = p * p, qq = q * q, kk = k * k;
    return aa * aa + pp * pp + kk * kk + qq * qq - aa * pp - aa * kk - aa * qq - pp * kk -
           pp * qq - kk * qq;
}

// The quadratic-in-a^2 display of the same polynomial, minus quartic_residual;
// identically zero.
inline Integer residual_display_consistency(const Integer& a, const Integer& p, const Integer& q,
                                         const Integer& k) {
    Integer aa = a * a, pp = p * p, qq = q * q, kk = k * k;
    Integer expanded = aa * aa - (pp + qq + kk) * aa +
                   (pp * pp + qq * qq + kk * kk - pp * qq - pp * kk - qq * kk);
    return expanded - quartic_residual(a, p, q, k);
}

// Point from the A and B circle equations plus linear elimination of the
// apex equation; realizability is the separate defect value.
inline TrianglePoint point_from_distances_tri(const Integer& a, const Integer& p,
                                              const Integer& k, const Integer& q) {
    if (a < 1) throw std::domain_error("point_from_distances_tri: a >= 1");
    Rational x = make_rational(a * a + p * p - k * k, 2 * a);
    Rational t = (Rational(p * p + a * a - q * q) - a * x) / (3 * a);
    Rational defect = Rational(p * p) - x * x - 3 * t * t;
    return {x, t, defect};
}

// Parameters violating the defining relation raise; thrown only on internal
// inconsistency, never in normal use.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Collinear solution family (point on the circumscribed circle, on a line
// through two vertices): a = l(m^2-n^2), p = l(n^2+2mn), k = l(m^2+mn+n^2),
// q = a + p. Validated against k^2 = a^2 + ap + p^2 and the quartic.
inline TriangleConfig gen_circumcircle_family(const FamilyParams& params) {
    const Integer &l = params.l, &m = params.m, &n = params.n;
    if (n < 1 || m <= n) throw std::domain_error("gen_circumcircle_family: m > n >= 1");
    if (l < 1) throw std::domain_error("gen_circumcircle_family: l >= 1");
    Integer a = l * (m * m - n * n);
    Integer p = l * (n * n + 2 * m * n);
    Integer k = l * (m * m + m * n + n * n);
    Integer q = a + p;
    if (k * k != a * a + a * p + p * p)
        throw ConsistencyError("gen_circumcircle_family: k^2 != a^2 + ap + p^2");
    if (quartic_residual(a, p, q, k) != 0)
        throw ConsistencyError("gen_circumcircle_family: nonzero quartic residual");
    return {a, p, q, k};
}

namespace detail {

inline bool triangle_collinear(const Integer& a, const TrianglePoint& pt) {
    // lines AB (t = 0), AC (t = x) and BC (t = a - x)
    return pt.t == 0 || pt.t == pt.x || pt.t == Rational(a) - pt.x;
}

inline bool triangle_inside(const Integer& a, const TrianglePoint& pt) {
    return pt.t > 0 && pt.t < pt.x && pt.t < Rational(a) - pt.x;
}

}  // namespace detail

// Exhaustive scan: a <= a_max, canonical p <= q <= k <= ratio*a, quartic
// residual zero. For each (a, p, q) the admissible k^2 are the roots of a
// quadratic with discriminant 3*(a+p+q)(-a+p+q)(a-p+q)(a+p-q).
inline TriangleScanResult scan_triangles(std::uint64_t a_max,
                                         const Rational& ratio = Rational(3),
                                         unsigned jobs = 1) {
    if (a_max < 1) throw std::domain_error("scan_triangles: a_max >= 1");
    if (a_max > 20000) throw std::domain_error("scan_triangles: a_max too large for fixed-width path");
    if (ratio <= 0) throw std::domain_error("scan_triangles: ratio > 0");
    auto t0 = std::chrono::steady_clock::now();
    unsigned n_jobs = jobs == 0 ? 1 : jobs;

    struct Part {
        std::uint64_t enumerated = 0;
        std::vector<std::array<std::uint64_t, 4>> found;  // (a, p, q, k)
    };
    std::vector<Part> parts(n_jobs);
    auto worker = [&](unsigned j) {
        Part& part = parts[j];
        for (std::uint64_t a = 1 + j; a <= a_max; a += n_jobs) {
            Integer rmax_big = (numerator(ratio) * a) / denominator(ratio);
            std::uint64_t rmax = rmax_big.convert_to<std::uint64_t>();
            for (std::uint64_t p = 1; p <= rmax; ++p) {
                for (std::uint64_t q = p; q <= rmax; ++q) {
                    ++part.enumerated;
                    std::uint64_t s = a * a + p * p + q * q;
                    // discriminant via the Heron-style product; negative
                    // when (a, p, q) violate the triangle inequality
                    long long f1 = static_cast<long long>(a + p + q);
                    long long f2 = static_cast<long long>(p + q) - static_cast<long long>(a);
                    long long f3 = static_cast<long long>(a + q) - static_cast<long long>(p);
                    long long f4 = static_cast<long long>(a + p) - static_cast<long long>(q);
                    __int128 disc = static_cast<__int128>(3) * f1 * f2 * f3 * f4;
                    if (disc < 0) continue;
                    if (disc > static_cast<__int128>(UINT64_MAX))
                        throw std::domain_error("scan_triangles: bounds exceed fixed-width range");
                    auto root = as_perfect_square_u64(static_cast<std::uint64_t>(disc));
                    if (!root) continue;
                    for (int sign = 0; sign < 2; ++sign) {
                        if (sign == 1 && *root == 0) break;
                        std::uint64_t num = sign ? s - *root : s + *root;
                        if (num & 1) continue;
                        auto k = as_perfect_square_u64(num / 2);
                        if (!k || *k < q || *k > rmax) continue;
                        part.found.push_back({a, p, q, *k});
                    }
                }
            }
        }
    };
    if (n_jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < n_jobs; ++j) threads.emplace_back(worker, j);
        for (auto& t : threads) t.join();
    }

    TriangleScanResult res;
    res.a_max = a_max;
    res.ratio = ratio;
    std::set<std::array<std::uint64_t, 4>> seen;
    std::vector<std::array<std::uint64_t, 4>> all;
    for (auto& part : parts) {
        res.enumerated += part.enumerated;
        all.insert(all.end(), part.found.begin(), part.found.end());
    }
    std::sort(all.begin(), all.end());
    for (auto& rec : all) {
        if (!seen.insert(rec).second) continue;
        Integer a = rec[0], p = rec[1], q = rec[2], k = rec[3];
        auto pt = point_from_distances_tri(a, p, k, q);
        bool realizable = pt.defect == 0;
        res.hits.push_back({a, p, q, k, pt.defect,
                            realizable && detail::triangle_collinear(a, pt),
                            realizable && detail::triangle_inside(a, pt)});
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Product form of the quartic with a singled out, minus quartic_residual;
// identically zero, so the factorization holds on the whole solution
// variety.
inline Integer factorization_defect_a(const Integer& a, const Integer& p, const Integer& q,
                                       const Integer& k) {
    Integer aa = a * a, pp = p * p, qq = q * q, kk = k * k, pq = p * q;
    Integer lhs = (aa - (pp + pq + qq)) * (aa + pq - kk);
    Integer rhs = ((p + q) * (p + q) - kk) * (kk - (pp - pq + qq));
    return (lhs - rhs) - quartic_residual(a, p, q, k);
}

// Same product form with the roles of a and k exchanged.
inline Integer factorization_defect_k(const Integer& a, const Integer& p, const Integer& q,
                                       const Integer& k) {
    Integer aa = a * a, pp = p * p, qq = q * q, kk = k * k, pq = p * q;
    Integer lhs = (kk - (pp + pq + qq)) * (kk + pq - aa);
    Integer rhs = ((p + q) * (p + q) - aa) * (aa - (pp - pq + qq));
    return (lhs - rhs) - quartic_residual(a, p, q, k);
}

enum class CaseVerdict {
    WitnessFound,        // induced square condition met for these parameters
    NoWitness,           // no integer witness for these parameters
    Unsolvable,          // no solutions at all (irrational branch / certified form)
    ReducesToCollinear,  // collapses to the collinear family
};

inline const char* to_string(CaseVerdict v) {
    switch (v) {
        case CaseVerdict::WitnessFound: return "WitnessFound";
        case CaseVerdict::NoWitness: return "NoWitness";
        case CaseVerdict::Unsolvable: return "Unsolvable";
        case CaseVerdict::ReducesToCollinear: return "ReducesToCollinear";
    }
    return "?";
}

struct CaseOutcome {
    std::string name;
    CaseVerdict verdict;
    std::map<std::string, Integer> values;
    std::string note;
};

using CaseReport = std::vector<CaseOutcome>;

// The five possible commensurable values of the angle at a vertex between
// the rays to M and to an adjacent vertex, for fixed side a and distance p.
inline CaseReport vertex_angle_cases(const Integer& a, const Integer& p) {
    if (a < 1 || p < 1) throw std::domain_error("vertex_angle_cases: a, p >= 1");
    CaseReport report;

    Integer f_plus = a * a + a * p + p * p;
    Integer f_minus = a * a - a * p + p * p;

    CaseOutcome pi_case{"alpha=pi", CaseVerdict::NoWitness, {{"k_squared", f_plus}},
                        "q = a + p, k^2 = a^2 + ap + p^2"};
    if (auto k = as_perfect_square(f_plus)) {
        pi_case.verdict = CaseVerdict::WitnessFound;
        pi_case.values["k"] = *k;
        pi_case.values["q"] = a + p;
    }
    report.push_back(pi_case);

    CaseOutcome c2{"alpha=2pi/3",
                   CaseVerdict::Unsolvable,
                   {{"k_squared", f_minus}, {"q_squared", f_plus}},
                   "k^2 and q^2 would solve the concordant pair system, certified empty"};
    if (as_perfect_square(f_minus) && as_perfect_square(f_plus))
        c2.verdict = CaseVerdict::WitnessFound;  // would contradict the certification
    report.push_back(c2);

    report.push_back({"alpha=pi/3", CaseVerdict::ReducesToCollinear, {},
                      "same treatment as alpha=pi"});
    report.push_back({"alpha=pi/2", CaseVerdict::Unsolvable, {},
                      "k^2 = p^2 + a^2 +- ap*sqrt3 is irrational for ap != 0"});
    report.push_back({"alpha=0", CaseVerdict::ReducesToCollinear, {},
                      "same treatment as alpha=pi"});
    return report;
}

// The five possible commensurable values of the angle at M between the rays
// to two vertices, for fixed distances p and q.
inline CaseReport m_angle_cases(const Integer& p, const Integer& q) {
    if (p < 1 || q < 1) throw std::domain_error("m_angle_cases: p, q >= 1");
    CaseReport report;

    report.push_back({"beta=pi", CaseVerdict::ReducesToCollinear, {},
                      "collinear with a vertex pair"});

    Integer f_plus = p * p + p * q + q * q;
    CaseOutcome c2{"beta=2pi/3", CaseVerdict::NoWitness, {{"a_squared", f_plus}},
                   "a^2 = p^2 + pq + q^2 and k is forced to p + q (collinear)"};
    if (auto a = as_perfect_square(f_plus)) {
        c2.verdict = CaseVerdict::ReducesToCollinear;
        c2.values["a"] = *a;
        c2.values["k"] = p + q;
    }
    report.push_back(c2);

    report.push_back({"beta=pi/2", CaseVerdict::Unsolvable, {},
                      "k^2 = p^2 + q^2 +- pq*sqrt3 is irrational for pq != 0"});

    Integer f_minus = p * p - p * q + q * q;
    CaseOutcome c3{"beta=pi/3", CaseVerdict::NoWitness, {{"a_squared", f_minus}},
                   "a^2 = p^2 - pq + q^2 and q is forced to k + p (collinear)"};
    if (q > p) {
        if (auto a = as_perfect_square(f_minus)) {
            c3.verdict = CaseVerdict::ReducesToCollinear;
            c3.values["a"] = *a;
            c3.values["k"] = q - p;
        }
    }
    report.push_back(c3);

    report.push_back({"beta=0", CaseVerdict::ReducesToCollinear, {},
                      "collinear with a vertex pair"});
    return report;
}

}  // namespace diogeo
