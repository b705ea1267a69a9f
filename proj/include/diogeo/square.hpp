#pragma once

// Steinhaus-square engine. Frame: A=(0,0), B=(0,p), C=(p,p), D=(p,0);
// a, b, c, d are the distances from the candidate point M to A, B, C, D.

#include "diogeo/angle.hpp"
#include "diogeo/exact.hpp"
#include "diogeo/forms.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace diogeo {

struct SquareConfig {
    Integer p;           // side length
    Integer a, b, c, d;  // distances M->A, M->B, M->C, M->D
    Rational x, y;       // derived point coordinates
};

// One scan record: integer side plus integer a, b, d; c_squared is the
// derived fourth squared distance, a perfect square exactly for exact hits.
struct SquareHit {
    Integer p, a, b, d;
    Integer c_squared;
    bool exact;
    bool collinear;  // M on a line containing a side
    Rational x, y;
};

struct SquareScanResult {
    Integer p_max;
    Rational ratio;
    std::vector<SquareHit> hits;
    std::uint64_t enumerated = 0;
    double elapsed_seconds = 0;

    std::uint64_t exact_count() const {
        std::uint64_t n = 0;
        for (auto& h : hits) n += h.exact ? 1 : 0;
        return n;
    }
    std::uint64_t near_miss_count() const { return hits.size() - exact_count(); }
};

// Unique point consistent with the A, B, D circle equations' linear
// combinations. Does not by itself guarantee x^2 + y^2 = a^2.
inline std::pair<Rational, Rational> point_from_distances(const Integer& p, const Integer& a,
                                                          const Integer& b, const Integer& d) {
    if (p < 1) throw std::domain_error("point_from_distances: p >= 1");
    Integer t = p * p + a * a;
    return {make_rational(t - d * d, 2 * p), make_rational(t - b * b, 2 * p)};
}

// LHS - RHS of the four equations relating side and squared distances; all
// four vanish exactly on realizable integer configurations.
inline std::array<Integer, 4> config_residuals(const Integer& p, const Integer& a,
                                               const Integer& b, const Integer& c,
                                               const Integer& d) {
    auto sq = [](const Integer& v) { return v * v; };
    Integer pp = p * p, aa = a * a, bb = b * b, cc = c * c, dd = d * d;
    return {
        sq(pp + aa - bb) + sq(pp + aa - dd) - sq(2 * p * a),
        sq(pp + bb - aa) + sq(pp + bb - cc) - sq(2 * p * b),
        sq(pp + dd - aa) + sq(pp + dd - cc) - sq(2 * p * d),
        sq(pp + cc - dd) + sq(pp + cc - bb) - sq(2 * p * c),
    };
}

inline std::array<Integer, 4> config_residuals(const SquareConfig& cfg) {
    return config_residuals(cfg.p, cfg.a, cfg.b, cfg.c, cfg.d);
}

// a^2 + c^2 - b^2 - d^2; zero for any distances realized by an actual point.
inline Integer british_flag_defect(const Integer& a, const Integer& b, const Integer& c,
                                   const Integer& d) {
    return a * a + c * c - b * b - d * d;
}

namespace detail {

inline bool square_collinear(const Integer& p, const Rational& x, const Rational& y) {
    return x == 0 || y == 0 || x == p || y == p;
}

// Canonical labeling. Near misses keep the non-square distance at C, so the
// only remaining symmetry swaps b and d. Exact hits take the
// lexicographically least image under the square's 8 symmetries.
inline std::tuple<Integer, Integer, Integer> canonical_near_miss(Integer a, Integer b, Integer d) {
    if (b > d) std::swap(b, d);
    return {a, b, d};
}

inline std::array<Integer, 4> canonical_exact(const std::array<Integer, 4>& v) {
    std::array<Integer, 4> best = v;
    for (int refl = 0; refl < 2; ++refl) {
        for (int rot = 0; rot < 4; ++rot) {
            std::array<Integer, 4> w;
            for (int i = 0; i < 4; ++i) {
                int idx = refl ? (rot - i + 8) % 4 : (rot + i) % 4;
                w[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(idx)];
            }
            if (w < best) best = w;
        }
    }
    return best;
}

}  // namespace detail

// Exhaustive search: for each side p <= p_max and a <= ratio*p, decompose
// (2pa)^2 into two squares and read off b^2, d^2; keep pairs where both are
// perfect squares. The derived c^2 = b^2 + d^2 - a^2 is a perfect square for
// exact hits, otherwise the record is a near miss.
inline SquareScanResult scan_squares(std::uint64_t p_max, const Rational& ratio = Rational(3),
                                     unsigned jobs = 1) {
    if (p_max < 1) throw std::domain_error("scan_squares: p_max >= 1");
    if (p_max > 20000) throw std::domain_error("scan_squares: p_max too large for fixed-width path");
    if (ratio <= 0) throw std::domain_error("scan_squares: ratio > 0");
    auto t0 = std::chrono::steady_clock::now();
    unsigned n_jobs = jobs == 0 ? 1 : jobs;

    struct Part {
        std::uint64_t enumerated = 0;
        // (p, a, b, d) with c^2 derived
        std::vector<std::array<std::uint64_t, 4>> found;
    };
    std::vector<Part> parts(n_jobs);

    auto worker = [&](unsigned j) {
        Part& part = parts[j];
        for (std::uint64_t p = 1 + j; p <= p_max; p += n_jobs) {
            Integer amax_big = (numerator(ratio) * p) / denominator(ratio);
            std::uint64_t amax = amax_big.convert_to<std::uint64_t>();
            for (std::uint64_t a = 1; a <= amax; ++a) {
                std::uint64_t t = p * p + a * a;
                std::uint64_t n = 4 * p * p * a * a;  // (2pa)^2
                std::uint64_t ulim = isqrt_u64(n);
                for (std::uint64_t u = 0; u <= ulim; ++u) {
                    ++part.enumerated;
                    std::uint64_t v2 = n - u * u;
                    auto v = as_perfect_square_u64(v2);
                    if (!v) continue;
                    for (int su = 0; su < 2; ++su) {
                        if (su == 1 && u == 0) break;
                        std::uint64_t bb = su ? t + u : t - u;
                        auto b = as_perfect_square_u64(bb);
                        if (!b || *b == 0) continue;
                        for (int sv = 0; sv < 2; ++sv) {
                            if (sv == 1 && *v == 0) break;
                            std::uint64_t dd = sv ? t + *v : t - *v;
                            auto d = as_perfect_square_u64(dd);
                            if (!d || *d == 0) continue;
                            part.found.push_back({p, a, *b, *d});
                        }
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

    SquareScanResult res;
    res.p_max = p_max;
    res.ratio = ratio;
    std::set<std::tuple<Integer, Integer, Integer, Integer>> seen;
    std::vector<std::array<std::uint64_t, 4>> all;
    for (auto& part : parts) {
        res.enumerated += part.enumerated;
        all.insert(all.end(), part.found.begin(), part.found.end());
    }
    std::sort(all.begin(), all.end());
    for (auto& [up, ua, ub, ud] : all) {
        Integer p = up, a = ua, b = ub, d = ud;
        Integer cc = b * b + d * d - a * a;  // forced by the flag identity
        auto c = as_perfect_square(cc);
        Integer ca = a, cb = b, cd = d;
        if (c) {
            auto canon = detail::canonical_exact({a, b, *c, d});
            ca = canon[0];
            cb = canon[1];
            cd = canon[3];
        } else {
            std::tie(ca, cb, cd) = detail::canonical_near_miss(a, b, d);
        }
        if (!seen.insert({p, ca, cb, cd}).second) continue;
        auto [x, y] = point_from_distances(p, ca, cb, cd);
        res.hits.push_back({p, ca, cb, cd, cb * cb + cd * cd - ca * ca, c.has_value(),
                            detail::square_collinear(p, x, y), x, y});
    }
    std::sort(res.hits.begin(), res.hits.end(), [](const SquareHit& l, const SquareHit& r) {
        return std::tie(l.p, l.a, l.b, l.d) < std::tie(r.p, r.a, r.b, r.d);
    });
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// The three vertex/point angle impossibilities all reduce to an equation of
// the shape X^2 = 3 Y^2, solvable in integers only with Y = 0. Each
// predicate returns true when the input is excluded (no equality holds).

inline bool exclusion_angle_pi3(const Integer& c, const Integer& d, const Integer& b) {
    if (c < 1 || d < 1 || b < 1) throw std::domain_error("exclusion_angle_pi3: positive inputs");
    Integer lhs = 2 * c * c + d * d - c * d - b * b;
    return lhs * lhs != 3 * c * c * d * d;
}

inline bool exclusion_angle_2pi3(const Integer& c, const Integer& d, const Integer& b) {
    if (c < 1 || d < 1 || b < 1) throw std::domain_error("exclusion_angle_2pi3: positive inputs");
    Integer lhs = 2 * c * c + d * d + c * d - b * b;
    return lhs * lhs != 3 * c * c * d * d;
}

// Point on a line through a vertex at pi/3 or 2pi/3 to the sides: both cases
// reduce to (p^2 + d^2 - c^2)^2 = 3 (pd)^2.
inline bool vertex_line_exclusion(const Integer& p, const Integer& d, const Integer& c,
                                  AngleTag angle) {
    if (angle != AngleTag::PiOver3 && angle != AngleTag::TwoPiOver3)
        throw std::invalid_argument("vertex_line_exclusion: angle must be pi/3 or 2pi/3");
    if (p < 1 || d < 1 || c < 1) throw std::domain_error("vertex_line_exclusion: positive inputs");
    Integer lhs = p * p + d * d - c * c;
    return lhs * lhs != 3 * p * p * d * d;
}

// Fast full sweeps over 1..limit per variable; returns the number of inputs
// that defeat the predicate (expected 0) and counts every triple examined.
struct ExclusionSweep {
    std::uint64_t enumerated = 0;
    std::uint64_t violations = 0;
};

template <class F>
inline ExclusionSweep exclusion_sweep(std::uint64_t limit, F quad) {
    ExclusionSweep s;
    for (std::uint64_t c = 1; c <= limit; ++c)
        for (std::uint64_t d = 1; d <= limit; ++d) {
            long long base = quad(static_cast<long long>(c), static_cast<long long>(d));
            long long rhs3 = 3ll * static_cast<long long>(c * c * d * d);
            for (std::uint64_t b = 1; b <= limit; ++b) {
                long long lhs = base - static_cast<long long>(b * b);
                s.enumerated++;
                if (lhs * lhs == rhs3) s.violations++;
            }
        }
    return s;
}

inline ExclusionSweep exclusion_angle_pi3_sweep(std::uint64_t limit) {
    return exclusion_sweep(limit, [](long long c, long long d) { return 2 * c * c + d * d - c * d; });
}
inline ExclusionSweep exclusion_angle_2pi3_sweep(std::uint64_t limit) {
    return exclusion_sweep(limit, [](long long c, long long d) { return 2 * c * c + d * d + c * d; });
}
inline ExclusionSweep vertex_line_exclusion_sweep(std::uint64_t limit) {
    return exclusion_sweep(limit, [](long long p, long long d) { return p * p + d * d; });
}

// Bounded certification that no full configuration has the C-D angle at M
// equal to pi/2: c^2 + d^2 = p^2 plus the induced square conditions on a and
// b, cross-checked against all four residuals. The induced subsystems alone
// do have solutions; exclusion is a whole-system property.
inline FormScanCertificate exclusion_angle_pi2(std::uint64_t p_max) {
    if (p_max < 1) throw std::domain_error("exclusion_angle_pi2: p_max >= 1");
    auto t0 = std::chrono::steady_clock::now();
    FormScanCertificate cert;
    cert.equation = FormEquation::Pi2Exclusion;
    cert.bound = p_max;
    for (std::uint64_t c = 1; c <= p_max; ++c) {
        for (std::uint64_t d = 1; d <= p_max; ++d) {
            auto p = as_perfect_square_u64(c * c + d * d);
            if (!p || *p > p_max) continue;
            for (int sign = 0; sign < 2; ++sign) {
                std::uint64_t s = sign ? c + d : (c > d ? c - d : d - c);
                ++cert.enumerated;
                auto a = as_perfect_square_u64(s * s + d * d);
                if (!a || *a == 0) continue;
                auto b = as_perfect_square_u64(s * s + c * c);
                if (!b || *b == 0) continue;
                auto res = config_residuals(Integer(*p), Integer(*a), Integer(*b), Integer(c),
                                            Integer(d));
                if (res[0] == 0 && res[1] == 0 && res[2] == 0 && res[3] == 0)
                    cert.hits.push_back({{"p", Integer(*p)},
                                         {"a", Integer(*a)},
                                         {"b", Integer(*b)},
                                         {"c", Integer(c)},
                                         {"d", Integer(d)}});
            }
        }
    }
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

struct AngleEntry {
    const char* name;
    Rational cosine;
    AngleClass cls;
};

using AngleReport = std::array<AngleEntry, 12>;

// Classifies the four angles at M and the eight base angles of the four
// triangles M forms with adjacent vertex pairs.
inline AngleReport angle_scan(const SquareConfig& cfg) {
    if (cfg.p < 1 || cfg.a < 1 || cfg.b < 1 || cfg.c < 1 || cfg.d < 1)
        throw std::domain_error("angle_scan: positive side and distances required");
    if (british_flag_defect(cfg.a, cfg.b, cfg.c, cfg.d) != 0)
        throw std::domain_error("angle_scan: distances violate the flag identity");
    auto entry = [](const char* name, const Integer& u, const Integer& v,
                    const Integer& w) -> AngleEntry {
        Rational cosv = cos_from_sides(u, v, w);
        return {name, cosv, classify_cos(cosv)};
    };
    const Integer &p = cfg.p, &a = cfg.a, &b = cfg.b, &c = cfg.c, &d = cfg.d;
    return {
        entry("AMB", a, b, p), entry("BMC", b, c, p), entry("CMD", c, d, p),
        entry("AMD", a, d, p), entry("MAB", a, p, b), entry("MBA", b, p, a),
        entry("MBC", b, p, c), entry("MCB", c, p, b), entry("MCD", c, p, d),
        entry("MDC", d, p, c), entry("MDA", d, p, a), entry("MAD", a, p, d),
    };
}

}  // namespace diogeo
