#pragma once

// Quadratic-form machinery: the x^2 + xy + y^2 = z^2 parametrization,
// primitive Pythagorean parameters, and bounded no-solution scans for the
// concordant pair system and the quartic norm equation.

#include "diogeo/exact.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace diogeo {

struct EisensteinTriple {
    Integer x, y, z;  // x^2 + xy + y^2 = z^2
    bool primitive;

    bool operator==(const EisensteinTriple& o) const {
        return x == o.x && y == o.y && z == o.z;
    }
};

enum class FormEquation { ConcordantPair, QuarticNorm, InnerQuartic, Pi2Exclusion };

inline const char* to_string(FormEquation e) {
    switch (e) {
        case FormEquation::ConcordantPair: return "ConcordantPair";
        case FormEquation::QuarticNorm: return "QuarticNorm";
        case FormEquation::InnerQuartic: return "InnerQuartic";
        case FormEquation::Pi2Exclusion: return "Pi2Exclusion";
    }
    return "?";
}

// Named values of one reported solution; empty hit list certifies the
// no-solution claim up to the bound.
using FormHit = std::map<std::string, Integer>;

struct FormScanCertificate {
    FormEquation equation;
    Integer bound;
    std::uint64_t enumerated = 0;  // candidate pairs examined
    std::vector<FormHit> hits;
    double elapsed_seconds = 0;

    bool certified_empty() const { return hits.empty(); }
};

// (x, y) with 0 < x < y generate the triple
// (y^2 - x^2, x^2 + 2xy, x^2 + xy + y^2), scaled.
inline EisensteinTriple gen_eisenstein(const Integer& x, const Integer& y,
                                       const Integer& scale = 1) {
    if (x <= 0 || x >= y) throw std::domain_error("gen_eisenstein: requires 0 < x < y");
    if (scale < 1) throw std::domain_error("gen_eisenstein: scale >= 1");
    Integer X = scale * (y * y - x * x);
    Integer Y = scale * (x * x + 2 * x * y);
    Integer Z = scale * (x * x + x * y + y * y);
    return {X, Y, Z, scale == 1 && gcd(X, Y) == 1};
}

// All primitive triples with z <= z_max, canonical x <= y, sorted by (z, x),
// each exactly once. Uses the parametrization; the brute-force route lives
// in the tests as the independent oracle.
inline std::vector<EisensteinTriple> enumerate_primitive_eisenstein(const Integer& z_max) {
    if (z_max < 1) throw std::domain_error("enumerate_primitive_eisenstein: z_max >= 1");
    std::vector<EisensteinTriple> out;
    for (Integer x = 1;; ++x) {
        // z >= x^2 + x(x+1) + (x+1)^2 once y > x
        if (x * x + x * (x + 1) + (x + 1) * (x + 1) > z_max) break;
        for (Integer y = x + 1;; ++y) {
            Integer z = x * x + x * y + y * y;
            if (z > z_max) break;
            if (gcd(x, y) != 1) continue;
            auto t = gen_eisenstein(x, y);
            if (!t.primitive) continue;
            if (t.x > t.y) std::swap(t.x, t.y);
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return std::tie(l.z, l.x) < std::tie(r.z, r.x);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Primitive Pythagorean triple (m^2 - n^2, 2mn, m^2 + n^2) from
// m > n >= 1, (m, n) = 1, mn even.
inline std::array<Integer, 3> gen_pythagorean(const Integer& m, const Integer& n) {
    if (n < 1 || m <= n) throw std::domain_error("gen_pythagorean: requires m > n >= 1");
    if (gcd(m, n) != 1) throw std::domain_error("gen_pythagorean: m, n must be coprime");
    if (((m * n) & 1) == 1) throw std::domain_error("gen_pythagorean: mn must be even");
    return {m * m - n * n, 2 * m * n, m * m + n * n};
}

namespace detail {

// Shared driver: enumerates coprime pairs 1 <= a <= b <= bound in parallel
// blocks of the outer variable, keeps pairs flagged by `test`, merges
// deterministically (blocks are already in increasing b order).
template <class Test>
FormScanCertificate coprime_pair_scan(FormEquation eq, std::uint64_t bound, unsigned jobs,
                                      Test test) {
    auto t0 = std::chrono::steady_clock::now();
    FormScanCertificate cert;
    cert.equation = eq;
    cert.bound = bound;
    if (jobs == 0) jobs = 1;

    struct Part {
        std::uint64_t enumerated = 0;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> hits;
    };
    std::vector<Part> parts(jobs);
    auto worker = [&](unsigned j) {
        std::uint64_t lo = 1 + (bound * j) / jobs;
        std::uint64_t hi = (bound * (j + 1)) / jobs;  // inclusive
        Part& part = parts[j];
        for (std::uint64_t b = lo; b <= hi; ++b) {
            for (std::uint64_t a = 1; a <= b; ++a) {
                if (std::gcd(a, b) != 1) continue;
                ++part.enumerated;
                if (test(a, b)) part.hits.emplace_back(a, b);
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
        for (auto& t : threads) t.join();
    }
    for (auto& part : parts) {
        cert.enumerated += part.enumerated;
        for (auto& [a, b] : part.hits)
            cert.hits.push_back({{"a", Integer(a)}, {"b", Integer(b)}});
    }
    cert.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

}  // namespace detail

// a^2 + ab + b^2 and a^2 - ab + b^2 simultaneously square, coprime a <= b.
// Zero hits certify the no-solution claim up to the bound.
inline FormScanCertificate scan_concordant_pair(std::uint64_t bound, unsigned jobs = 1) {
    if (bound < 1) throw std::domain_error("scan_concordant_pair: bound >= 1");
    if (bound <= 2000000000ull) {
        return detail::coprime_pair_scan(
            FormEquation::ConcordantPair, bound, jobs, [](std::uint64_t a, std::uint64_t b) {
                std::uint64_t s = a * a + b * b, p = a * b;
                return is_square_u64(s + p) && is_square_u64(s - p);
            });
    }
    return detail::coprime_pair_scan(
        FormEquation::ConcordantPair, bound, jobs, [](std::uint64_t ua, std::uint64_t ub) {
            Integer a = ua, b = ub;
            Integer s = a * a + b * b, p = a * b;
            return as_perfect_square(s + p).has_value() && as_perfect_square(s - p).has_value();
        });
}

// a^4 + a^2 b^2 + b^4 a perfect square, coprime a <= b.
inline FormScanCertificate scan_quartic_norm(std::uint64_t bound, unsigned jobs = 1) {
    if (bound < 1) throw std::domain_error("scan_quartic_norm: bound >= 1");
    if (bound <= 40000ull) {
        return detail::coprime_pair_scan(
            FormEquation::QuarticNorm, bound, jobs, [](std::uint64_t a, std::uint64_t b) {
                std::uint64_t a2 = a * a, b2 = b * b;
                return is_square_u64(a2 * a2 + a2 * b2 + b2 * b2);
            });
    }
    return detail::coprime_pair_scan(
        FormEquation::QuarticNorm, bound, jobs, [](std::uint64_t ua, std::uint64_t ub) {
            Integer a2 = Integer(ua) * ua, b2 = Integer(ub) * ub;
            return as_perfect_square(a2 * a2 + a2 * b2 + b2 * b2).has_value();
        });
}

// Same equation with the strict order p1 > q; hits carry keys p1 and q.
inline FormScanCertificate scan_inner_quartic(std::uint64_t bound, unsigned jobs = 1) {
    auto cert = scan_quartic_norm(bound, jobs);
    cert.equation = FormEquation::InnerQuartic;
    std::vector<FormHit> relabeled;
    for (auto& h : cert.hits) {
        // (a <= b) hit becomes (p1, q) = (b, a); equal pairs never occur
        // among coprime a <= b except (1, 1), where p1 > q fails.
        if (h.at("a") == h.at("b")) continue;
        relabeled.push_back({{"p1", h.at("b")}, {"q", h.at("a")}});
    }
    cert.hits = std::move(relabeled);
    return cert;
}

}  // namespace diogeo
