#pragma once

// Scan certificates: machine-readable, digest-stamped records of bounded
// exhaustive searches. Big integers serialize as decimal strings, rationals
// as "num/den"; the digest covers bounds, counters and hits (not
// timestamps), so re-running the same scan reproduces it bit for bit.

#include "diogeo/exact.hpp"
#include "diogeo/forms.hpp"
#include "diogeo/square.hpp"
#include "diogeo/triangle.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace diogeo {

using json = nlohmann::json;

inline json to_json_value(const Integer& v) { return v.str(); }
inline json to_json_value(const Rational& v) { return to_string(v); }

inline json to_json(const SquareHit& h) {
    return {{"p", h.p.str()},         {"a", h.a.str()},
            {"b", h.b.str()},         {"d", h.d.str()},
            {"c_squared", h.c_squared.str()}, {"exact", h.exact},
            {"collinear", h.collinear}, {"x", to_string(h.x)}, {"y", to_string(h.y)}};
}

inline json to_json(const TriangleHit& h) {
    return {{"a", h.a.str()},         {"p", h.p.str()},      {"q", h.q.str()},
            {"k", h.k.str()},         {"defect", to_string(h.defect)},
            {"collinear", h.collinear}, {"inside", h.inside}};
}

inline json to_json(const FormHit& h) {
    json j = json::object();
    for (auto& [key, value] : h) j[key] = value.str();
    return j;
}

inline json to_json(const EisensteinTriple& t) {
    return {{"x", t.x.str()}, {"y", t.y.str()}, {"z", t.z.str()}, {"primitive", t.primitive}};
}

struct ScanCertificate {
    int schema_version = 1;
    std::string kind;  // SquareScan, TriangleScan, ConcordantPair, QuarticNorm,
                       // InnerQuartic, AngleSweep, Pi2Exclusion
    std::map<std::string, Integer> bounds;
    std::uint64_t enumerated = 0;
    std::uint64_t exact_hits = 0;
    std::uint64_t near_misses = 0;
    json hits = json::array();
    std::string started_at;
    double elapsed_seconds = 0;
    std::string content_digest;
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
    return out;
}

}  // namespace detail

// Digest over the canonical serialization of everything except timestamps.
inline std::string digest_of(const ScanCertificate& cert) {
    json body = json::object();
    body["kind"] = cert.kind;
    json bounds = json::object();
    for (auto& [key, value] : cert.bounds) bounds[key] = value.str();
    body["bounds"] = bounds;
    body["counters"] = {{"enumerated", cert.enumerated},
                        {"exact_hits", cert.exact_hits},
                        {"near_misses", cert.near_misses}};
    body["hits"] = cert.hits;
    return detail::hex64(detail::fnv1a64(body.dump()));
}

inline std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

inline ScanCertificate make_certificate(const SquareScanResult& r) {
    ScanCertificate cert;
    cert.kind = "SquareScan";
    cert.bounds["p_max"] = r.p_max;
    cert.bounds["ratio_num"] = numerator(r.ratio);
    cert.bounds["ratio_den"] = denominator(r.ratio);
    cert.enumerated = r.enumerated;
    cert.exact_hits = r.exact_count();
    cert.near_misses = r.near_miss_count();
    for (auto& h : r.hits) cert.hits.push_back(to_json(h));
    cert.started_at = now_iso8601();
    cert.elapsed_seconds = r.elapsed_seconds;
    cert.content_digest = digest_of(cert);
    return cert;
}

inline ScanCertificate make_certificate(const TriangleScanResult& r) {
    ScanCertificate cert;
    cert.kind = "TriangleScan";
    cert.bounds["a_max"] = r.a_max;
    cert.bounds["ratio_num"] = numerator(r.ratio);
    cert.bounds["ratio_den"] = denominator(r.ratio);
    cert.enumerated = r.enumerated;
    cert.exact_hits = r.hits.size();
    for (auto& h : r.hits) cert.hits.push_back(to_json(h));
    cert.started_at = now_iso8601();
    cert.elapsed_seconds = r.elapsed_seconds;
    cert.content_digest = digest_of(cert);
    return cert;
}

inline ScanCertificate make_certificate(const FormScanCertificate& r) {
    ScanCertificate cert;
    cert.kind = to_string(r.equation);
    cert.bounds["bound"] = r.bound;
    cert.enumerated = r.enumerated;
    cert.exact_hits = r.hits.size();
    for (auto& h : r.hits) cert.hits.push_back(to_json(h));
    cert.started_at = now_iso8601();
    cert.elapsed_seconds = r.elapsed_seconds;
    cert.content_digest = digest_of(cert);
    return cert;
}

inline json to_json(const ScanCertificate& cert) {
    json bounds = json::object();
    for (auto& [key, value] : cert.bounds) bounds[key] = value.str();
    return {{"schema_version", cert.schema_version},
            {"kind", cert.kind},
            {"bounds", bounds},
            {"counters",
             {{"enumerated", cert.enumerated},
              {"exact_hits", cert.exact_hits},
              {"near_misses", cert.near_misses}}},
            {"hits", cert.hits},
            {"started_at", cert.started_at},
            {"elapsed_seconds", cert.elapsed_seconds},
            {"content_digest", cert.content_digest}};
}

inline void write_certificate(const ScanCertificate& cert, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open certificate file: " + path);
    out << to_json(cert).dump(2) << "\n";
}

enum class CertVerifyResult { Ok, ParseError, DigestMismatch, HitInvalid };

inline const char* to_string(CertVerifyResult r) {
    switch (r) {
        case CertVerifyResult::Ok: return "ok";
        case CertVerifyResult::ParseError: return "parse error";
        case CertVerifyResult::DigestMismatch: return "digest mismatch";
        case CertVerifyResult::HitInvalid: return "hit failed re-validation";
    }
    return "?";
}

namespace detail {

// Re-validates each hit through the engine it came from.
inline bool recheck_hits(const ScanCertificate& cert) {
    try {
        for (auto& h : cert.hits) {
            if (cert.kind == "SquareScan") {
                Integer p(h.at("p").get<std::string>()), a(h.at("a").get<std::string>()),
                    b(h.at("b").get<std::string>()), d(h.at("d").get<std::string>()),
                    cc(h.at("c_squared").get<std::string>());
                auto res = config_residuals(p, a, b, isqrt(cc), d);
                if (res[0] != 0) return false;  // first equation is c-free
                if (cc != b * b + d * d - a * a) return false;
                if (h.at("exact").get<bool>() != as_perfect_square(cc).has_value()) return false;
            } else if (cert.kind == "TriangleScan") {
                Integer a(h.at("a").get<std::string>()), p(h.at("p").get<std::string>()),
                    q(h.at("q").get<std::string>()), k(h.at("k").get<std::string>());
                if (quartic_residual(a, p, q, k) != 0) return false;
            } else if (cert.kind == "ConcordantPair") {
                Integer a(h.at("a").get<std::string>()), b(h.at("b").get<std::string>());
                if (!as_perfect_square(a * a + a * b + b * b)) return false;
                if (!as_perfect_square(a * a - a * b + b * b)) return false;
            } else if (cert.kind == "QuarticNorm" || cert.kind == "InnerQuartic") {
                std::string ka = cert.kind == "QuarticNorm" ? "a" : "q";
                std::string kb = cert.kind == "QuarticNorm" ? "b" : "p1";
                Integer a(h.at(ka).get<std::string>()), b(h.at(kb).get<std::string>());
                Integer a2 = a * a, b2 = b * b;
                if (!as_perfect_square(a2 * a2 + a2 * b2 + b2 * b2)) return false;
            } else if (cert.kind == "Pi2Exclusion") {
                Integer p(h.at("p").get<std::string>()), a(h.at("a").get<std::string>()),
                    b(h.at("b").get<std::string>()), c(h.at("c").get<std::string>()),
                    d(h.at("d").get<std::string>());
                auto res = config_residuals(p, a, b, c, d);
                if (res[0] != 0 || res[1] != 0 || res[2] != 0 || res[3] != 0) return false;
            }
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace detail

inline CertVerifyResult verify_certificate_file(const std::string& path,
                                                bool recheck_hits = false) {
    ScanCertificate cert;
    try {
        std::ifstream in(path);
        if (!in) return CertVerifyResult::ParseError;
        json j = json::parse(in);
        cert.schema_version = j.at("schema_version").get<int>();
        cert.kind = j.at("kind").get<std::string>();
        for (auto& [key, value] : j.at("bounds").items())
            cert.bounds[key] = Integer(value.get<std::string>());
        cert.enumerated = j.at("counters").at("enumerated").get<std::uint64_t>();
        cert.exact_hits = j.at("counters").at("exact_hits").get<std::uint64_t>();
        cert.near_misses = j.at("counters").at("near_misses").get<std::uint64_t>();
        cert.hits = j.at("hits");
        cert.content_digest = j.at("content_digest").get<std::string>();
    } catch (const std::exception&) {
        return CertVerifyResult::ParseError;
    }
    if (digest_of(cert) != cert.content_digest) return CertVerifyResult::DigestMismatch;
    if (recheck_hits && !detail::recheck_hits(cert)) return CertVerifyResult::HitInvalid;
    return CertVerifyResult::Ok;
}

}  // namespace diogeo
