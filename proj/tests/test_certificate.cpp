#include "diogeo/certificate.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

using namespace diogeo;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/diogeo_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("certificate round trip verifies") {
    TempFile f("roundtrip.json");
    auto cert = make_certificate(scan_squares(5));
    write_certificate(cert, f.path);
    CHECK(verify_certificate_file(f.path) == CertVerifyResult::Ok);
    CHECK(verify_certificate_file(f.path, true) == CertVerifyResult::Ok);
}

TEST_CASE("identical scans reproduce the digest") {
    auto a = make_certificate(scan_squares(10, Rational(3), 1));
    auto b = make_certificate(scan_squares(10, Rational(3), 3));
    CHECK(a.content_digest == b.content_digest);

    auto t1 = make_certificate(scan_triangles(10, Rational(3), 1));
    auto t2 = make_certificate(scan_triangles(10, Rational(3), 2));
    CHECK(t1.content_digest == t2.content_digest);

    auto f1 = make_certificate(scan_concordant_pair(200, 1));
    auto f2 = make_certificate(scan_concordant_pair(200, 4));
    CHECK(f1.content_digest == f2.content_digest);
}

TEST_CASE("tampered counters break the digest") {
    TempFile f("tampered.json");
    auto cert = make_certificate(scan_squares(5));
    cert.enumerated += 1;  // stale digest
    write_certificate(cert, f.path);
    CHECK(verify_certificate_file(f.path) == CertVerifyResult::DigestMismatch);
}

TEST_CASE("corrupted hit fails re-validation") {
    TempFile f("corrupt.json");
    auto cert = make_certificate(scan_squares(5));
    REQUIRE(!cert.hits.empty());
    cert.hits[0]["b"] = "2";  // hand-corrupt one residual input
    cert.content_digest = digest_of(cert);  // keep the digest consistent
    write_certificate(cert, f.path);
    CHECK(verify_certificate_file(f.path) == CertVerifyResult::Ok);
    CHECK(verify_certificate_file(f.path, true) == CertVerifyResult::HitInvalid);
}

TEST_CASE("parse failures are distinct from digest mismatches") {
    TempFile f("garbage.json");
    {
        std::ofstream out(f.path);
        out << "this is not json";
    }
    CHECK(verify_certificate_file(f.path) == CertVerifyResult::ParseError);
    CHECK(verify_certificate_file("/nonexistent/path.json") == CertVerifyResult::ParseError);
}

TEST_CASE("form and pi2 certificates verify with recheck") {
    TempFile f("forms.json");
    write_certificate(make_certificate(scan_quartic_norm(50)), f.path);
    CHECK(verify_certificate_file(f.path, true) == CertVerifyResult::Ok);

    TempFile g("pi2.json");
    write_certificate(make_certificate(exclusion_angle_pi2(30)), g.path);
    CHECK(verify_certificate_file(g.path, true) == CertVerifyResult::Ok);
}
