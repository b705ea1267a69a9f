// Command-line front end: every scan, generator and classifier in the
// library behind one subcommand each. Stdout carries machine-readable JSONL
// only; progress and summaries go to stderr. Exit codes: 0 ok, 2 usage or
// bad input, 3 internal consistency failure.

#include "diogeo/certificate.hpp"
#include "diogeo/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <random>

namespace {

using namespace diogeo;

struct OutStream {
    std::ostream* os = &std::cout;
    std::ofstream file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& get() { return *os; }
};

void maybe_write_cert(const ScanCertificate& cert, const std::string& path) {
    if (!path.empty()) write_certificate(cert, path);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic search and certification for integer-distance "
                 "square and equilateral-triangle point problems"};
    app.require_subcommand(1);

    std::string ratio_str = "3";
    std::string out_path, cert_path;
    unsigned jobs = 1;
    std::uint64_t seed = 0;

    // scan-square
    auto* sq = app.add_subcommand("scan-square", "exhaustive square scan");
    std::uint64_t p_max = 0;
    sq->add_option("--p-max", p_max, "largest side length")->required();
    sq->add_option("--ratio", ratio_str, "distance bound as a multiple of the side");
    sq->add_option("--jobs", jobs, "worker count");
    sq->add_option("--out", out_path, "JSONL output file (default stdout)");
    sq->add_option("--cert", cert_path, "certificate file");

    // scan-triangle
    auto* tr = app.add_subcommand("scan-triangle", "exhaustive equilateral-triangle scan");
    std::uint64_t a_max = 0;
    tr->add_option("--a-max", a_max, "largest side length")->required();
    tr->add_option("--ratio", ratio_str, "distance bound as a multiple of the side");
    tr->add_option("--jobs", jobs, "worker count");
    tr->add_option("--out", out_path, "JSONL output file (default stdout)");
    tr->add_option("--cert", cert_path, "certificate file");

    // gen-family
    auto* fam = app.add_subcommand("gen-family", "collinear triangle solution family member");
    std::int64_t fl = 1, fm = 2, fn = 1;
    fam->add_option("--l", fl, "scale")->required();
    fam->add_option("--m", fm, "first parameter")->required();
    fam->add_option("--n", fn, "second parameter")->required();
    fam->add_option("--out", out_path, "JSONL output file (default stdout)");

    // gen-eisenstein
    auto* eis = app.add_subcommand("gen-eisenstein",
                                   "x^2+xy+y^2=z^2 triples from parameters or up to a bound");
    std::int64_t ex = 0, ey = 0, escale = 1;
    std::uint64_t ezmax = 0;
    eis->add_option("--x", ex, "first parameter");
    eis->add_option("--y", ey, "second parameter");
    eis->add_option("--scale", escale, "homogeneous scale");
    eis->add_option("--z-max", ezmax, "enumerate all primitive triples with z <= bound");
    eis->add_option("--out", out_path, "JSONL output file (default stdout)");

    // classify-cos
    auto* cls = app.add_subcommand("classify-cos", "classify a rational cosine");
    std::string cos_str;
    cls->add_option("value", cos_str, "rational cosine, e.g. 1/2")->required();

    // angle-sweep
    auto* sweep = app.add_subcommand("angle-sweep",
                                     "rational cosines among all angles m*pi/n, n <= n-max");
    std::uint64_t n_sweep = 120;
    sweep->add_option("--n-max", n_sweep, "largest denominator");
    sweep->add_option("--out", out_path, "JSONL output file (default stdout)");
    sweep->add_option("--cert", cert_path, "certificate file");

    // scan-forms
    auto* forms = app.add_subcommand("scan-forms", "bounded no-solution form scans");
    int equation = 23;
    std::uint64_t bound = 0;
    forms->add_option("--equation", equation, "23 (concordant pair), 25 (quartic norm) or 30 (inner quartic)")
        ->check(CLI::IsMember({23, 25, 30}));
    forms->add_option("--bound", bound, "enumeration bound")->required();
    forms->add_option("--jobs", jobs, "worker count");
    forms->add_option("--out", out_path, "JSONL output file (default stdout)");
    forms->add_option("--cert", cert_path, "certificate file");

    // exclusions
    auto* excl = app.add_subcommand("exclusions", "angle-exclusion predicate sweeps");
    std::uint64_t limit = 500, pi2_pmax = 100, n_random = 0;
    excl->add_option("--limit", limit, "per-variable sweep bound");
    excl->add_option("--p-max", pi2_pmax, "side bound for the right-angle certification");
    excl->add_option("--random", n_random, "additional random triples per predicate");
    excl->add_option("--seed", seed, "seed for the random triples");
    excl->add_option("--out", out_path, "JSONL output file (default stdout)");
    excl->add_option("--cert", cert_path, "certificate file for the right-angle certification");

    // verify-cert
    auto* verify = app.add_subcommand("verify-cert", "verify a scan certificate");
    std::string cert_file;
    bool recheck = false;
    verify->add_option("path", cert_file, "certificate file")->required();
    verify->add_flag("--recheck", recheck, "re-validate each hit through the engines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutStream out;
    out.open(out_path);

    if (*sq) {
        auto res = scan_squares(p_max, parse_rational(ratio_str), jobs);
        for (auto& h : res.hits) out.get() << to_json(h).dump() << "\n";
        std::cerr << "scan-square: enumerated " << res.enumerated << ", exact "
                  << res.exact_count() << ", near misses " << res.near_miss_count() << " ("
                  << res.elapsed_seconds << " s)\n";
        maybe_write_cert(make_certificate(res), cert_path);
    } else if (*tr) {
        auto res = scan_triangles(a_max, parse_rational(ratio_str), jobs);
        for (auto& h : res.hits) out.get() << to_json(h).dump() << "\n";
        std::cerr << "scan-triangle: enumerated " << res.enumerated << ", hits "
                  << res.hits.size() << " (" << res.elapsed_seconds << " s)\n";
        maybe_write_cert(make_certificate(res), cert_path);
    } else if (*fam) {
        auto cfg = gen_circumcircle_family({Integer(fl), Integer(fm), Integer(fn)});
        out.get() << json{{"a", cfg.a.str()},
                          {"p", cfg.p.str()},
                          {"q", cfg.q.str()},
                          {"k", cfg.k.str()}}
                         .dump()
                  << "\n";
    } else if (*eis) {
        if (ezmax > 0) {
            for (auto& t : enumerate_primitive_eisenstein(Integer(ezmax)))
                out.get() << to_json(t).dump() << "\n";
        } else {
            if (ex == 0 || ey == 0)
                throw CLI::ValidationError("gen-eisenstein", "provide --x and --y, or --z-max");
            out.get() << to_json(gen_eisenstein(Integer(ex), Integer(ey), Integer(escale))).dump()
                      << "\n";
        }
    } else if (*cls) {
        auto r = classify_cos(parse_rational(cos_str));
        std::cout << to_string(r.tag) << "\n";
    } else if (*sweep) {
        auto res = angle_sweep(n_sweep);
        ScanCertificate cert;
        cert.kind = "AngleSweep";
        cert.bounds["n_max"] = Integer(res.n_max);
        cert.enumerated = res.examined;
        cert.exact_hits = res.rational_hits.size();
        for (auto& e : res.rational_hits) {
            json rec = {{"m", e.m},
                        {"n", e.n},
                        {"cos", to_string(e.cosine)},
                        {"tag", to_string(e.tag)}};
            out.get() << rec.dump() << "\n";
            cert.hits.push_back(rec);
        }
        cert.started_at = now_iso8601();
        cert.content_digest = digest_of(cert);
        std::cerr << "angle-sweep: " << res.examined << " angles, "
                  << res.rational_hits.size() << " rational cosines, "
                  << (res.only_admissible ? "all admissible" : "UNEXPECTED VALUE FOUND") << "\n";
        maybe_write_cert(cert, cert_path);
        if (!res.only_admissible) return 3;
    } else if (*forms) {
        FormScanCertificate res;
        if (equation == 23)
            res = scan_concordant_pair(bound, jobs);
        else if (equation == 25)
            res = scan_quartic_norm(bound, jobs);
        else
            res = scan_inner_quartic(bound, jobs);
        for (auto& h : res.hits) out.get() << to_json(h).dump() << "\n";
        std::cerr << "scan-forms(" << equation << "): enumerated " << res.enumerated
                  << ", hits " << res.hits.size() << " (" << res.elapsed_seconds << " s)\n";
        maybe_write_cert(make_certificate(res), cert_path);
    } else if (*excl) {
        auto report = [&](const char* name, const ExclusionSweep& s) {
            out.get() << json{{"sweep", name},
                              {"limit", limit},
                              {"enumerated", s.enumerated},
                              {"violations", s.violations}}
                             .dump()
                      << "\n";
        };
        report("angle_pi3", exclusion_angle_pi3_sweep(limit));
        report("angle_2pi3", exclusion_angle_2pi3_sweep(limit));
        report("vertex_line", vertex_line_exclusion_sweep(limit));
        if (n_random > 0) {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::int64_t> dist(1, 1000000);
            std::uint64_t bad = 0;
            for (std::uint64_t i = 0; i < n_random; ++i) {
                Integer c = dist(rng), d = dist(rng), b = dist(rng);
                if (!exclusion_angle_pi3(c, d, b) || !exclusion_angle_2pi3(c, d, b) ||
                    !vertex_line_exclusion(c, d, b, AngleTag::PiOver3))
                    ++bad;
            }
            out.get() << json{{"sweep", "random"}, {"count", n_random}, {"violations", bad}}.dump()
                      << "\n";
        }
        auto pi2 = exclusion_angle_pi2(pi2_pmax);
        out.get() << json{{"sweep", "angle_pi2"},
                          {"p_max", pi2_pmax},
                          {"enumerated", pi2.enumerated},
                          {"configurations", pi2.hits.size()}}
                         .dump()
                  << "\n";
        maybe_write_cert(make_certificate(pi2), cert_path);
    } else if (*verify) {
        auto res = verify_certificate_file(cert_file, recheck);
        std::cerr << "verify-cert: " << to_string(res) << "\n";
        if (res == CertVerifyResult::ParseError) return 2;
        if (res != CertVerifyResult::Ok) return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const diogeo::ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
