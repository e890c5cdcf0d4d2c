// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "opstar/cli.hpp"
#include "opstar/dnlab.hpp"
#include "opstar/embed.hpp"
#include "opstar/gallery/ainf.hpp"
#include "opstar/gallery/algebras.hpp"
#include "opstar/gallery/entire.hpp"
#include "opstar/gallery/legendre.hpp"
#include "opstar/gallery/torus.hpp"
#include "opstar/gallery/unit_chains.hpp"
#include "opstar/opalg.hpp"

using namespace opstar;
using Eigen::Index;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome ac1_normal_operator_constant() {
    const double bound = std::numbers::pi / std::sqrt(6.0) + 1e-9;
    ProbeRng rng(101);
    double worst = 0.0;
    std::size_t checked = 0;
    for (Index d : {16, 64, 256}) {
        for (int t = 0; t < 200; ++t) {
            Vector ev(d);
            for (Index j = 0; j < d; ++j) ev(j) = rng.complex_normal();
            const Matrix u = rng.unitary(d);
            const Matrix x = u * ev.asDiagonal() * u.adjoint();
            for (int m = 0; m <= 2; ++m) {
                worst = std::max(worst, opalg::r_norm(x, 0, m + 2) / opalg::bracket_norm(x, m));
                ++checked;
            }
        }
    }
    return {worst <= bound, fmt("max ratio %.12f <= %.12f over %zu (operator, m) pairs", worst, bound, checked)};
}

Outcome ac2_interpolation_on_s() {
    const dnlab::SSpace s;
    double worst = 0.0;
    bool certified = true;
    for (int q : {1, 2, 3}) {
        dnlab::DnProbe probe;
        probe.space = &s;
        probe.q = q;
        probe.r_list = {2 * q};
        probe.grid = {16, 64, 256, 1024};
        probe.seed = 202;
        const auto cert = dnlab::certify_dn(probe);
        certified = certified && cert.verdict == dnlab::Verdict::CertifiedBounded;
        for (const auto& pt : cert.curve(2 * q).points) worst = std::max(worst, std::abs(pt.constant - 1.0));
    }
    return {certified && worst <= 1e-10, fmt("max |C - 1| = %.3g, all certified: %s", worst, certified ? "yes" : "no")};
}

Outcome ac3_lambda_unit_chain() {
    ProbeRng rng(303);
    double worst = 0.0;
    double worst_lambda = 0.0;
    bool ok = true;
    int gamma = 0;
    for (Index d : {64, 256, 1024}) {
        const auto alpha = seqspace::WeightSequence::linear(d);
        const auto probes = gallery::lambda_unit_probes(alpha, d, 1000, rng);
        for (int s : {1, 2}) {
            const auto r = gallery::lambda_unit_dn(alpha, s, probes);
            gamma = r.gamma;
            ok = ok && r.gamma == 2 && r.max_ratio <= 16.0 && r.max_lambda_ratio <= 4.0 && r.passed();
            worst = std::max(worst, r.max_ratio);
            worst_lambda = std::max(worst_lambda, r.max_lambda_ratio);
        }
    }
    return {ok, fmt("gamma = %d, max final ratio %.6f <= 16, max |lambda|^2/R(gamma) %.6f <= 4", gamma, worst,
                    worst_lambda)};
}

Outcome ac4_ainf_falsification() {
    const auto t = gallery::ainf_counterexample(40, 3, 5, 1e3);
    double interval_err = 0.0;
    double disc_err = 0.0;
    for (const auto& row : t.rows) {
        interval_err = std::max(interval_err, std::abs(row.sup_interval - 1.0));
        const double two_n = std::ldexp(1.0, row.n);
        disc_err = std::max(disc_err, std::abs(row.sup_disc - two_n) / two_n);
    }
    const bool crossed = t.first_above && *t.first_above <= 30;
    const bool ok = interval_err <= 1e-10 && disc_err <= 1e-8 && t.bound_respected && crossed &&
                    std::abs(t.exponent - 1.0) <= 0.1;
    return {ok, fmt("interval err %.3g, disc rel err %.3g, bound %s, first n above 1e3: %d, exponent %.4f",
                    interval_err, disc_err, t.bound_respected ? "held" : "violated",
                    t.first_above ? *t.first_above : -1, t.exponent)};
}

Outcome ac5_embedding_pipeline() {
    ProbeRng rng(505);
    const std::vector<std::vector<int>> tori{{2, 2}, {2, 3}, {2, 4}, {3}, {5}, {7}, {8}, {2, 2, 2}};
    std::size_t runs = 0;
    std::size_t failed = 0;
    double phi_def = 0.0, proj_def = 0.0, mult_def = 0.0, inv_def = 0.0, alpha_def = 0.0;
    double margin = INFINITY;
    for (int t = 0; t < 50; ++t) {
        staralg::StarAlgebraSpec alg = [&] {
            const auto d = static_cast<Index>(1 + rng.below(8));
            switch (t % 3) {
                case 0: return gallery::diagonal_algebra(d);
                case 1: return gallery::cyclic_group_algebra(d);
                default: return gallery::torus_convolution_algebra(tori[rng.below(tori.size())]);
            }
        }();
        const auto g = staralg::generate_alpha_gram(alg, &rng);
        const double a = staralg::check_alpha(alg, g).value;
        alpha_def = std::max(alpha_def, a);
        const Index d = alg.dim();
        embed::PipelineOptions opt;
        opt.ambient = d + static_cast<Index>(rng.below(static_cast<std::uint64_t>(64 - d + 1)));
        opt.slots = embed::random_slots(d, opt.ambient, rng);
        opt.sampled_pairs = 16;
        opt.rng = &rng;
        const auto rep = embed::full_pipeline(alg, g, opt);
        ++runs;
        const bool ok = a <= 1e-10 && rep.phi_isometry_defect <= 1e-12 &&
                        rep.projector_idempotence_defect <= 1e-12 && rep.projector_hermitian_defect <= 1e-12 &&
                        rep.multiplicativity_defect <= 1e-10 && rep.involution_defect <= 1e-10 &&
                        rep.injectivity_margin > 0.0;
        if (!ok) ++failed;
        phi_def = std::max(phi_def, rep.phi_isometry_defect);
        proj_def = std::max({proj_def, rep.projector_idempotence_defect, rep.projector_hermitian_defect});
        mult_def = std::max(mult_def, rep.multiplicativity_defect);
        inv_def = std::max(inv_def, rep.involution_defect);
        margin = std::min(margin, rep.injectivity_margin);
    }
    return {failed == 0, fmt("%zu/%zu pipelines ok; alpha %.2g, phi*phi %.2g, projector %.2g, mult %.2g, inv %.2g, "
                             "min injectivity margin %.3g",
                             runs - failed, runs, alpha_def, phi_def, proj_def, mult_def, inv_def, margin)};
}

Outcome ac6_weyl_law() {
    bool ok = true;
    std::string detail;
    for (int n : {1, 2}) {
        const auto spec = gallery::torus_spectrum(n, 10000);
        const auto band = gallery::weyl_band(spec, 100, 10000);
        ok = ok && band.low > 0.0 && band.width_ratio() < 4.0;
        detail += fmt("n=%d band [%.6f, %.6f] ratio %.4f; ", n, band.low, band.high, band.width_ratio());
    }
    return {ok, detail};
}

Outcome ac7_legendre_nikolskii() {
    const double ortho = gallery::legendre_orthonormality_defect(30);
    ProbeRng rng(707);
    std::size_t violations = 0;
    for (int t = 0; t < 1000; ++t) {
        const int degree = static_cast<int>(rng.below(31));
        std::vector<double> c(static_cast<std::size_t>(degree) + 1);
        for (auto& v : c) v = rng.normal();
        const auto r = (t % 2 == 0) ? gallery::nikolskii_check_legendre(c) : gallery::nikolskii_check(c);
        if (!r.holds()) ++violations;
    }
    double worst_witness = 1.0;
    for (int n = 0; n <= 30; ++n) {
        const auto r = gallery::nikolskii_check_legendre(gallery::christoffel_darboux_witness(n));
        worst_witness = std::min(worst_witness, r.extremality());
    }
    const bool ok = ortho <= 1e-12 && violations == 0 && worst_witness >= 0.5;
    return {ok, fmt("orthonormality defect %.3g, %zu/1000 violations, min witness sup/bound %.6f", ortho,
                    violations, worst_witness)};
}

Outcome ac8_hadamard_taylor() {
    ProbeRng rng(808);
    double worst_h = INFINITY;
    double worst_t = INFINITY;
    bool resolved = true;
    for (int t = 0; t < 100; ++t) {
        const auto f = gallery::EntireFunctionSample::random(20, rng);
        for (double r : {1.2, 1.5, 2.0}) {
            const auto h = gallery::hadamard_check(f, r);
            worst_h = std::min(worst_h, h.relative_slack);
            resolved = resolved && h.resolved;
        }
        for (int n = 5; n <= 15; ++n) {
            const auto tt = gallery::taylor_tail_bound(f, n);
            worst_t = std::min(worst_t, tt.relative_slack);
            resolved = resolved && tt.resolved;
        }
    }
    const bool ok = worst_h >= -1e-8 && worst_t >= -1e-8 && resolved;
    return {ok, fmt("min relative slack: Hadamard %.4g, Taylor %.4g; sampling resolved: %s", worst_h, worst_t,
                    resolved ? "yes" : "no")};
}

Outcome ac9_determinism() {
    std::vector<cli::RunConfig> configs;
    auto add = [&](const std::string& command, const std::string& item, auto&& tweak) {
        cli::RunConfig c;
        c.command = command;
        c.gallery = item;
        c.seed = 909;
        tweak(c);
        configs.push_back(c);
    };
    auto none = [](cli::RunConfig&) {};
    add("dn certify", "", [](cli::RunConfig& c) { c.dims = {16, 64, 256}; });
    add("dn certify", "", [](cli::RunConfig& c) {
        c.space = "lambda-unit";
        c.dims = {16, 64};
    });
    add("dn falsify", "", none);
    add("algebra check", "", [](cli::RunConfig& c) { c.algebra = "cyclic:5"; });
    add("embed run", "", [](cli::RunConfig& c) {
        c.algebra = "torus:2x3";
        c.ambient = 20;
        c.permute = true;
    });
    for (const char* item : {"torus", "legendre", "nikolskii", "hadamard", "taylor", "lambda-unit", "ainf"}) {
        add("gallery", item, none);
    }
    std::size_t mismatches = 0;
    std::string which;
    for (const auto& c : configs) {
        if (cli::execute(c).dump(false) != cli::execute(c).dump(false)) {
            ++mismatches;
            which += " " + c.command + (c.gallery.empty() ? "" : " " + c.gallery);
        }
    }
    return {mismatches == 0,
            fmt("%zu/%zu command reports byte-identical%s", configs.size() - mismatches, configs.size(),
                which.empty() ? "" : ("; differ:" + which).c_str())};
}

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "normal-operator constant pi/sqrt(6)", 60, ac1_normal_operator_constant},
        {"AC2", "DN interpolation on s", 30, ac2_interpolation_on_s},
        {"AC3", "Lambda(alpha)+C1 chain", 60, ac3_lambda_unit_chain},
        {"AC4", "A-infinity falsification", 60, ac4_ainf_falsification},
        {"AC5", "embedding pipeline", 60, ac5_embedding_pipeline},
        {"AC6", "torus Weyl law", 30, ac6_weyl_law},
        {"AC7", "Legendre / Nikolskii", 30, ac7_legendre_nikolskii},
        {"AC8", "Hadamard three-circle and Taylor tail", 30, ac8_hadamard_taylor},
        {"AC9", "determinism", 120, ac9_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("%s %s: %s | %s | %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL", c.id, c.title,
                    o.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
