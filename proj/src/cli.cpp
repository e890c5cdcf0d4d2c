#include "opstar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "opstar/dnlab.hpp"
#include "opstar/embed.hpp"
#include "opstar/gallery/ainf.hpp"
#include "opstar/gallery/algebras.hpp"
#include "opstar/gallery/bump.hpp"
#include "opstar/gallery/entire.hpp"
#include "opstar/gallery/legendre.hpp"
#include "opstar/gallery/torus.hpp"
#include "opstar/gallery/unit_chains.hpp"
#include "opstar/seqspace.hpp"
#include "opstar/staralg.hpp"

namespace opstar::cli {

using Eigen::Index;
using io::Csv;
using io::Json;
using io::Report;
using io::format_double;

namespace {

std::vector<Index> dims_or(const RunConfig& cfg, std::vector<Index> fallback) {
    return cfg.dims.empty() ? fallback : cfg.dims;
}

seqspace::WeightSequence make_weights(const RunConfig& cfg, Index dim) {
    switch (seqspace::weight_kind_from_string(cfg.alpha)) {
        case seqspace::WeightKind::Linear: return seqspace::WeightSequence::linear(dim, cfg.alpha_scale);
        case seqspace::WeightKind::Log1p:
            return seqspace::WeightSequence::log1p(dim, cfg.alpha_scale, cfg.alpha_power);
        case seqspace::WeightKind::LogJ: return seqspace::WeightSequence::logj(dim);
        case seqspace::WeightKind::Explicit: break;
    }
    throw std::invalid_argument("explicit weights are not available from the command line");
}

// ---------------------------------------------------------------- dn

std::unique_ptr<dnlab::GradedSpace> make_space(const RunConfig& cfg, Index max_dim) {
    if (cfg.space == "s") return std::make_unique<dnlab::SSpace>();
    if (cfg.space == "lambda") return std::make_unique<dnlab::LambdaSpace>(make_weights(cfg, max_dim));
    if (cfg.space == "lambda-unit") {
        return std::make_unique<dnlab::LambdaUnitSpace>(make_weights(cfg, max_dim));
    }
    if (cfg.space == "torus1" || cfg.space == "torus2" || cfg.space == "torus3") {
        return std::make_unique<gallery::TorusSobolevSpace>(cfg.space.back() - '0', max_dim);
    }
    if (cfg.space == "ainf") {
        if (max_dim > gallery::kAinfMaxN) throw NumericOverflow("A-infinity grid exceeds n = 60");
        return std::make_unique<gallery::AinfSpace>();
    }
    throw std::invalid_argument("unknown space '" + cfg.space + "'");
}

Report dn_certify(const RunConfig& cfg) {
    Report rep("dn certify");
    rep.set_seed(cfg.seed);
    const auto grid = dims_or(cfg, cfg.space == "ainf" ? std::vector<Index>{8, 16, 32}
                                                       : std::vector<Index>{64, 256, 1024});
    const auto space = make_space(cfg, *std::max_element(grid.begin(), grid.end()));

    dnlab::DnProbe probe;
    probe.space = space.get();
    probe.q = cfg.q;
    probe.r_list = cfg.r;
    probe.grid = grid;
    probe.seed = cfg.seed;
    probe.family.damped_gaussians = cfg.probes.value_or(64);
    const auto cert = dnlab::certify_dn(probe);

    rep.tolerance("bounded_exponent", dnlab::kBoundedExponent);
    rep.tolerance("growing_exponent", dnlab::kGrowingExponent);
    rep.tolerance("max_excluded_fraction", dnlab::kMaxExcludedFraction);
    rep.probe_count("damped_gaussians_per_dim", probe.family.damped_gaussians);
    rep.probe_count("beta_values", probe.family.betas.size());

    Json& res = rep.results();
    res["space"] = cert.space;
    if (cfg.space == "lambda" || cfg.space == "lambda-unit") {
        res["weights"] = io::weights_to_json(make_weights(cfg, grid.back()));
    }
    res["q"] = cert.q;
    res["grid"] = grid;
    res["verdict"] = dnlab::to_string(cert.verdict);
    res["witness_r"] = cert.witness_r ? Json(*cert.witness_r) : Json(nullptr);
    res["reason"] = cert.reason;
    Csv csv{"curves", {"r", "dim", "constant", "probes", "excluded", "argmax_probe"}, {}};
    Json curves = Json::array();
    double max_constant = 0.0;
    for (const auto& c : cert.curves) {
        Json pts = Json::array();
        for (const auto& pt : c.points) {
            pts.push_back({{"dim", pt.dim},
                           {"constant", pt.constant},
                           {"probes", pt.probes},
                           {"excluded", pt.excluded},
                           {"argmax_probe", pt.argmax_probe}});
            csv.rows.push_back({std::to_string(c.r), std::to_string(pt.dim), format_double(pt.constant),
                                std::to_string(pt.probes), std::to_string(pt.excluded),
                                std::to_string(pt.argmax_probe)});
            max_constant = std::max(max_constant, pt.constant);
        }
        curves.push_back({{"r", c.r},
                          {"exponent", c.exponent},
                          {"excessive_exclusions", c.excessive_exclusions},
                          {"points", pts}});
    }
    res["curves"] = curves;
    rep.add_csv(std::move(csv));

    rep.check("certified-bounded", cert.verdict == dnlab::Verdict::CertifiedBounded,
              {{"verdict", dnlab::to_string(cert.verdict)}});
    const bool interpolation = cfg.space == "s" &&
        std::all_of(cfg.r.begin(), cfg.r.end(), [&](int r) { return r >= 2 * cfg.q; });
    if (interpolation) {
        const double tol = cfg.tol.value_or(1e-10);
        rep.tolerance("interpolation_constant", tol);
        rep.check("interpolation-constant", max_constant <= 1.0 + tol,
                  {{"max_constant", max_constant}, {"bound", 1.0}});
    }
    return rep;
}

Report dn_falsify(const RunConfig& cfg) {
    Report rep("dn falsify");
    rep.set_seed(cfg.seed);
    int n_max = cfg.n_max;
    std::unique_ptr<dnlab::GradedSpace> space;
    std::function<Vector(Index)> member;
    int q = cfg.q;
    std::vector<int> r_list = cfg.r;
    if (cfg.family == "ainf") {
        if (n_max > gallery::kAinfMaxN) {
            rep.mark_overflow("family index " + std::to_string(n_max) + " exceeds " +
                              std::to_string(gallery::kAinfMaxN) + "; table truncated");
            n_max = gallery::kAinfMaxN;
        }
        space = std::make_unique<gallery::AinfSpace>();
        member = gallery::ainf_family_member;
        q = 0;
        r_list = {cfg.p};
    } else if (cfg.family == "s-basis") {
        space = std::make_unique<dnlab::SSpace>();
        member = [](Index n) { return seqspace::unit_vector(n, n); };
    } else {
        throw std::invalid_argument("unknown family '" + cfg.family + "'");
    }
    std::vector<Index> params;
    for (Index n = 1; n <= n_max; ++n) params.push_back(n);
    const auto rep_f = dnlab::falsify_dn(*space, member, params, q, r_list, cfg.threshold);

    rep.tolerance("threshold", cfg.threshold);
    rep.tolerance("growing_exponent", dnlab::kGrowingExponent);
    rep.probe_count("family_members", params.size());
    Json& res = rep.results();
    res["family"] = cfg.family;
    res["space"] = rep_f.space;
    res["q"] = rep_f.q;
    Json curves = Json::array();
    Csv csv{"ratios", {"r", "n", "ratio"}, {}};
    for (const auto& c : rep_f.curves) {
        curves.push_back({{"r", c.r},
                          {"params", c.params},
                          {"ratios", c.ratios},
                          {"exponent", c.exponent},
                          {"loglog_slope", c.loglog_slope},
                          {"first_above", c.first_above ? Json(*c.first_above) : Json(nullptr)}});
        for (std::size_t i = 0; i < c.params.size(); ++i) {
            csv.rows.push_back({std::to_string(c.r), std::to_string(c.params[i]), format_double(c.ratios[i])});
        }
        rep.check("growth r=" + std::to_string(c.r),
                  c.first_above.has_value() && c.exponent > dnlab::kGrowingExponent,
                  {{"exponent", c.exponent}});
    }
    res["curves"] = curves;
    rep.add_csv(std::move(csv));
    return rep;
}

// ---------------------------------------------------------------- algebra

staralg::StarAlgebraSpec resolve_algebra(const RunConfig& cfg) {
    if (!cfg.algebra.empty()) return builtin_algebra(cfg.algebra);
    if (cfg.inputs.empty()) return builtin_algebra("diagonal:4");
    return io::load_algebra_spec(cfg.inputs.front());
}

Report algebra_check(const RunConfig& cfg) {
    Report rep("algebra check");
    if (cfg.inputs.empty() && cfg.algebra.empty()) throw std::invalid_argument("algebra check needs a spec file");
    const auto alg = resolve_algebra(cfg);
    const double tol = cfg.tol.value_or(1e-10);
    rep.tolerance("invariants", 1e-12);
    rep.tolerance("alpha", tol);
    rep.tolerance("delta_rank", 1e-10);

    Json& res = rep.results();
    res["source"] = cfg.algebra.empty() ? cfg.inputs.front() : cfg.algebra;
    res["dim"] = alg.dim();
    res["has_unit"] = alg.has_unit();
    res["commutative"] = alg.is_commutative();
    rep.check("invariants", true);
    rep.check("delta", staralg::check_delta(alg));

    const auto ident = staralg::GramForm::identity(alg.dim());
    res["identity_gram_alpha_defect"] = staralg::check_alpha(alg, ident).value;
    res["alpha_gram_basis_size"] = staralg::alpha_gram_basis(alg).size();
    try {
        const auto g = staralg::generate_alpha_gram(alg);
        const auto alpha = staralg::check_alpha(alg, g);
        const auto gamma = staralg::check_gamma(alg, g);
        res["gram"] = {{"condition", g.condition_number()},
                       {"alpha_defect", alpha.value},
                       {"gamma_defect", gamma.value},
                       {"gamma_basis", gamma.basis},
                       {"beta", staralg::check_beta(alg, g)}};
        if (cfg.emit_matrices) res["gram"]["matrix"] = io::matrix_to_json(g.matrix());
        rep.check("alpha-gram", alpha.value <= tol, {{"defect", alpha.value}});
    } catch (const staralg::NoAlphaGram& e) {
        rep.check("alpha-gram", false, {{"error", e.what()}});
    }
    return rep;
}

// ---------------------------------------------------------------- embed

Report embed_run(const RunConfig& cfg) {
    Report rep("embed run");
    rep.set_seed(cfg.seed);
    const auto alg = resolve_algebra(cfg);
    ProbeRng rng(cfg.seed);
    const auto g = staralg::generate_alpha_gram(alg, &rng);

    embed::PipelineOptions opt;
    opt.ambient = cfg.ambient;
    if (cfg.method == "cholesky") {
        opt.method = embed::FactorMethod::Cholesky;
    } else if (cfg.method == "hermitian-sqrt") {
        opt.method = embed::FactorMethod::HermitianSqrt;
    } else {
        throw std::invalid_argument("unknown factor method '" + cfg.method + "'");
    }
    const Index ambient = cfg.ambient == 0 ? alg.dim() : cfg.ambient;
    if (cfg.permute) opt.slots = embed::random_slots(alg.dim(), ambient, rng);
    opt.sampled_pairs = cfg.pairs;
    opt.rng = &rng;
    const auto r = embed::full_pipeline(alg, g, opt);

    rep.tolerance("linear", r.tol.linear);
    rep.tolerance("algebraic", r.tol.algebraic);
    rep.tolerance("scale", r.tol.scale);
    rep.probe_count("basis_pairs", static_cast<std::size_t>(alg.dim() * alg.dim()));
    rep.probe_count("sampled_pairs", r.sampled_pairs);

    Json& res = rep.results();
    res["algebra"] = cfg.algebra.empty() ? (cfg.inputs.empty() ? "diagonal:4" : cfg.inputs.front()) : cfg.algebra;
    res["source_dim"] = r.source_dim;
    res["ambient_dim"] = r.ambient_dim;
    res["method"] = embed::to_string(r.method);
    std::vector<Index> slots1;
    for (Index s : r.slots) slots1.push_back(s + 1);
    res["slots"] = slots1;
    res["gram_condition"] = r.gram_condition;
    res["alpha_defect"] = r.alpha_defect;
    res["isometry_defect"] = r.isometry_defect;
    res["phi_isometry_defect"] = r.phi_isometry_defect;
    res["projector_idempotence_defect"] = r.projector_idempotence_defect;
    res["projector_hermitian_defect"] = r.projector_hermitian_defect;
    res["unit_defect"] = r.unit_defect;
    res["multiplicativity_defect"] = r.multiplicativity_defect;
    res["involution_defect"] = r.involution_defect;
    res["projector_fixed_defect"] = r.projector_fixed_defect;
    res["injectivity_margin"] = r.injectivity_margin;
    res["projector_rank"] = r.projector_rank;
    res["representation_rank"] = r.representation_rank;

    const double lin = r.tol.linear;
    const double alg_tol = cfg.tol.value_or(r.tol.algebraic);
    rep.check("isometry", r.isometry_defect <= lin, {{"defect", r.isometry_defect}});
    rep.check("phi-star-phi", r.phi_isometry_defect <= lin, {{"defect", r.phi_isometry_defect}});
    rep.check("projector-idempotent", r.projector_idempotence_defect <= lin,
              {{"defect", r.projector_idempotence_defect}});
    rep.check("projector-hermitian", r.projector_hermitian_defect <= lin,
              {{"defect", r.projector_hermitian_defect}});
    rep.check("unit", r.unit_defect <= alg_tol, {{"defect", r.unit_defect}});
    rep.check("multiplicativity", r.multiplicativity_defect <= alg_tol, {{"defect", r.multiplicativity_defect}});
    rep.check("involution", r.involution_defect <= alg_tol, {{"defect", r.involution_defect}});
    rep.check("projector-fixed", r.projector_fixed_defect <= alg_tol, {{"defect", r.projector_fixed_defect}});
    rep.check("injective", r.injectivity_margin > 0.0, {{"margin", r.injectivity_margin}});

    if (cfg.emit_matrices) {
        const auto wit = embed::isometry_from_gram(g, ambient, opt.method, r.slots);
        const auto phi = embed::build_phi(wit);
        res["gram"] = io::matrix_to_json(g.matrix());
        res["phi"] = io::matrix_to_json(phi.phi);
        Json images = Json::array();
        for (Index i = 0; i < alg.dim(); ++i) {
            images.push_back(io::matrix_to_json(embed::embed_Phi(phi, alg.left_basis(i))));
        }
        res["Phi_basis"] = images;
    }
    return rep;
}

// ---------------------------------------------------------------- gallery

Csv weyl_csv(const gallery::TorusSpectrum& spec, Index k_min) {
    Csv csv{"weyl", {"k", "lambda", "ratio"}, {}};
    const auto total = static_cast<Index>(spec.eigenvalues.size());
    const double e = 2.0 / spec.n;
    Index last = 0;
    for (int i = 0; i <= 400; ++i) {
        const auto k = static_cast<Index>(std::llround(
            static_cast<double>(k_min) * std::pow(static_cast<double>(total) / k_min, i / 400.0)));
        if (k <= last || k > total) continue;
        last = k;
        const double lam = spec.eigenvalues[static_cast<std::size_t>(k - 1)];
        csv.rows.push_back({std::to_string(k), format_double(lam),
                            format_double(lam / std::pow(static_cast<double>(k), e))});
    }
    return csv;
}

void gallery_torus(const RunConfig& cfg, Report& rep) {
    if (cfg.torus_n < 1 || cfg.torus_n > 3) throw std::invalid_argument("torus dimension must be 1..3");
    const auto spec = gallery::torus_spectrum(cfg.torus_n, cfg.count);
    Json& res = rep.results();
    res["n"] = spec.n;
    res["count"] = cfg.count;
    res["first_eigenvalues"] =
        std::vector<double>(spec.eigenvalues.begin(),
                            spec.eigenvalues.begin() + std::min<std::size_t>(16, spec.eigenvalues.size()));
    rep.check("lambda1-zero", spec.eigenvalues.front() == 0.0);
    rep.check("nondecreasing", std::is_sorted(spec.eigenvalues.begin(), spec.eigenvalues.end()));
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i + 1 < spec.shells.size(); ++i) {
        mismatched += spec.shells[i].multiplicity != gallery::lattice_shell_count(spec.n, spec.shells[i].norm2);
    }
    rep.check("shell-multiplicities", mismatched == 0,
              {{"complete_shells", spec.shells.empty() ? 0 : spec.shells.size() - 1}, {"mismatched", mismatched}});
    const Index k_min = std::min<Index>(100, std::max<Index>(2, cfg.count / 2));
    if (cfg.count >= 4) {
        const auto band = gallery::weyl_band(spec, k_min, cfg.count);
        res["weyl_band"] = {{"k_min", band.k_min}, {"k_max", band.k_max}, {"low", band.low},
                            {"high", band.high}, {"width_ratio", band.width_ratio()}};
        rep.check("weyl-band", band.width_ratio() < 4.0, {{"width_ratio", band.width_ratio()}});
        rep.add_csv(weyl_csv(spec, k_min));
    }
}

void gallery_fourier(const RunConfig& cfg, Report& rep) {
    const double tol = cfg.tol.value_or(1e-10);
    rep.tolerance("product", tol);
    rep.tolerance("alpha", 1e-12);
    const auto alg = gallery::torus_convolution_algebra(cfg.sizes);
    ProbeRng rng(cfg.seed);
    const std::size_t trials = cfg.probes.value_or(16);
    rep.probe_count("product_pairs", trials);
    double worst = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const Vector a = rng.complex_gaussian_vector(alg.dim());
        const Vector b = rng.complex_gaussian_vector(alg.dim());
        const Vector lhs = gallery::trig_poly_samples(cfg.sizes, alg.product(a, b));
        const Vector rhs =
            gallery::trig_poly_samples(cfg.sizes, a).cwiseProduct(gallery::trig_poly_samples(cfg.sizes, b));
        worst = std::max(worst, max_abs(lhs - rhs) / std::max(1.0, max_abs(rhs)));
    }
    Json& res = rep.results();
    res["sizes"] = cfg.sizes;
    res["dim"] = alg.dim();
    res["product_defect"] = worst;
    rep.check("product-is-pointwise", worst <= tol, {{"defect", worst}});
    const auto alpha = staralg::check_alpha(alg, staralg::GramForm::identity(alg.dim()));
    res["alpha_defect"] = alpha.value;
    rep.check("plain-inner-product-alpha", alpha.value <= 1e-12, {{"defect", alpha.value}});

    // (I+Δ)^r on the circle acts on e^{imx} by (1+m²)^r.
    const auto spec = gallery::torus_spectrum(1, 64);
    const Vector a = rng.complex_gaussian_vector(64);
    const Vector got = gallery::fourier_sobolev_coeffs(a, spec, 2);
    double sob = 0.0;
    for (Index k = 0; k < 64; ++k) {
        const double m = spec.modes[static_cast<std::size_t>(k)][0];
        const Complex want = a(k) * std::pow(1.0 + m * m, 2);
        sob = std::max(sob, std::abs(got(k) - want) / std::max(1.0, std::abs(want)));
    }
    res["sobolev_defect"] = sob;
    rep.check("sobolev-closed-form", sob <= 1e-14, {{"defect", sob}});

    const auto grid = dims_or(cfg, {64, 256, 1024});
    const gallery::TorusSobolevSpace space(cfg.torus_n, grid.back());
    dnlab::DnProbe probe;
    probe.space = &space;
    probe.q = cfg.q;
    probe.r_list = cfg.r;
    probe.grid = grid;
    probe.seed = cfg.seed;
    probe.family.damped_gaussians = cfg.probes.value_or(64);
    const auto cert = dnlab::certify_dn(probe);
    Json curves = Json::array();
    for (const auto& c : cert.curves) {
        Json constants = Json::array();
        for (const auto& pt : c.points) constants.push_back(pt.constant);
        curves.push_back({{"r", c.r}, {"exponent", c.exponent}, {"constants", constants}});
    }
    res["dn"] = {{"space", cert.space}, {"q", cert.q}, {"grid", grid},
                 {"verdict", dnlab::to_string(cert.verdict)}, {"curves", curves}};
    rep.check("sobolev-dn-certified", cert.verdict == dnlab::Verdict::CertifiedBounded,
              {{"verdict", dnlab::to_string(cert.verdict)}});
}

void gallery_legendre(const RunConfig& cfg, Report& rep) {
    const double tol = cfg.tol.value_or(1e-12);
    const int degree = cfg.degree > 0 ? cfg.degree : 30;
    rep.tolerance("orthonormality", tol);
    rep.tolerance("recurrence", 1e-12);
    const double defect = gallery::legendre_orthonormality_defect(degree);
    rep.results()["degree"] = degree;
    rep.results()["orthonormality_defect"] = defect;
    rep.check("orthonormality", defect <= tol, {{"defect", defect}});

    Csv csv{"orthonormality", {"degree", "defect"}, {}};
    for (int n = 1; n <= degree; ++n) {
        csv.rows.push_back({std::to_string(n), format_double(gallery::legendre_orthonormality_defect(n))});
    }
    rep.add_csv(std::move(csv));

    // (k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1} on the classical polynomials.
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 + i / 100.0;
        const auto all = gallery::legendre_all(50, x);
        const auto classical = [&](int k) { return all[static_cast<std::size_t>(k)] / std::sqrt((2.0 * k + 1.0) / 2.0); };
        for (int k = 1; k < 50; ++k) {
            const double res = (k + 1) * classical(k + 1) - (2.0 * k + 1) * x * classical(k) + k * classical(k - 1);
            worst = std::max(worst, std::abs(res) / (2.0 * k + 1));
        }
    }
    rep.results()["recurrence_residual"] = worst;
    rep.check("three-term-recurrence", worst <= 1e-12, {{"residual", worst}});
}

void gallery_nikolskii(const RunConfig& cfg, Report& rep) {
    const std::size_t count = cfg.probes.value_or(1000);
    const int max_degree = cfg.degree > 0 ? cfg.degree : 30;
    const double tol = cfg.tol.value_or(1e-12);
    rep.tolerance("nikolskii", tol);
    rep.probe_count("random_polynomials", count);
    ProbeRng rng(cfg.seed);
    std::size_t violations = 0;
    double max_ext = 0.0;
    bool resolved = true;
    for (std::size_t t = 0; t < count; ++t) {
        const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree) + 1));
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        const double decay = rng.uniform(0.0, 2.0);
        for (int k = 0; k <= deg; ++k) c[static_cast<std::size_t>(k)] = rng.normal() * std::exp(-decay * k / (deg + 1.0));
        const auto r = gallery::nikolskii_check_legendre(c);
        violations += !r.holds(tol);
        max_ext = std::max(max_ext, r.extremality());
        resolved = resolved && r.resolved;
    }
    rep.results()["random"] = {{"count", count}, {"max_degree", max_degree},
                               {"max_extremality", max_ext}, {"violations", violations}, {"resolved", resolved}};
    rep.check("nikolskii-random", violations == 0, {{"violations", violations}});

    Csv csv{"witness", {"degree", "sup", "bound", "extremality"}, {}};
    double min_ext = 1.0;
    bool witness_holds = true;
    for (int n = 0; n <= max_degree; ++n) {
        const auto r = gallery::nikolskii_check_legendre(gallery::christoffel_darboux_witness(n));
        min_ext = std::min(min_ext, r.extremality());
        witness_holds = witness_holds && r.holds(tol);
        csv.rows.push_back({std::to_string(n), format_double(r.sup), format_double(r.bound),
                            format_double(r.extremality())});
    }
    rep.add_csv(std::move(csv));
    rep.results()["witness_min_extremality"] = min_ext;
    rep.check("witness-within-factor-2", witness_holds && min_ext >= 0.5, {{"min_extremality", min_ext}});
}

void gallery_joukowski(const RunConfig& cfg, Report& rep) {
    Json rows = Json::array();
    double worst = 0.0;
    for (double r : cfg.radii) {
        const auto e = gallery::joukowski_ellipse(r);
        double d = std::abs(e.a * e.a - e.b * e.b - 1.0);
        for (int i = 0; i < 64; ++i) {
            const double th = 2.0 * M_PI * i / 64;
            const Complex z = std::polar(e.r, th);
            d = std::max(d, std::abs(0.5 * (z + 1.0 / z) - e.point(th)) / std::max(1.0, e.a));
        }
        worst = std::max(worst, d);
        rows.push_back({{"r", r}, {"normalised_r", e.r}, {"a", e.a}, {"b", e.b}, {"defect", d}});
    }
    rep.results()["ellipses"] = rows;
    rep.tolerance("map", 1e-14);
    rep.check("ellipse-image", worst <= 1e-14, {{"defect", worst}});
}

void gallery_hadamard(const RunConfig& cfg, Report& rep) {
    const std::size_t count = cfg.probes.value_or(100);
    const int degree = cfg.degree > 0 ? cfg.degree : 12;
    const double tol = cfg.tol.value_or(1e-8);
    rep.tolerance("relative_slack", tol);
    rep.probe_count("random_polynomials", count);
    ProbeRng rng(cfg.seed);
    Csv csv{"slack", {"sample", "r", "lhs", "rhs", "relative_slack"}, {}};
    Json per_r = Json::array();
    for (double r : cfg.radii) {
        ProbeRng local(dnlab::grid_seed(cfg.seed, static_cast<Index>(std::lround(r * 1000))));
        double min_slack = std::numeric_limits<double>::infinity();
        bool resolved = true;
        for (std::size_t t = 0; t < count; ++t) {
            const auto f = gallery::EntireFunctionSample::random(degree, local);
            const auto h = gallery::hadamard_check(f, r);
            min_slack = std::min(min_slack, h.relative_slack);
            resolved = resolved && h.resolved;
            csv.rows.push_back({std::to_string(t), format_double(r), format_double(h.lhs), format_double(h.rhs),
                                format_double(h.relative_slack)});
        }
        per_r.push_back({{"r", r}, {"min_relative_slack", min_slack}, {"resolved", resolved}});
        rep.check("hadamard r=" + format_double(r), min_slack >= -tol, {{"min_relative_slack", min_slack}});
    }
    rep.results()["degree"] = degree;
    rep.results()["radii"] = per_r;
    rep.add_csv(std::move(csv));
}

void gallery_taylor(const RunConfig& cfg, Report& rep) {
    const std::size_t count = cfg.probes.value_or(100);
    const int degree = cfg.degree > 0 ? cfg.degree : cfg.taylor_max + 8;
    if (cfg.taylor_min < 0 || cfg.taylor_max >= degree || cfg.taylor_min > cfg.taylor_max) {
        throw std::invalid_argument("Taylor range must satisfy 0 <= n-min <= n-max < degree");
    }
    const double tol = cfg.tol.value_or(1e-8);
    rep.tolerance("relative_slack", tol);
    rep.probe_count("random_polynomials", count);
    ProbeRng rng(cfg.seed);
    double min_slack = std::numeric_limits<double>::infinity();
    Csv csv{"tail", {"n", "min_relative_slack"}, {}};
    std::vector<double> per_n(static_cast<std::size_t>(cfg.taylor_max + 1), std::numeric_limits<double>::infinity());
    for (std::size_t t = 0; t < count; ++t) {
        const auto f = gallery::EntireFunctionSample::random(degree, rng);
        for (int n = cfg.taylor_min; n <= cfg.taylor_max; ++n) {
            const auto r = gallery::taylor_tail_bound(f, n);
            per_n[static_cast<std::size_t>(n)] = std::min(per_n[static_cast<std::size_t>(n)], r.relative_slack);
            min_slack = std::min(min_slack, r.relative_slack);
        }
    }
    for (int n = cfg.taylor_min; n <= cfg.taylor_max; ++n) {
        csv.rows.push_back({std::to_string(n), format_double(per_n[static_cast<std::size_t>(n)])});
    }
    rep.add_csv(std::move(csv));
    rep.results()["degree"] = degree;
    rep.results()["n_range"] = {cfg.taylor_min, cfg.taylor_max};
    rep.results()["min_relative_slack"] = min_slack;
    rep.check("taylor-tail", min_slack >= -tol, {{"min_relative_slack", min_slack}});
}

void gallery_lambda_unit(const RunConfig& cfg, Report& rep) {
    const auto grid = dims_or(cfg, {64, 256, 1024});
    const Index top = *std::max_element(grid.begin(), grid.end());
    const auto alpha = make_weights(cfg, top);
    const auto gamma = seqspace::gamma_index(alpha);
    const std::size_t count = cfg.probes.value_or(1000);
    rep.probe_count("probes_per_dim", count);
    rep.tolerance("log_relative", 1e-12);
    Json& res = rep.results();
    res["weights"] = io::weights_to_json(alpha);
    res["gamma"] = {{"value", gamma.gamma}, {"max", gamma.max_value}, {"argmax", gamma.argmax}};
    Csv csv{"chain", {"s", "dim", "max_ratio", "max_lambda_ratio", "max_a1", "max_a2", "max_a3",
                      "a1", "a2", "a3", "violations"}, {}};
    Json runs = Json::array();
    for (int s : cfg.s_list) {
        for (Index d : grid) {
            ProbeRng rng(dnlab::grid_seed(cfg.seed + static_cast<std::uint64_t>(s), d));
            const auto probes = gallery::lambda_unit_probes(alpha, d, count, rng);
            const auto r = gallery::lambda_unit_dn(alpha.extended(d), s, probes, gamma.gamma);
            runs.push_back({{"s", s}, {"dim", d}, {"t", r.t}, {"probes", r.probes},
                            {"max_ratio", r.max_ratio}, {"argmax_probe", r.argmax_probe},
                            {"max_lambda_ratio", r.max_lambda_ratio}, {"max_a1", r.max_a1},
                            {"max_a2", r.max_a2}, {"max_a3", r.max_a3},
                            {"partition", {r.a1_count, r.a2_count, r.a3_count}},
                            {"a3_precondition", r.a3_precondition}, {"violations", r.violations}});
            csv.rows.push_back({std::to_string(s), std::to_string(d), format_double(r.max_ratio),
                                format_double(r.max_lambda_ratio), format_double(r.max_a1),
                                format_double(r.max_a2), format_double(r.max_a3), std::to_string(r.a1_count),
                                std::to_string(r.a2_count), std::to_string(r.a3_count),
                                std::to_string(r.violations)});
            const std::string tag = " s=" + std::to_string(s) + " d=" + std::to_string(d);
            rep.check("final-bound" + tag, r.max_ratio <= 16.0 * (1.0 + 1e-12) && r.violations == 0,
                      {{"max_ratio", r.max_ratio}});
            rep.check("lambda-bound" + tag, r.max_lambda_ratio <= 4.0 * (1.0 + 1e-12),
                      {{"max_lambda_ratio", r.max_lambda_ratio}});
            rep.check("a3-precondition" + tag, r.a3_precondition);
        }
    }
    res["runs"] = runs;
    rep.add_csv(std::move(csv));
}

void gallery_kinf_unit(const RunConfig& cfg, Report& rep) {
    const auto grid = dims_or(cfg, {8, 16, 32});
    const std::size_t count = cfg.probes.value_or(200);
    rep.probe_count("probes_per_dim", count);
    Json runs = Json::array();
    Csv csv{"chain", {"k", "dim", "max_offdiag_ratio", "max_diag_chain_ratio", "max_combined", "bound"}, {}};
    for (int k : cfg.k_list) {
        for (Index d : grid) {
            ProbeRng rng(dnlab::grid_seed(cfg.seed + static_cast<std::uint64_t>(k), d));
            const auto probes = gallery::kinf_unit_probes(d, count, rng);
            const auto r = gallery::kinf_unit_dn(k, probes);
            runs.push_back({{"k", k}, {"dim", d}, {"n", r.n}, {"probes", r.probes},
                            {"max_offdiag_ratio", r.max_offdiag_ratio},
                            {"max_diag_chain_ratio", r.max_diag_chain_ratio},
                            {"max_combined", r.max_combined}, {"combined_bound", r.combined_bound},
                            {"violations", r.violations}});
            csv.rows.push_back({std::to_string(k), std::to_string(d), format_double(r.max_offdiag_ratio),
                                format_double(r.max_diag_chain_ratio), format_double(r.max_combined),
                                format_double(r.combined_bound)});
            rep.check("kinf-chain k=" + std::to_string(k) + " d=" + std::to_string(d), r.passed(),
                      {{"max_combined", r.max_combined}, {"bound", r.combined_bound}});
        }
    }
    rep.results()["runs"] = runs;
    rep.add_csv(std::move(csv));
}

void gallery_bump(const RunConfig& cfg, Report& rep) {
    const std::vector<Complex> lambdas{0.0, 1.0, Complex(0.5, -0.25)};
    rep.tolerance("integration_abs", 1e-10);
    rep.tolerance("bound_relative", 1e-9);
    Json runs = Json::array();
    Csv csv{"constants", {"m", "eps", "lambda_re", "lambda_im", "constant", "bound"}, {}};
    for (int m : cfg.m_list) {
        double worst = 0.0;
        bool ok = true;
        for (double eps : cfg.eps_list) {
            for (Complex lam : lambdas) {
                const auto r = gallery::bump_dn_check(m, eps, lam);
                worst = std::max(worst, r.constant / r.proven_bound);
                ok = ok && r.holds();
                runs.push_back({{"m", m}, {"eps", eps}, {"lambda", io::complex_to_json(lam)},
                                {"constant", r.constant}, {"bound", r.proven_bound}});
                csv.rows.push_back({std::to_string(m), format_double(eps), format_double(lam.real()),
                                    format_double(lam.imag()), format_double(r.constant),
                                    format_double(r.proven_bound)});
            }
        }
        rep.check("bump m=" + std::to_string(m), ok, {{"max_constant_over_bound", worst}});
    }
    rep.results()["runs"] = runs;
    rep.add_csv(std::move(csv));
}

void gallery_ainf(const RunConfig& cfg, Report& rep) {
    int n_max = cfg.n_max;
    if (n_max > gallery::kAinfMaxN) {
        rep.mark_overflow("n = " + std::to_string(n_max) + " exceeds the exact range n <= " +
                          std::to_string(gallery::kAinfMaxN) + "; table truncated");
        n_max = gallery::kAinfMaxN;
    }
    const int p_max = std::max(cfg.p_max, cfg.p);
    const auto table = gallery::ainf_counterexample(n_max, cfg.p, p_max, cfg.threshold);
    rep.tolerance("interval_sup_abs", 1e-10);
    rep.tolerance("disc_sup_rel", 1e-8);
    rep.tolerance("exponent", 0.1);
    rep.tolerance("grid_refinement", 1e-8);
    rep.tolerance("upper_bound_rel", gallery::kAinfBoundRelTol);
    rep.probe_count("boundary_grid", 4096);

    double interval_err = 0.0;
    double disc_err = 0.0;
    bool resolved = true;
    Json rows = Json::array();
    std::vector<std::string> header{"n", "sup_interval", "sup_disc"};
    for (int q = 0; q <= p_max; ++q) header.push_back("norm_" + std::to_string(q));
    for (int q = 0; q <= p_max; ++q) header.push_back("bound_" + std::to_string(q));
    header.insert(header.end(), {"ratio", "lower_bound_ratio"});
    Csv csv{"table", header, {}};
    for (const auto& row : table.rows) {
        interval_err = std::max(interval_err, std::abs(row.sup_interval - 1.0));
        disc_err = std::max(disc_err, std::abs(row.sup_disc - std::ldexp(1.0, row.n)) / std::ldexp(1.0, row.n));
        resolved = resolved && row.resolved;
        rows.push_back({{"n", row.n}, {"sup_interval", row.sup_interval}, {"sup_disc", row.sup_disc},
                        {"norm_p", row.norm_p}, {"bound", row.bound}, {"ratio", row.ratio},
                        {"lower_bound_ratio", row.lower_bound_ratio}});
        std::vector<std::string> line{std::to_string(row.n), format_double(row.sup_interval),
                                      format_double(row.sup_disc)};
        for (double v : row.norm_p) line.push_back(format_double(v));
        for (double v : row.bound) line.push_back(format_double(v));
        line.push_back(format_double(row.ratio));
        line.push_back(format_double(row.lower_bound_ratio));
        csv.rows.push_back(std::move(line));
    }
    rep.add_csv(std::move(csv));
    Json& res = rep.results();
    res["n_max"] = table.n_max;
    res["p"] = table.p;
    res["p_max"] = table.p_max;
    res["threshold"] = table.threshold;
    res["exponent"] = table.exponent;
    res["first_above"] = table.first_above ? Json(*table.first_above) : Json(nullptr);
    res["lower_bound_first_above"] =
        table.lower_bound_first_above ? Json(*table.lower_bound_first_above) : Json(nullptr);
    res["rows"] = rows;

    rep.check("interval-sup", interval_err <= 1e-10, {{"max_error", interval_err}});
    rep.check("disc-sup", disc_err <= 1e-8, {{"max_relative_error", disc_err}});
    rep.check("grid-resolved", resolved);
    rep.check("upper-bound", table.bound_respected);
    rep.check("monotone-from-5", table.monotone_from_5);
    rep.check("threshold-crossed", table.first_above.has_value(),
              {{"first_above", table.first_above ? Json(*table.first_above) : Json(nullptr)}});
    if (n_max >= 8) {
        rep.check("base2-exponent", std::abs(table.exponent - 1.0) <= 0.1, {{"exponent", table.exponent}});
    }
}

Report gallery_run(const RunConfig& cfg) {
    Report rep("gallery " + cfg.gallery);
    rep.set_seed(cfg.seed);
    if (cfg.gallery == "torus") {
        gallery_torus(cfg, rep);
    } else if (cfg.gallery == "fourier") {
        gallery_fourier(cfg, rep);
    } else if (cfg.gallery == "legendre") {
        gallery_legendre(cfg, rep);
    } else if (cfg.gallery == "nikolskii") {
        gallery_nikolskii(cfg, rep);
    } else if (cfg.gallery == "joukowski") {
        gallery_joukowski(cfg, rep);
    } else if (cfg.gallery == "hadamard") {
        gallery_hadamard(cfg, rep);
    } else if (cfg.gallery == "taylor") {
        gallery_taylor(cfg, rep);
    } else if (cfg.gallery == "lambda-unit") {
        gallery_lambda_unit(cfg, rep);
    } else if (cfg.gallery == "kinf-unit") {
        gallery_kinf_unit(cfg, rep);
    } else if (cfg.gallery == "bump") {
        gallery_bump(cfg, rep);
    } else if (cfg.gallery == "ainf") {
        gallery_ainf(cfg, rep);
    } else {
        throw std::invalid_argument("unknown gallery item '" + cfg.gallery + "'");
    }
    return rep;
}

int parse_positive(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 1) throw std::invalid_argument(what + " must be a positive integer");
    return v;
}

// Fill options that were not given on the command line from a flat JSON
// record keyed by long flag names.
void apply_config(CLI::App& root, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::InputError(path, 0, "cannot open config");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw io::InputError(path, io::locate_line(text, {}), std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw io::InputError(path, 1, "config must be a JSON object");

    std::vector<CLI::App*> chain{&root};
    for (CLI::App* app = &root;;) {
        const auto subs = app->get_subcommands();
        if (subs.empty()) break;
        app = subs.front();
        chain.push_back(app);
    }
    for (const auto& [key, value] : doc.items()) {
        CLI::Option* opt = nullptr;
        for (auto it = chain.rbegin(); it != chain.rend() && opt == nullptr; ++it) {
            try {
                opt = (*it)->get_option("--" + key);
            } catch (const CLI::OptionNotFound&) {
            }
        }
        if (opt == nullptr) {
            throw io::InputError(path, io::locate_line(text, {{key}}), "unknown option '" + key + "'");
        }
        if (opt->count() > 0) continue;
        std::vector<Json> items = value.is_array() ? value.get<std::vector<Json>>() : std::vector<Json>{value};
        for (const auto& v : items) {
            opt->add_result(v.is_string() ? v.get<std::string>() : v.dump());
        }
        try {
            opt->run_callback();
        } catch (const CLI::Error& e) {
            throw io::InputError(path, io::locate_line(text, {{key}}), e.what());
        }
    }
}

}  // namespace

staralg::StarAlgebraSpec builtin_algebra(const std::string& name) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("builtin algebra must look like kind:size");
    const std::string kind = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    if (kind == "torus") {
        std::vector<int> sizes;
        std::stringstream ss(arg);
        for (std::string part; std::getline(ss, part, 'x');) sizes.push_back(parse_positive(part, "torus size"));
        return gallery::torus_convolution_algebra(sizes);
    }
    const int n = parse_positive(arg, kind + " size");
    if (kind == "diagonal") return gallery::diagonal_algebra(n);
    if (kind == "cyclic") return gallery::cyclic_group_algebra(n);
    if (kind == "matrix") return gallery::matrix_algebra(n);
    if (kind == "zero") return gallery::zero_algebra(n);
    if (kind == "annihilator") return gallery::annihilator_algebra(n);
    throw std::invalid_argument("unknown builtin algebra '" + kind + "'");
}

io::Report execute(const RunConfig& cfg) {
    if (cfg.command == "dn certify") return dn_certify(cfg);
    if (cfg.command == "dn falsify") return dn_falsify(cfg);
    if (cfg.command == "algebra check") return algebra_check(cfg);
    if (cfg.command == "embed run") return embed_run(cfg);
    if (cfg.command == "gallery") return gallery_run(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::optional<Report> rep;
    try {
        rep.emplace(execute(cfg));
    } catch (const NumericOverflow& e) {
        err << "overflow: " << e.what() << "\n";
        Report partial(cfg.command == "gallery" ? "gallery " + cfg.gallery : cfg.command);
        partial.set_seed(cfg.seed);
        partial.mark_overflow(e.what());
        rep.emplace(std::move(partial));
    } catch (const io::InputError& e) {
        err << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (cfg.out) {
        rep->write(*cfg.out);
        if (!cfg.emit_csv) {
            for (const auto& c : rep->csvs()) std::filesystem::remove(*cfg.out / (rep->slug() + "-" + c.name + ".csv"));
        }
        err << rep->command() << ": " << (rep->overflowed() ? "overflow" : rep->all_passed() ? "pass" : "fail")
            << " -> " << (*cfg.out / (rep->slug() + ".json")).string() << "\n";
    } else {
        out << rep->dump();
    }
    for (const auto& c : rep->checks()) {
        if (!c.pass) err << "check failed: " << c.name << "\n";
    }
    if (rep->overflowed()) return kExitOverflow;
    return rep->all_passed() ? kExitPass : kExitCheck;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string config_path;
    std::string out_dir;
    double tol = 0.0;
    std::size_t probes = 0;

    CLI::App app{"Dominating-norm and Hilbert-algebra laboratory", "opstar"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--dims", cfg.dims, "Dimension grid, comma separated")->delimiter(',');
    app.add_option("--seed", cfg.seed, "Random seed");
    auto* tol_opt = app.add_option("--tol", tol, "Primary tolerance override");
    app.add_option("--out", out_dir, "Output directory for JSON and CSV reports");
    app.add_flag("--emit-matrices", cfg.emit_matrices, "Include dense matrices in the report");
    app.add_flag("!--no-csv", cfg.emit_csv, "Skip CSV curves");
    auto* probes_opt = app.add_option("--probes", probes, "Random probe count");
    app.add_option("--config", config_path, "JSON record of flag values");

    auto* dn = app.add_subcommand("dn", "Dominating-norm certification and falsification");
    dn->require_subcommand(1);
    auto* certify = dn->add_subcommand("certify", "Certify a DN constant over a dimension grid");
    certify->add_option("--space", cfg.space)
        ->check(CLI::IsMember({"s", "lambda", "lambda-unit", "torus1", "torus2", "torus3", "ainf"}));
    certify->add_option("--q", cfg.q);
    certify->add_option("--r", cfg.r)->delimiter(',');
    certify->add_option("--alpha", cfg.alpha)->check(CLI::IsMember({"linear", "log1p", "logj"}));
    certify->add_option("--alpha-scale", cfg.alpha_scale);
    certify->add_option("--alpha-power", cfg.alpha_power);
    auto* falsify = dn->add_subcommand("falsify", "Track DN ratios along a family");
    falsify->add_option("--family", cfg.family)->check(CLI::IsMember({"ainf", "s-basis"}));
    falsify->add_option("--n-max", cfg.n_max);
    falsify->add_option("--q", cfg.q);
    falsify->add_option("--r", cfg.r)->delimiter(',');
    falsify->add_option("--p", cfg.p);
    falsify->add_option("--threshold", cfg.threshold);

    auto* algebra = app.add_subcommand("algebra", "Star-algebra tools");
    algebra->require_subcommand(1);
    auto* check = algebra->add_subcommand("check", "Validate a structure-constant spec");
    check->add_option("spec", cfg.inputs, "Algebra spec JSON");
    check->add_option("--algebra", cfg.algebra, "Builtin algebra instead of a file");

    auto* embed_cmd = app.add_subcommand("embed", "Embedding pipeline");
    embed_cmd->require_subcommand(1);
    auto* embed_run_cmd = embed_cmd->add_subcommand("run", "Embed an algebra into truncated operators");
    embed_run_cmd->add_option("spec", cfg.inputs, "Algebra spec JSON");
    embed_run_cmd->add_option("--algebra", cfg.algebra, "Builtin such as cyclic:3 or torus:3x3");
    embed_run_cmd->add_option("--ambient", cfg.ambient);
    embed_run_cmd->add_option("--method", cfg.method)->check(CLI::IsMember({"cholesky", "hermitian-sqrt"}));
    embed_run_cmd->add_flag("--permute", cfg.permute, "Place the isometry in random ambient rows");
    embed_run_cmd->add_option("--pairs", cfg.pairs, "Sampled random pairs for multiplicativity");

    auto* gal = app.add_subcommand("gallery", "Worked instances");
    gal->add_option("name", cfg.gallery)->required()->check(CLI::IsMember(kGalleryItems));
    gal->add_option("--n", cfg.torus_n, "Torus dimension");
    gal->add_option("--count", cfg.count, "Number of eigenvalues");
    gal->add_option("--sizes", cfg.sizes, "Discrete torus sizes")->delimiter(',');
    gal->add_option("--q", cfg.q);
    gal->add_option("--r", cfg.r, "DN grades")->delimiter(',');
    gal->add_option("--degree", cfg.degree);
    gal->add_option("--radii", cfg.radii)->delimiter(',');
    gal->add_option("--n-min", cfg.taylor_min);
    gal->add_option("--n-max", cfg.n_max);
    gal->add_option("--p", cfg.p);
    gal->add_option("--p-max", cfg.p_max);
    gal->add_option("--threshold", cfg.threshold);
    gal->add_option("--alpha", cfg.alpha)->check(CLI::IsMember({"linear", "log1p", "logj"}));
    gal->add_option("--alpha-scale", cfg.alpha_scale);
    gal->add_option("--alpha-power", cfg.alpha_power);
    gal->add_option("--s", cfg.s_list)->delimiter(',');
    gal->add_option("--k", cfg.k_list)->delimiter(',');
    gal->add_option("--m", cfg.m_list)->delimiter(',');
    gal->add_option("--eps", cfg.eps_list)->delimiter(',');

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) apply_config(app, config_path);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInput;
    } catch (const io::InputError& e) {
        err << e.what() << "\n";
        return kExitInput;
    }

    if (dn->parsed()) cfg.command = certify->parsed() ? "dn certify" : "dn falsify";
    if (algebra->parsed()) cfg.command = "algebra check";
    if (embed_cmd->parsed()) cfg.command = "embed run";
    if (gal->parsed()) {
        cfg.command = "gallery";
        if (cfg.gallery == "taylor" && gal->get_option("--n-max")->count() > 0) cfg.taylor_max = cfg.n_max;
    }
    if (tol_opt->count() > 0) cfg.tol = tol;
    if (probes_opt->count() > 0) cfg.probes = probes;
    if (!out_dir.empty()) cfg.out = out_dir;
    if (cfg.command == "algebra check" && cfg.inputs.empty() && cfg.algebra.empty()) {
        err << "algebra check: a spec file or --algebra is required\n";
        return kExitInput;
    }
    return run(cfg, out, err);
}

}  // namespace opstar::cli
