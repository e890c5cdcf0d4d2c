#include "opstar/seqspace.hpp"

#include <cmath>
#include <stdexcept>

namespace opstar::seqspace {

std::string_view to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Linear: return "linear";
        case WeightKind::Log1p: return "log1p";
        case WeightKind::LogJ: return "logj";
        case WeightKind::Explicit: return "explicit";
    }
    return "unknown";
}

WeightKind weight_kind_from_string(std::string_view name) {
    if (name == "linear") return WeightKind::Linear;
    if (name == "log1p") return WeightKind::Log1p;
    if (name == "logj") return WeightKind::LogJ;
    if (name == "explicit") return WeightKind::Explicit;
    throw std::invalid_argument("unknown weight kind '" + std::string(name) + "'");
}

WeightSequence::WeightSequence(WeightKind kind, std::vector<double> values, double scale,
                               double power)
    : kind_(kind), values_(std::move(values)), scale_(scale), power_(power) {
    validate();
}

void WeightSequence::validate() const {
    if (values_.empty()) throw std::invalid_argument("weight sequence must have dim >= 1");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double a = values_[i];
        if (!std::isfinite(a) || a < 0.0 || (a == 0.0 && i > 0)) {
            throw std::invalid_argument("weight sequence entry " + std::to_string(i + 1) +
                                        " must be positive (only alpha_1 may be 0)");
        }
        if (i > 0 && a < values_[i - 1]) {
            throw std::invalid_argument("weight sequence is not monotone at j = " +
                                        std::to_string(i + 1));
        }
    }
}

WeightSequence WeightSequence::linear(Eigen::Index dim, double scale) {
    if (dim < 1) throw std::invalid_argument("weight sequence must have dim >= 1");
    if (!(scale > 0.0)) throw std::invalid_argument("linear weights need scale > 0");
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 1; j <= dim; ++j) v[static_cast<std::size_t>(j - 1)] = scale * j;
    return {WeightKind::Linear, std::move(v), scale, 1.0};
}

WeightSequence WeightSequence::log1p(Eigen::Index dim, double scale, double power) {
    if (dim < 1) throw std::invalid_argument("weight sequence must have dim >= 1");
    if (!(scale > 0.0) || !(power > 0.0)) {
        throw std::invalid_argument("log1p weights need scale > 0 and power > 0");
    }
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 1; j <= dim; ++j) {
        v[static_cast<std::size_t>(j - 1)] =
            scale * std::pow(std::log(static_cast<double>(j + 1)), power);
    }
    return {WeightKind::Log1p, std::move(v), scale, power};
}

WeightSequence WeightSequence::logj(Eigen::Index dim) {
    if (dim < 1) throw std::invalid_argument("weight sequence must have dim >= 1");
    std::vector<double> v(static_cast<std::size_t>(dim));
    for (Eigen::Index j = 1; j <= dim; ++j) {
        v[static_cast<std::size_t>(j - 1)] = std::log(static_cast<double>(j));
    }
    return {WeightKind::LogJ, std::move(v), 1.0, 1.0};
}

WeightSequence WeightSequence::explicit_list(std::vector<double> values) {
    return {WeightKind::Explicit, std::move(values), 1.0, 1.0};
}

double WeightSequence::operator()(Eigen::Index j) const {
    if (j < 1 || j > dim()) {
        throw std::out_of_range("weight index " + std::to_string(j) + " outside 1.." +
                                std::to_string(dim()));
    }
    return values_[static_cast<std::size_t>(j - 1)];
}

double WeightSequence::grade_weight(Eigen::Index j, double q) const {
    if (kind_ == WeightKind::LogJ) return std::pow(static_cast<double>(j), q);
    return std::exp(q * (*this)(j));
}

WeightSequence WeightSequence::extended(Eigen::Index new_dim) const {
    switch (kind_) {
        case WeightKind::Linear: return linear(new_dim, scale_);
        case WeightKind::Log1p: return log1p(new_dim, scale_, power_);
        case WeightKind::LogJ: return logj(new_dim);
        case WeightKind::Explicit:
            if (new_dim > dim()) {
                throw std::invalid_argument("explicit weight list of length " +
                                            std::to_string(dim()) + " cannot be extended to " +
                                            std::to_string(new_dim));
            }
            if (new_dim < 1) throw std::invalid_argument("weight sequence must have dim >= 1");
            return explicit_list(
                std::vector<double>(values_.begin(), values_.begin() + new_dim));
    }
    throw std::logic_error("unreachable weight kind");
}

void GradedNormIndex::validate() const {
    if (kind == GradedKind::DualPolynomial && q < 0) {
        throw std::invalid_argument("dual-polynomial grade requires q >= 0");
    }
}

double norm_s(const TruncatedVector& xi, int q) {
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        const double w = q == 0 ? 1.0 : std::pow(static_cast<double>(i + 1), q);
        const double t = std::abs(xi(i)) * w;
        acc.add(t * t);
    }
    return std::sqrt(acc.value());
}

double norm_lambda(const TruncatedVector& xi, const WeightSequence& alpha, int q) {
    if (alpha.dim() < xi.size()) {
        throw DimensionMismatch("weight sequence dim " + std::to_string(alpha.dim()) +
                                " is shorter than vector dim " + std::to_string(xi.size()));
    }
    CompensatedSum acc;
    for (Eigen::Index i = 0; i < xi.size(); ++i) {
        const double w = q == 0 ? 1.0 : alpha.grade_weight(i + 1, q);
        const double t = std::abs(xi(i)) * w;
        acc.add(t * t);
    }
    return std::sqrt(acc.value());
}

double graded_norm(const TruncatedVector& xi, const GradedNormIndex& index,
                   const WeightSequence* alpha) {
    index.validate();
    switch (index.kind) {
        case GradedKind::Polynomial: return norm_s(xi, index.q);
        case GradedKind::DualPolynomial: return norm_s(xi, -index.q);
        case GradedKind::Exponential:
            if (alpha == nullptr) {
                throw std::invalid_argument("exponential grade needs a weight sequence");
            }
            return norm_lambda(xi, *alpha, index.q);
    }
    throw std::logic_error("unreachable graded kind");
}

GaugeValue nuclearity_gauge(const WeightSequence& alpha) {
    if (alpha.dim() < 2) throw std::invalid_argument("nuclearity gauge needs dim >= 2");
    GaugeValue g{-1.0, 0};
    for (Eigen::Index j = 2; j <= alpha.dim(); ++j) {
        const double v = std::log(static_cast<double>(j)) / alpha(j);
        if (v > g.value) g = {v, j};
    }
    return g;
}

NuclearityScan nuclearity_scan(const WeightSequence& alpha, std::span<const Eigen::Index> dims) {
    if (dims.empty()) throw std::invalid_argument("nuclearity scan needs a non-empty grid");
    NuclearityScan scan;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i > 0 && dims[i] <= dims[i - 1]) {
            throw std::invalid_argument("nuclearity scan grid must be strictly increasing");
        }
        scan.dims.push_back(dims[i]);
        scan.gauges.push_back(nuclearity_gauge(alpha.extended(dims[i])));
    }
    if (scan.gauges.size() >= 2) {
        const auto n = scan.gauges.size();
        const double g0 = scan.gauges[n - 2].value;
        const double g1 = scan.gauges[n - 1].value;
        const double decades = std::log10(static_cast<double>(scan.dims[n - 1]) /
                                          static_cast<double>(scan.dims[n - 2]));
        scan.growth_per_decade = (g1 / g0 - 1.0) / decades;
        scan.plateau = scan.growth_per_decade < kPlateauGrowth;
    } else {
        scan.plateau = false;
    }
    return scan;
}

GammaIndex gamma_index(const WeightSequence& alpha) {
    GammaIndex out;
    out.max_value = -1.0;
    for (Eigen::Index j = 1; j <= alpha.dim(); ++j) {
        const double a = alpha(j);
        if (a == 0.0) {
            throw std::domain_error("gamma index is infinite: alpha_" + std::to_string(j) +
                                    " = 0");
        }
        const double v = (1.0 + 2.0 * std::log(static_cast<double>(j))) / a;
        if (v > out.max_value) {
            out.max_value = v;
            out.argmax = j;
        }
    }
    out.gamma = std::max(1, static_cast<int>(std::ceil(out.max_value)));
    return out;
}

TruncatedVector unit_vector(Eigen::Index dim, Eigen::Index j) {
    if (j < 1 || j > dim) throw std::out_of_range("unit vector index outside 1..dim");
    TruncatedVector e = TruncatedVector::Zero(dim);
    e(j - 1) = 1.0;
    return e;
}

}  // namespace opstar::seqspace
