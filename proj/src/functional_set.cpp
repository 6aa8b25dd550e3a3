#include "optsamp/functional_set.hpp"

#include <algorithm>
#include <cmath>

namespace optsamp {

Functional::Functional(Eigen::VectorXd c, double cost_) : coeffs(std::move(c)), cost(cost_) {
    if (coeffs.size() == 0) throw ValidationError("functional: empty coefficient vector");
    if (coeffs.squaredNorm() <= 0.0)
        throw ValidationError("functional: coefficient vector must be nonzero");
    if (!coeffs.allFinite()) throw ValidationError("functional: non-finite coefficient");
    if (!(cost >= 0.0) || !std::isfinite(cost))
        throw ValidationError("functional: cost must be a nonnegative real");
}

double Functional::weighted_norm_sq(const Eigen::VectorXd& sigma_sq) const {
    return coeffs.cwiseProduct(sigma_sq).dot(coeffs);
}

FunctionalSet::FunctionalSet(std::vector<Functional> functionals)
    : functionals_(std::move(functionals)) {
    if (functionals_.empty()) throw ValidationError("functional set: empty");
    dimension_ = static_cast<int>(functionals_[0].coeffs.size());
    for (const auto& f : functionals_)
        if (f.coeffs.size() != dimension_)
            throw ValidationError("functional set: mixed dimensions");

    // Duplicate detection by exact coefficient comparison.
    std::vector<int> order(functionals_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    auto lex_less = [&](int a, int b) {
        const auto& u = functionals_[static_cast<size_t>(a)].coeffs;
        const auto& v = functionals_[static_cast<size_t>(b)].coeffs;
        for (int i = 0; i < dimension_; ++i) {
            if (u[i] != v[i]) return u[i] < v[i];
        }
        return false;
    };
    std::sort(order.begin(), order.end(), lex_less);
    for (size_t i = 1; i < order.size(); ++i) {
        if (!lex_less(order[i - 1], order[i]) && !lex_less(order[i], order[i - 1]))
            throw ValidationError("functional set: duplicate coefficient vector");
    }
}

Eigen::MatrixXd FunctionalSet::matrix() const {
    Eigen::MatrixXd gamma(size(), dimension_);
    for (int i = 0; i < size(); ++i) gamma.row(i) = functionals_[static_cast<size_t>(i)].coeffs;
    return gamma;
}

Eigen::VectorXd FunctionalSet::costs() const {
    Eigen::VectorXd c(size());
    for (int i = 0; i < size(); ++i) c[i] = functionals_[static_cast<size_t>(i)].cost;
    return c;
}

double FunctionalSet::min_norm_sq() const {
    double m = functionals_[0].norm_sq();
    for (const auto& f : functionals_) m = std::min(m, f.norm_sq());
    return m;
}

double FunctionalSet::max_norm_sq() const {
    double m = functionals_[0].norm_sq();
    for (const auto& f : functionals_) m = std::max(m, f.norm_sq());
    return m;
}

VarianceProfile::VarianceProfile(Eigen::VectorXd s) : sigma_sq(std::move(s)) {
    if (sigma_sq.size() == 0) throw ValidationError("variance profile: empty");
    for (int i = 0; i < sigma_sq.size(); ++i)
        if (!(sigma_sq[i] > 0.0) || !std::isfinite(sigma_sq[i]))
            throw ValidationError("variance profile: entries must be strictly positive");
}

SamplingDistribution::SamplingDistribution(Eigen::VectorXd weights) : weights_(std::move(weights)) {
    if (weights_.size() == 0) throw ValidationError("distribution: empty weight vector");
    double sum = 0.0;
    for (int i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i]))
            throw ValidationError("distribution: weights must be nonnegative reals");
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance)
        throw ValidationError("distribution: weights must sum to 1");
}

SamplingDistribution SamplingDistribution::uniform(int n) {
    if (n <= 0) throw ValidationError("distribution: size must be positive");
    return SamplingDistribution(Eigen::VectorXd::Constant(n, 1.0 / n));
}

SamplingDistribution SamplingDistribution::point_mass(int n, int index) {
    if (index < 0 || index >= n) throw ValidationError("distribution: point mass index out of range");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    w[index] = 1.0;
    return SamplingDistribution(std::move(w));
}

} // namespace optsamp
