#pragma once

#include <Eigen/Dense>
#include <vector>

#include "optsamp/errors.hpp"

namespace optsamp {

/// One measurable linear combination: a coefficient vector plus an optional
/// sampling cost used by the budgeted solver.
struct Functional {
    Eigen::VectorXd coeffs;
    double cost = 1.0;

    Functional() = default;
    explicit Functional(Eigen::VectorXd c, double cost_ = 1.0);

    /// x' diag(sigma_sq) x, the variance of the induced measurement.
    double weighted_norm_sq(const Eigen::VectorXd& sigma_sq) const;
    double norm_sq() const { return coeffs.squaredNorm(); }
};

/// An ordered collection of candidate functionals over a common dimension.
/// Duplicate coefficient vectors are rejected so that distribution indices
/// stay unambiguous.
class FunctionalSet {
public:
    explicit FunctionalSet(std::vector<Functional> functionals);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(functionals_.size()); }
    const Functional& operator[](int i) const { return functionals_[static_cast<size_t>(i)]; }
    const std::vector<Functional>& functionals() const { return functionals_; }

    /// Rows are the coefficient vectors, in set order.
    Eigen::MatrixXd matrix() const;
    Eigen::VectorXd costs() const;

    double min_norm_sq() const;
    double max_norm_sq() const;

private:
    std::vector<Functional> functionals_;
    int dimension_ = 0;
};

/// Per-coordinate measurement variances; all-ones by default.
struct VarianceProfile {
    Eigen::VectorXd sigma_sq;

    explicit VarianceProfile(Eigen::VectorXd s);
    static VarianceProfile unit(int n) { return VarianceProfile(Eigen::VectorXd::Ones(n)); }
};

/// A point of the probability simplex aligned with a FunctionalSet's order.
class SamplingDistribution {
public:
    explicit SamplingDistribution(Eigen::VectorXd weights);
    static SamplingDistribution uniform(int n);
    static SamplingDistribution point_mass(int n, int index);

    int size() const { return static_cast<int>(weights_.size()); }
    double operator[](int i) const { return weights_[i]; }
    const Eigen::VectorXd& weights() const { return weights_; }

private:
    Eigen::VectorXd weights_;
};

inline constexpr double kSimplexTolerance = 1e-12;

} // namespace optsamp
