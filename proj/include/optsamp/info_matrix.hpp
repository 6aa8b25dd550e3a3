#pragma once

#include <Eigen/Dense>

#include "optsamp/functional_set.hpp"

namespace optsamp {

/// Symmetric positive semidefinite design matrix together with its spectrum.
/// Covers both the normalized information matrix M and the raw second-moment
/// matrix F.
class InfoMatrix {
public:
    explicit InfoMatrix(Eigen::MatrixXd entries);

    int dimension() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXd& entries() const { return entries_; }
    /// Ascending eigenvalues.
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    double min_eigenvalue() const { return eigenvalues_[0]; }
    double max_eigenvalue() const { return eigenvalues_[eigenvalues_.size() - 1]; }

private:
    Eigen::MatrixXd entries_;
    Eigen::VectorXd eigenvalues_;
};

enum class ObjectiveKind {
    ATrace,       ///< tr(M^-1), minimized; errors on singular matrices
    APseudoTrace, ///< sum of 1/lambda over eigenvalues above the rank cutoff, minimized
    EMinEig,      ///< smallest eigenvalue, maximized
};

struct Objective {
    ObjectiveKind kind = ObjectiveKind::ATrace;
    /// Relative eigenvalue cutoff separating "zero" from "nonzero" spectrum.
    double rank_tolerance = 1e-9;

    Objective() = default;
    Objective(ObjectiveKind k, double tol = 1e-9);

    bool minimizes() const { return kind != ObjectiveKind::EMinEig; }
};

/// M = sum_x p(x) / (x' diag(sigma^2) x) * x x'.
InfoMatrix build_info_matrix(const FunctionalSet& set, const SamplingDistribution& dist,
                             const VarianceProfile& vars);
InfoMatrix build_info_matrix(const FunctionalSet& set, const SamplingDistribution& dist);

/// F = sum_x p(x) * x x', the un-normalized second-moment matrix.
InfoMatrix build_f_matrix(const FunctionalSet& set, const SamplingDistribution& dist);

/// Scalar score of a design matrix under the requested criterion. ATrace on a
/// matrix whose smallest eigenvalue falls under the rank cutoff raises
/// InfeasibleError; APseudoTrace is the rank-deficient fallback.
double objective_value(const InfoMatrix& m, const Objective& obj);

/// Gradient (supergradient for EMinEig) of the objective with respect to the
/// distribution weights. A-objectives differentiate through M, EMinEig through F.
Eigen::VectorXd objective_gradient(const FunctionalSet& set, const SamplingDistribution& dist,
                                   const VarianceProfile& vars, const Objective& obj);

} // namespace optsamp
