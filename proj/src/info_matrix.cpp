#include "optsamp/info_matrix.hpp"

#include <cmath>

namespace optsamp {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kPsdTolerance = 1e-9;

} // namespace

InfoMatrix::InfoMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw ValidationError("info matrix: must be square and nonempty");
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale)
        throw ValidationError("info matrix: not symmetric");
    entries_ = ((entries_ + entries_.transpose()) / 2.0).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(entries_, Eigen::EigenvaluesOnly);
    eigenvalues_ = es.eigenvalues();
    const double max_eig = eigenvalues_[eigenvalues_.size() - 1];
    if (eigenvalues_[0] < -kPsdTolerance * std::max(max_eig, 0.0) - kSymmetryTolerance)
        throw ValidationError("info matrix: not positive semidefinite");
}

Objective::Objective(ObjectiveKind k, double tol) : kind(k), rank_tolerance(tol) {
    if (!(rank_tolerance > 0.0) || !(rank_tolerance < 1.0))
        throw ValidationError("objective: rank tolerance must lie in (0, 1)");
}

InfoMatrix build_info_matrix(const FunctionalSet& set, const SamplingDistribution& dist,
                             const VarianceProfile& vars) {
    if (dist.size() != set.size())
        throw ValidationError("build_info_matrix: distribution does not match set size");
    if (vars.sigma_sq.size() != set.dimension())
        throw ValidationError("build_info_matrix: variance profile dimension mismatch");
    const int n = set.dimension();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < set.size(); ++i) {
        const double w = dist[i];
        if (w == 0.0) continue;
        const auto& x = set[i].coeffs;
        m.noalias() += (w / set[i].weighted_norm_sq(vars.sigma_sq)) * (x * x.transpose());
    }
    return InfoMatrix(std::move(m));
}

InfoMatrix build_info_matrix(const FunctionalSet& set, const SamplingDistribution& dist) {
    return build_info_matrix(set, dist, VarianceProfile::unit(set.dimension()));
}

InfoMatrix build_f_matrix(const FunctionalSet& set, const SamplingDistribution& dist) {
    if (dist.size() != set.size())
        throw ValidationError("build_f_matrix: distribution does not match set size");
    const int n = set.dimension();
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < set.size(); ++i) {
        const double w = dist[i];
        if (w == 0.0) continue;
        const auto& x = set[i].coeffs;
        f.noalias() += w * (x * x.transpose());
    }
    return InfoMatrix(std::move(f));
}

double objective_value(const InfoMatrix& m, const Objective& obj) {
    const Eigen::VectorXd& eig = m.eigenvalues();
    const double cutoff = obj.rank_tolerance * std::max(m.max_eigenvalue(), 0.0);
    switch (obj.kind) {
    case ObjectiveKind::ATrace: {
        if (m.min_eigenvalue() <= cutoff)
            throw InfeasibleError(
                "objective: matrix is singular under a-trace; unidentifiable design, "
                "use a-pseudo-trace");
        return eig.cwiseInverse().sum();
    }
    case ObjectiveKind::APseudoTrace: {
        double total = 0.0;
        for (int i = 0; i < eig.size(); ++i)
            if (eig[i] > cutoff) total += 1.0 / eig[i];
        return total;
    }
    case ObjectiveKind::EMinEig:
        return m.min_eigenvalue();
    }
    throw ValidationError("objective: unknown kind");
}

Eigen::VectorXd objective_gradient(const FunctionalSet& set, const SamplingDistribution& dist,
                                   const VarianceProfile& vars, const Objective& obj) {
    if (dist.size() != set.size())
        throw ValidationError("objective_gradient: distribution does not match set size");
    if (vars.sigma_sq.size() != set.dimension())
        throw ValidationError("objective_gradient: variance profile dimension mismatch");
    Eigen::VectorXd g(set.size());

    if (obj.kind == ObjectiveKind::EMinEig) {
        const InfoMatrix f = build_f_matrix(set, dist);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f.entries());
        const Eigen::VectorXd u = es.eigenvectors().col(0);
        for (int i = 0; i < set.size(); ++i) {
            const double d = u.dot(set[i].coeffs);
            g[i] = d * d;
        }
        return g;
    }

    const InfoMatrix m = build_info_matrix(set, dist, vars);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.entries());
    const Eigen::VectorXd& eig = es.eigenvalues();
    const double cutoff = obj.rank_tolerance * std::max(eig[eig.size() - 1], 0.0);
    if (obj.kind == ObjectiveKind::ATrace && eig[0] <= cutoff)
        throw InfeasibleError("objective_gradient: singular matrix under a-trace");

    // d tr(M^+)/dp_i = -x' M^+ M^+ x / sigma_F^2(x); plain inverse when nonsingular.
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(eig.size());
    for (int i = 0; i < eig.size(); ++i)
        if (eig[i] > cutoff) inv[i] = 1.0 / eig[i];
    const Eigen::MatrixXd pinv =
        es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
    for (int i = 0; i < set.size(); ++i) {
        const auto& x = set[i].coeffs;
        const Eigen::VectorXd y = pinv * x;
        g[i] = -y.squaredNorm() / set[i].weighted_norm_sq(vars.sigma_sq);
    }
    return g;
}

} // namespace optsamp
