#pragma once

#include <Eigen/Dense>
#include <vector>

#include "optsamp/functional_set.hpp"

namespace optsamp {

struct IdentifiabilityReport {
    int rank = 0;
    /// Orthonormal directions along which mean shifts are undetectable.
    std::vector<Eigen::VectorXd> null_basis;

    bool identifiable(int dimension) const { return rank == dimension; }
};

/// Rank and null space of the stacked coefficient matrix. Rank is decided by
/// singular values with a relative cutoff of 1e-10.
IdentifiabilityReport check_identifiability(const FunctionalSet& set);

inline constexpr double kRankCutoff = 1e-10;

} // namespace optsamp
