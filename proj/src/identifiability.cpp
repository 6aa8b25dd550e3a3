#include "optsamp/identifiability.hpp"

namespace optsamp {

IdentifiabilityReport check_identifiability(const FunctionalSet& set) {
    const Eigen::MatrixXd gamma = set.matrix();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gamma, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    const double cutoff = kRankCutoff * sv[0];

    IdentifiabilityReport report;
    const int n = set.dimension();
    for (int i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++report.rank;
    for (int i = report.rank; i < n; ++i)
        report.null_basis.push_back(svd.matrixV().col(i));
    return report;
}

} // namespace optsamp
