#include "cfusion/constraints.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace cfusion {

namespace {
constexpr double kRankTol = 1e-10;
}

void LinearConstraint::validate() const {
    if (A.rows() < 1 || A.cols() < 1) throw std::invalid_argument("LinearConstraint: empty matrix");
    if (A.rows() != c.size()) throw std::invalid_argument("LinearConstraint: A and c disagree in size");
    if (A.rows() > A.cols()) throw std::invalid_argument("LinearConstraint: more rows than columns");
    Eigen::JacobiSVD<Mat> svd(A);
    const Vec& s = svd.singularValues();
    if (!(s[s.size() - 1] > kRankTol * s[0])) {
        throw std::invalid_argument("LinearConstraint: A is not of full row rank");
    }
}

void SphereConstraint::validate() const {
    if (center.size() < 2) throw std::invalid_argument("SphereConstraint: dimension must be >= 2");
    if (!(radius > 0.0)) throw std::invalid_argument("SphereConstraint: radius must be positive");
}

bool GeneralConstraint::satisfied(const Vec& y) const {
    return h(y).lpNorm<Eigen::Infinity>() <= tolerance;
}

LinearConstraint sum_constraint(int m, int d, const Vec& s) {
    if (m < 1 || d < 1 || s.size() != d) throw std::invalid_argument("sum_constraint: bad sizes");
    LinearConstraint lc{Mat::Zero(d, m * d), s};
    for (int i = 0; i < m; ++i) lc.A.block(0, i * d, d, d).setIdentity();
    return lc;
}

std::optional<Vec> newton_project(const GeneralConstraint& g, const Vec& seed, int max_iter) {
    Vec y = seed;
    for (int it = 0; it < max_iter; ++it) {
        const Vec r = g.h(y);
        if (!r.allFinite()) return std::nullopt;
        if (r.lpNorm<Eigen::Infinity>() <= g.tolerance) return y;
        const Mat J = g.jacobian(y);
        const Mat JJt = J * J.transpose();
        Eigen::LDLT<Mat> ldlt(JJt);
        if (ldlt.info() != Eigen::Success) return std::nullopt;
        y -= J.transpose() * ldlt.solve(r);
    }
    return g.satisfied(y) ? std::optional<Vec>(y) : std::nullopt;
}

GaussianLinearSampler::GaussianLinearSampler(LinearConstraint constraint, Vec variances)
    : con_(std::move(constraint)) {
    con_.validate();
    if (variances.size() != con_.A.cols() || !(variances.array() > 0.0).all()) {
        throw std::invalid_argument("GaussianLinearSampler: variances must be positive, one per column");
    }
    sd_ = variances.array().sqrt();
    const Mat B = con_.A * sd_.asDiagonal();
    Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
    w_ = svd.singularValues();
    if (!(w_[w_.size() - 1] >= kRankTol * w_[0])) {
        throw std::invalid_argument("GaussianLinearSampler: constraint is rank deficient");
    }
    P_ = svd.matrixU();
    Q_ = svd.matrixV();
}

GaussianLinearSampler::GaussianLinearSampler(LinearConstraint constraint)
    : GaussianLinearSampler(constraint, Vec::Ones(constraint.A.cols())) {}

Vec GaussianLinearSampler::rotated_residual(const Vec& x) const {
    return (P_.transpose() * (con_.c - con_.A * x)).cwiseQuotient(w_);
}

Vec GaussianLinearSampler::sample(const Vec& x, double T, Rng& rng) const {
    if (!(T > 0.0)) throw std::invalid_argument("GaussianLinearSampler: T must be positive");
    const Eigen::Index n = Q_.rows();
    const Eigen::Index k = w_.size();
    const double st = std::sqrt(T);
    Vec zeta(n);
    zeta.head(k) = rotated_residual(x) / st;
    for (Eigen::Index i = k; i < n; ++i) zeta[i] = rng.normal();
    return x + st * sd_.cwiseProduct(Q_ * zeta);
}

double GaussianLinearSampler::log_acceptance_weight(const Vec& x, double T) const {
    return -0.5 * rotated_residual(x).squaredNorm() / T;
}

double GaussianLinearSampler::acceptance_weight(const Vec& x, double T) const {
    return std::exp(log_acceptance_weight(x, T));
}

Vec sample_gaussian_linear(const Vec& x, double T, const LinearConstraint& constraint, Rng& rng) {
    return GaussianLinearSampler(constraint).sample(x, T, rng);
}

double linear_acceptance_weight(const Vec& x, double T, const LinearConstraint& constraint) {
    return GaussianLinearSampler(constraint).acceptance_weight(x, T);
}

}  // namespace cfusion
