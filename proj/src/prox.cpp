#include "sadi/prox.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace sadi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double soft_threshold(double z, double tau) {
    if (z > tau) return z - tau;
    if (z < -tau) return z + tau;
    return 0.0;
}

void require_gamma(double gamma, const char* what) {
    if (!(gamma > 0.0)) throw ParameterError(std::string(what) + ": gamma must be positive");
}

}  // namespace

StateVector Matrix::apply(const StateVector& x) const {
    if (static_cast<int>(x.size()) != cols) throw DimensionError("Matrix::apply: dimension mismatch");
    StateVector y(static_cast<std::size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < cols; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = s;
    }
    return y;
}

ConvexFunctionSpec ConvexFunctionSpec::zero() {
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::zero;
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::weighted_l1(StateVector weights) {
    for (double w : weights) {
        if (!(w > 0.0)) throw ParameterError("weighted_l1: weights must be positive");
    }
    if (weights.empty()) throw ParameterError("weighted_l1: empty weight vector");
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::weighted_l1;
    s.weights_ = std::move(weights);
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::l1(double weight) {
    if (!(weight > 0.0)) throw ParameterError("l1: weight must be positive");
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::weighted_l1;
    s.uniform_l1_ = true;
    s.scale_ = weight;
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::squared_l2(double scale) {
    if (!(scale > 0.0)) throw ParameterError("squared_l2: scale must be positive");
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::squared_l2;
    s.scale_ = scale;
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::box_indicator(StateVector lower, StateVector upper) {
    require_same_dim(lower, upper, "box_indicator");
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (!(lower[i] <= upper[i])) throw ParameterError("box_indicator: bounds out of order");
    }
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::box_indicator;
    s.lower_ = std::move(lower);
    s.upper_ = std::move(upper);
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::nonneg_indicator() {
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::nonneg_indicator;
    return s;
}

ConvexFunctionSpec ConvexFunctionSpec::custom(ValueFn value, SubgradFn subgradient) {
    if (!value || !subgradient) throw ParameterError("custom: both oracles are required");
    ConvexFunctionSpec s;
    s.kind_ = ConvexKind::custom;
    s.value_fn_ = std::move(value);
    s.subgrad_fn_ = std::move(subgradient);
    return s;
}

double ConvexFunctionSpec::l1_weight_at(std::size_t i) const {
    if (uniform_l1_) return scale_;
    if (i >= weights_.size()) throw DimensionError("weighted_l1: coordinate beyond weights");
    return weights_[i];
}

double ConvexFunctionSpec::value(const StateVector& x) const {
    switch (kind_) {
        case ConvexKind::zero:
            return 0.0;
        case ConvexKind::weighted_l1: {
            if (!uniform_l1_ && x.size() != weights_.size()) {
                throw DimensionError("weighted_l1: dimension mismatch");
            }
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) s += l1_weight_at(i) * std::abs(x[i]);
            return s;
        }
        case ConvexKind::squared_l2:
            return 0.5 * scale_ * norm2(x);
        case ConvexKind::box_indicator: {
            require_same_dim(x, lower_, "box_indicator::value");
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] < lower_[i] || x[i] > upper_[i]) return kInf;
            }
            return 0.0;
        }
        case ConvexKind::nonneg_indicator:
            for (double v : x) {
                if (v < 0.0) return kInf;
            }
            return 0.0;
        case ConvexKind::custom: {
            const double v = value_fn_(x);
            if (std::isnan(v)) throw OracleError("custom value oracle returned NaN");
            return v;
        }
    }
    throw InternalError("ConvexFunctionSpec::value: unknown kind");
}

StateVector ConvexFunctionSpec::subgradient_oracle(const StateVector& x) const {
    if (kind_ != ConvexKind::custom) return least_norm_subgradient(*this, x);
    StateVector g = subgrad_fn_(x);
    if (g.size() != x.size()) throw OracleError("custom subgradient oracle: dimension mismatch");
    if (!all_finite(g)) throw OracleError("custom subgradient oracle: non-finite value");
    return g;
}

double ConvexFunctionSpec::prox1d(int i, double gamma, double z) const {
    switch (kind_) {
        case ConvexKind::zero:
            return z;
        case ConvexKind::weighted_l1:
            return soft_threshold(z, gamma * l1_weight_at(static_cast<std::size_t>(i)));
        case ConvexKind::squared_l2:
            return z / (1.0 + gamma * scale_);
        case ConvexKind::box_indicator:
            return std::clamp(z, lower_.at(static_cast<std::size_t>(i)),
                              upper_.at(static_cast<std::size_t>(i)));
        case ConvexKind::nonneg_indicator:
            return std::max(z, 0.0);
        case ConvexKind::custom:
            throw ParameterError("prox1d: custom kind is not separable");
    }
    throw InternalError("prox1d: unknown kind");
}

std::vector<double> ConvexFunctionSpec::prox1d_kinks(int i, double gamma) const {
    switch (kind_) {
        case ConvexKind::zero:
        case ConvexKind::squared_l2:
            return {};
        case ConvexKind::weighted_l1: {
            const double tau = gamma * l1_weight_at(static_cast<std::size_t>(i));
            return {-tau, tau};
        }
        case ConvexKind::box_indicator:
            return {lower_.at(static_cast<std::size_t>(i)), upper_.at(static_cast<std::size_t>(i))};
        case ConvexKind::nonneg_indicator:
            return {0.0};
        case ConvexKind::custom:
            throw ParameterError("prox1d_kinks: custom kind is not separable");
    }
    throw InternalError("prox1d_kinks: unknown kind");
}

namespace {

// Accelerated gradient with backtracking on phi(y) = gamma*r(y) + 0.5|y-x|^2,
// treating the subgradient oracle as a gradient. Converges fast when r is
// smooth; a genuinely nonsmooth custom r hits the iteration cap and errors.
StateVector prox_custom(const ConvexFunctionSpec& r, double gamma, const StateVector& x) {
    constexpr int kMaxIter = 100000;
    constexpr double kTol = 1e-12;

    auto grad_phi = [&](const StateVector& y) {
        StateVector g = r.subgradient_oracle(y);
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = gamma * g[i] + (y[i] - x[i]);
        return g;
    };
    auto phi = [&](const StateVector& y) {
        double q = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double d = y[i] - x[i];
            q += 0.5 * d * d;
        }
        return gamma * r.value(y) + q;
    };

    StateVector y = x;
    StateVector z = x;  // momentum point
    double theta = 1.0;
    double lr = 1.0;
    double phi_prev = phi(y);
    for (int it = 0; it < kMaxIter; ++it) {
        StateVector g = grad_phi(z);
        const double gn = norm(g);
        if (gn <= kTol * (1.0 + norm(z))) return z;

        // Backtracking from the momentum point.
        StateVector y_next;
        const double phi_z = phi(z);
        for (int bt = 0;; ++bt) {
            y_next = axpy(z, -lr, g);
            if (phi(y_next) <= phi_z - 0.5 * lr * gn * gn || bt >= 60) break;
            lr *= 0.5;
        }
        const double theta_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
        const double mom = (theta - 1.0) / theta_next;
        z = y_next;
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += mom * (y_next[i] - y[i]);
        const double phi_y = phi(y_next);
        if (phi_y > phi_prev) {  // restart momentum on objective increase
            z = y_next;
            theta = 1.0;
        } else {
            theta = theta_next;
        }
        phi_prev = phi_y;
        y = y_next;
        lr *= 1.5;
    }
    throw OracleError("prox: inner solver hit the iteration cap before reaching tolerance");
}

}  // namespace

StateVector prox(const ConvexFunctionSpec& r, double gamma, const StateVector& x) {
    require_gamma(gamma, "prox");
    if (r.kind_ == ConvexKind::custom) return prox_custom(r, gamma, x);
    StateVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = r.prox1d(static_cast<int>(i), gamma, x[i]);
    }
    return y;
}

StateVector moreau_gradient(const ConvexFunctionSpec& r, double gamma, const StateVector& x) {
    require_gamma(gamma, "moreau_gradient");
    StateVector p = prox(r, gamma, x);
    StateVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = (x[i] - p[i]) / gamma;
    return g;
}

StateVector least_norm_subgradient(const ConvexFunctionSpec& r, const StateVector& x) {
    switch (r.kind_) {
        case ConvexKind::zero:
            return StateVector(x.size(), 0.0);
        case ConvexKind::weighted_l1: {
            StateVector g(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double w = r.l1_weight_at(i);
                g[i] = x[i] > 0.0 ? w : (x[i] < 0.0 ? -w : 0.0);
            }
            return g;
        }
        case ConvexKind::squared_l2:
            return scaled(x, r.scale_);
        case ConvexKind::box_indicator: {
            require_same_dim(x, r.lower_, "least_norm_subgradient");
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] < r.lower_[i] || x[i] > r.upper_[i]) {
                    throw DomainError("least_norm_subgradient: point outside the box");
                }
            }
            // The normal cone at any point of the box contains 0.
            return StateVector(x.size(), 0.0);
        }
        case ConvexKind::nonneg_indicator:
            for (double v : x) {
                if (v < 0.0) throw DomainError("least_norm_subgradient: negative coordinate");
            }
            return StateVector(x.size(), 0.0);
        case ConvexKind::custom:
            return r.subgradient_oracle(x);
    }
    throw InternalError("least_norm_subgradient: unknown kind");
}

MonotoneOperatorSpec MonotoneOperatorSpec::subdifferential(ConvexFunctionSpec r) {
    MonotoneOperatorSpec s;
    s.kind_ = Kind::subdifferential;
    s.fn_ = std::move(r);
    return s;
}

MonotoneOperatorSpec MonotoneOperatorSpec::affine(Matrix m, StateVector offset) {
    if (m.rows != m.cols) throw ParameterError("affine operator: matrix must be square");
    if (static_cast<int>(offset.size()) != m.rows) {
        throw DimensionError("affine operator: offset dimension mismatch");
    }
    Eigen::MatrixXd mm(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) mm(i, j) = m(i, j);
    }
    Eigen::MatrixXd sym = 0.5 * (mm + mm.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw ParameterError("affine operator: M + M^T is not positive semidefinite");
    }
    MonotoneOperatorSpec s;
    s.kind_ = Kind::affine;
    s.m_ = std::move(m);
    s.b_ = std::move(offset);
    return s;
}

StateVector resolvent(const MonotoneOperatorSpec& a, double gamma, const StateVector& x) {
    require_gamma(gamma, "resolvent");
    if (a.kind() == MonotoneOperatorSpec::Kind::subdifferential) {
        return prox(a.function(), gamma, x);
    }
    const Matrix& m = a.matrix();
    if (static_cast<int>(x.size()) != m.rows) {
        throw DimensionError("resolvent: dimension mismatch");
    }
    Eigen::MatrixXd lhs(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) lhs(i, j) = gamma * m(i, j) + (i == j ? 1.0 : 0.0);
    }
    Eigen::VectorXd rhs(m.rows);
    for (int i = 0; i < m.rows; ++i) rhs(i) = x[static_cast<std::size_t>(i)] - gamma * a.offset()[static_cast<std::size_t>(i)];
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(lhs);
    Eigen::VectorXd y = lu.solve(rhs);
    if (!y.allFinite()) throw InternalError("resolvent: singular linear system");
    return StateVector(y.data(), y.data() + y.size());
}

StateVector yosida(const MonotoneOperatorSpec& a, double gamma, const StateVector& x) {
    require_gamma(gamma, "yosida");
    StateVector j = resolvent(a, gamma, x);
    StateVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] - j[i]) / gamma;
    return y;
}

}  // namespace sadi
