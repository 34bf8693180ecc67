#include "sadi/setvalued.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sadi {

QueueMeanField::QueueMeanField(StateVector lambda, StateVector eta)
    : lambda_(std::move(lambda)), eta_(std::move(eta)) {
    if (lambda_.empty() || lambda_.size() != eta_.size()) {
        throw DimensionError("QueueMeanField: lambda/eta dimension mismatch");
    }
    for (double l : lambda_) {
        if (!(l > 0.0)) throw ParameterError("QueueMeanField: arrival rates must be positive");
    }
    for (double e : eta_) {
        if (!(e > 0.0) || e > 1.0) {
            throw ParameterError("QueueMeanField: service probabilities must lie in (0,1]");
        }
    }
    const std::size_t n = lambda_.size();
    u_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        StateVector u = lambda_;
        u[k] -= eta_[k];
        u_.push_back(std::move(u));
    }
}

StabilityReport stability_check(const QueueMeanField& field) {
    double load = 0.0;
    for (int k = 0; k < field.dimension(); ++k) {
        load += field.lambda()[k] / field.eta()[k];
    }
    return {load, load < 1.0};
}

ConvexValue queue_map_eval(const QueueMeanField& field, const StateVector& x) {
    if (static_cast<int>(x.size()) != field.dimension()) {
        throw DimensionError("queue_map_eval: state dimension mismatch");
    }
    int first_positive = -1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0) throw DomainError("queue_map_eval: negative coordinate");
        if (x[i] > 0.0 && first_positive < 0) first_positive = static_cast<int>(i);
    }
    std::vector<StateVector> gens;
    if (first_positive < 0) {
        // At the origin every one-step displacement in a shrinking neighborhood
        // is either the arrival vector or some u_k; the map takes their closed
        // hull so 0 is stationary exactly under the stability condition.
        gens.reserve(x.size() + 1);
        gens.push_back(field.lambda());
        for (const auto& u : field.u_vectors()) gens.push_back(u);
    } else {
        gens.reserve(static_cast<std::size_t>(first_positive) + 1);
        for (int k = 0; k <= first_positive; ++k) gens.push_back(field.u(k));
    }
    return ConvexValue(std::move(gens));
}

namespace {

// Equality-constrained least squares on the support: minimize |W theta - v|^2
// subject to sum(theta) = 1. Rank-deficient KKT systems (duplicate
// generators) are resolved by the minimum-norm solution.
Eigen::VectorXd solve_support(const std::vector<StateVector>& gens,
                              const std::vector<int>& support, const StateVector& v) {
    const int m = static_cast<int>(support.size());
    const int dim = static_cast<int>(v.size());
    Eigen::MatrixXd W(dim, m);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < dim; ++i) W(i, j) = gens[static_cast<std::size_t>(support[j])][i];
    }
    Eigen::VectorXd rhs(m + 1);
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    kkt.topLeftCorner(m, m) = W.transpose() * W;
    kkt.topRightCorner(m, 1).setOnes();
    kkt.bottomLeftCorner(1, m).setOnes();
    Eigen::Map<const Eigen::VectorXd> vv(v.data(), dim);
    rhs.head(m) = W.transpose() * vv;
    rhs(m) = 1.0;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(kkt);
    Eigen::VectorXd sol = cod.solve(rhs);
    return sol.head(m);
}

}  // namespace

StateVector project_onto_hull(const ConvexValue& value, const StateVector& v) {
    const auto& gens = value.generators();
    if (static_cast<int>(v.size()) != value.dimension()) {
        throw DimensionError("project_onto_hull: dimension mismatch");
    }
    const int n = static_cast<int>(gens.size());
    if (n == 1) return gens.front();

    // Start from the nearest vertex.
    int best = 0;
    double best_d = distance(gens[0], v);
    for (int i = 1; i < n; ++i) {
        const double d = distance(gens[static_cast<std::size_t>(i)], v);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    std::vector<int> support{best};
    std::vector<double> weights{1.0};  // weights over `support`, feasible at all times

    double gen_scale = 0.0;
    for (const auto& g : gens) gen_scale = std::max(gen_scale, norm(g));
    const double tol_opt = 1e-12 * (1.0 + norm(v) + gen_scale) * (1.0 + gen_scale);
    const int max_iter = 64 * (n + 1);

    StateVector p(v.size(), 0.0);
    for (int iter = 0; iter < max_iter; ++iter) {
        Eigen::VectorXd target = solve_support(gens, support, v);

        const double min_w = target.minCoeff();
        if (min_w < -1e-13) {
            // Step from the current feasible weights toward the target until the
            // first coordinate hits zero, then drop it from the support.
            double alpha = 1.0;
            int drop = -1;
            for (std::size_t j = 0; j < support.size(); ++j) {
                const double tj = target(static_cast<Eigen::Index>(j));
                if (tj < 0.0 && weights[j] > tj) {
                    const double a = weights[j] / (weights[j] - tj);
                    if (a < alpha) {
                        alpha = a;
                        drop = static_cast<int>(j);
                    }
                }
            }
            for (std::size_t j = 0; j < support.size(); ++j) {
                weights[j] += alpha * (target(static_cast<Eigen::Index>(j)) - weights[j]);
            }
            if (drop >= 0) {
                support.erase(support.begin() + drop);
                weights.erase(weights.begin() + drop);
            }
            continue;
        }

        weights.assign(target.data(), target.data() + target.size());
        for (double& w : weights) w = std::max(w, 0.0);

        std::fill(p.begin(), p.end(), 0.0);
        for (std::size_t j = 0; j < support.size(); ++j) {
            const auto& g = gens[static_cast<std::size_t>(support[j])];
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += weights[j] * g[i];
        }

        // Optimality: <v - p, w - p> <= 0 for every generator w.
        double worst = -1.0;
        int enter = -1;
        for (int i = 0; i < n; ++i) {
            if (std::find(support.begin(), support.end(), i) != support.end()) continue;
            double viol = 0.0;
            const auto& g = gens[static_cast<std::size_t>(i)];
            for (std::size_t c = 0; c < p.size(); ++c) viol += (v[c] - p[c]) * (g[c] - p[c]);
            if (viol > worst) {
                worst = viol;
                enter = i;
            }
        }
        if (enter < 0 || worst <= tol_opt) return p;
        support.push_back(enter);
        weights.push_back(0.0);
    }
    return p;  // iteration cap: current point is feasible and near-optimal
}

bool hull_contains(const ConvexValue& value, const StateVector& v, double tol) {
    if (!(tol > 0.0)) throw ParameterError("hull_contains: tol must be positive");
    return distance(project_onto_hull(value, v), v) <= tol;
}

StateVector hull_least_norm(const ConvexValue& value) {
    return project_onto_hull(value, StateVector(static_cast<std::size_t>(value.dimension()), 0.0));
}

}  // namespace sadi
