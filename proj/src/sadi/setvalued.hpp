#pragma once

#include <vector>

#include "sadi/errors.hpp"
#include "sadi/vec.hpp"

namespace sadi {

/// Finitely generated convex set: the convex hull of its generators.
class ConvexValue {
public:
    explicit ConvexValue(std::vector<StateVector> generators)
        : gens_(std::move(generators)) {
        if (gens_.empty()) throw InternalError("ConvexValue: empty generator list");
        const std::size_t dim = gens_.front().size();
        for (const auto& g : gens_) {
            if (g.size() != dim) throw DimensionError("ConvexValue: mixed generator dimensions");
        }
    }

    const std::vector<StateVector>& generators() const { return gens_; }
    int dimension() const { return static_cast<int>(gens_.front().size()); }
    bool is_singleton() const { return gens_.size() == 1; }

private:
    std::vector<StateVector> gens_;
};

/// Parameters of the prioritized-queue mean field: arrival rates lambda_k,
/// service probabilities eta_k, and the derived displacement vectors
/// u_k = (lambda_1, ..., lambda_{k-1}, lambda_k - eta_k, lambda_{k+1}, ..., lambda_N).
class QueueMeanField {
public:
    QueueMeanField(StateVector lambda, StateVector eta);

    int dimension() const { return static_cast<int>(lambda_.size()); }
    const StateVector& lambda() const { return lambda_; }
    const StateVector& eta() const { return eta_; }
    const std::vector<StateVector>& u_vectors() const { return u_; }
    const StateVector& u(int k) const { return u_.at(static_cast<std::size_t>(k)); }

private:
    StateVector lambda_;
    StateVector eta_;
    std::vector<StateVector> u_;
};

struct StabilityReport {
    double load;  // sum of lambda_k / eta_k
    bool stable;  // load < 1
};

StabilityReport stability_check(const QueueMeanField& field);

/// Value of the queue mean-field map at x >= 0: {u_1} when x^1 > 0,
/// co(u_1..u_k) when the first k-1 coordinates vanish and x^k > 0, and the
/// closed hull co(lambda, u_1..u_N) of all nearby one-step displacements at
/// x = 0. A coordinate counts as zero only when it is exactly 0.0.
ConvexValue queue_map_eval(const QueueMeanField& field, const StateVector& x);

/// Euclidean projection of v onto the hull; unique by convexity. Active-set
/// quadratic solve over the hull weights, termination tolerance 1e-12.
StateVector project_onto_hull(const ConvexValue& value, const StateVector& v);

/// True iff v lies within tol of the hull.
bool hull_contains(const ConvexValue& value, const StateVector& v, double tol = 1e-9);

/// Element of minimal Euclidean norm (projection of the origin).
StateVector hull_least_norm(const ConvexValue& value);

}  // namespace sadi
