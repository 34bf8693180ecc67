#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "sadi/core.hpp"
#include "sadi/prox.hpp"
#include "sadi/rng.hpp"
#include "sadi/setvalued.hpp"

namespace sadi {

/// One Markov transition family indexed by the step size: a sampler for
/// x -> x + gamma*h(xi, x) plus a drift oracle. Immutable after construction;
/// each chain owns its own noise stream.
struct Kernel {
    int dimension = 0;
    std::string name;
    /// Draws one transition from x at step gamma using the given stream.
    std::function<StateVector(const StateVector&, double, RngStream&)> sample_step;
    /// Exact drift oracle (expected displacement per unit step); null when only
    /// Monte Carlo estimates are available.
    std::function<StateVector(const StateVector&, double)> drift;
    /// Domain check (e.g. grid membership for the queue chain); null = all of R^N.
    std::function<void(const StateVector&, double)> check_domain;
};

/// Composite stochastic minimization problem: random smooth losses plus a
/// convex regularizer.
struct ProxSgdProblem {
    int dimension = 0;
    std::string name;
    /// Gradient of one sampled loss at x (fresh sample per call).
    std::function<StateVector(const StateVector&, RngStream&)> sample_gradient;
    /// Gradient of the mean loss.
    std::function<StateVector(const StateVector&)> mean_gradient;
    /// Value of the mean loss (needed by the Lyapunov constructions).
    std::function<double(const StateVector&)> mean_value;
    /// Lipschitz constant of the mean gradient.
    double lipschitz = 1.0;
    ConvexFunctionSpec regularizer = ConvexFunctionSpec::zero();

    /// Known stationary point (zero of mean_gradient + subdifferential), when available.
    std::optional<StateVector> stationary_point;
    /// Known minimum of mean loss + regularizer, when available.
    std::optional<double> min_value;
    /// Closed-form gradient-deviation variance E|grad_sample - grad_mean|^2, when available.
    std::function<double(const StateVector&)> variance_w;

    /// Set for the Gaussian quadratic family l(s,x) = 0.5|x-s|^2, s ~ N(m, sigma^2 I):
    /// enables the quadrature drift oracle.
    struct GaussianQuadratic {
        StateVector m;
        double sigma;
    };
    std::optional<GaussianQuadratic> gaussian;
};

/// l(s,x) = 0.5*|x-s|^2 with s ~ N(m, sigma^2 I) and r = rho*||.||_1.
/// Stationary set: the soft-thresholding of m at rho.
ProxSgdProblem canonical_prox_sgd(StateVector m, double sigma, double rho);

/// Exploration variant with random indefinite quadratic losses
/// l(s,x) = 0.5 (x-m)^T (Q + s D)(x-m), s ~ N(0, sigma^2), Q positive definite,
/// D indefinite. The mean loss is the convex quadratic with matrix Q.
ProxSgdProblem indefinite_quadratic_prox_sgd(StateVector m, Matrix q, Matrix d, double sigma,
                                             ConvexFunctionSpec regularizer);

enum class ArrivalLaw { bernoulli, poisson };

/// Prioritized fluid-scaled queue chain.
struct QueueChainSpec {
    QueueMeanField field;
    ArrivalLaw arrivals = ArrivalLaw::bernoulli;
};

/// Stochastic proximal point iteration over random monotone operators.
struct SppSpec {
    int dimension = 0;
    std::string name;
    std::function<MonotoneOperatorSpec(RngStream&)> sample_operator;
    /// Exact drift oracle when the law admits one; null otherwise.
    std::function<StateVector(const StateVector&, double)> exact_drift;
    /// Known zero of the mean operator, when available.
    std::optional<StateVector> mean_zero;
};

/// A(s, x) = x - s with s ~ N(m, sigma^2 I); mean operator x - m, zero at m.
SppSpec spp_gaussian_shift(StateVector m, double sigma);
/// Scalar A(s, .) = d|. - s| with s drawn uniformly from two points.
SppSpec spp_two_point_abs(double s_minus, double s_plus);
/// Deterministic affine operator.
SppSpec spp_affine(Matrix m, StateVector b);

Kernel kernel_prox_sgd(const ProxSgdProblem& p);
Kernel kernel_queue(const QueueChainSpec& q);
Kernel kernel_spp(const SppSpec& s);

/// One sampled transition direction h(xi, x) of the composite-gradient chain,
/// together with the sampled gradient that produced it.
struct ProxSgdSample {
    StateVector gradient;   // grad of the sampled loss at x
    StateVector direction;  // (prox step - x) / gamma
};
ProxSgdSample sample_prox_sgd_direction(const ProxSgdProblem& p, const StateVector& x,
                                        double gamma, RngStream& stream);

/// Monte Carlo drift estimate: sample mean of (step(x) - x)/gamma over
/// `samples` fresh draws, with per-coordinate standard errors.
struct DriftEstimate {
    StateVector mean;
    StateVector standard_error;
};
DriftEstimate drift_estimate(const Kernel& k, const StateVector& x, const StepSize& step,
                             int samples, RngStream& stream);

/// Runs n steps from a under the stream derived from `seed`; the result is a
/// deterministic function of (kernel spec, a, gamma, n, seed).
Trajectory run_chain(const Kernel& k, const StateVector& a, const StepSize& step, std::size_t n,
                     std::uint64_t seed);

/// Snaps v to the exact gamma-grid representative gamma*round(v/gamma).
StateVector snap_to_grid(const StateVector& v, double gamma);

}  // namespace sadi
