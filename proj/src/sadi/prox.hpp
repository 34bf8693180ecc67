#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sadi/errors.hpp"
#include "sadi/vec.hpp"

namespace sadi {

/// Dense row-major matrix, just large enough for the small operators used here.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, std::vector<double> d) : rows(r), cols(c), data(std::move(d)) {
        if (r < 1 || c < 1 || data.size() != static_cast<std::size_t>(r) * c) {
            throw ParameterError("Matrix: shape/data mismatch");
        }
    }
    static Matrix identity(int n) {
        std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i) * n + i] = 1.0;
        return Matrix(n, n, std::move(d));
    }
    double operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    StateVector apply(const StateVector& x) const;
};

enum class ConvexKind { zero, weighted_l1, squared_l2, box_indicator, nonneg_indicator, custom };

/// Closed proper convex function from a small catalog of closed-form kinds,
/// plus a generic oracle-backed kind. Indicator kinds evaluate to +inf outside
/// their domain.
class ConvexFunctionSpec {
public:
    using ValueFn = std::function<double(const StateVector&)>;
    using SubgradFn = std::function<StateVector(const StateVector&)>;

    static ConvexFunctionSpec zero();
    /// sum_i weights_i * |x_i| with per-coordinate positive weights.
    static ConvexFunctionSpec weighted_l1(StateVector weights);
    /// weight * ||x||_1 in any dimension.
    static ConvexFunctionSpec l1(double weight);
    /// (scale/2) * ||x||^2.
    static ConvexFunctionSpec squared_l2(double scale);
    static ConvexFunctionSpec box_indicator(StateVector lower, StateVector upper);
    static ConvexFunctionSpec nonneg_indicator();
    /// Oracle-backed kind; the subgradient oracle must return an element of
    /// the subdifferential (its value is also used as the designated
    /// representative by least_norm_subgradient).
    static ConvexFunctionSpec custom(ValueFn value, SubgradFn subgradient);

    ConvexKind kind() const { return kind_; }
    double value(const StateVector& x) const;
    StateVector subgradient_oracle(const StateVector& x) const;

    /// All catalog kinds act coordinatewise; the custom kind does not.
    bool separable() const { return kind_ != ConvexKind::custom; }

    /// Scalar proximal map of the coordinate-i component (separable kinds only).
    double prox1d(int i, double gamma, double z) const;
    /// z-locations where prox1d(i, gamma, .) has kinks, for quadrature splitting.
    std::vector<double> prox1d_kinks(int i, double gamma) const;

    const StateVector& l1_weights() const { return weights_; }
    double uniform_weight() const { return scale_; }
    double l2_scale() const { return scale_; }
    const StateVector& box_lower() const { return lower_; }
    const StateVector& box_upper() const { return upper_; }

private:
    ConvexFunctionSpec() = default;
    double l1_weight_at(std::size_t i) const;

    ConvexKind kind_ = ConvexKind::zero;
    StateVector weights_;  // weighted_l1
    double scale_ = 0.0;   // squared_l2 scale, or the uniform l1 weight
    bool uniform_l1_ = false;
    StateVector lower_, upper_;  // box_indicator
    ValueFn value_fn_;
    SubgradFn subgrad_fn_;

    friend StateVector prox(const ConvexFunctionSpec&, double, const StateVector&);
    friend StateVector least_norm_subgradient(const ConvexFunctionSpec&, const StateVector&);
};

/// argmin_y gamma*r(y) + 0.5*||y - x||^2. Closed form for catalog kinds; the
/// custom kind runs an accelerated inner solver to tolerance 1e-12 with a 1e5
/// iteration cap (a cap hit throws OracleError, never a silent approximation).
StateVector prox(const ConvexFunctionSpec& r, double gamma, const StateVector& x);

/// (x - prox(r, gamma, x)) / gamma; lies in the subdifferential of r at the
/// prox point.
StateVector moreau_gradient(const ConvexFunctionSpec& r, double gamma, const StateVector& x);

/// Minimal-norm subgradient at x. DomainError outside the domain of the
/// subdifferential (indicator exteriors).
StateVector least_norm_subgradient(const ConvexFunctionSpec& r, const StateVector& x);

/// Maximal monotone operator: a subdifferential, or x -> Mx + b with
/// M + M^T positive semidefinite (checked at construction within 1e-10).
class MonotoneOperatorSpec {
public:
    enum class Kind { subdifferential, affine };

    static MonotoneOperatorSpec subdifferential(ConvexFunctionSpec r);
    static MonotoneOperatorSpec affine(Matrix m, StateVector offset);

    Kind kind() const { return kind_; }
    const ConvexFunctionSpec& function() const { return fn_.value(); }
    const Matrix& matrix() const { return m_; }
    const StateVector& offset() const { return b_; }

private:
    MonotoneOperatorSpec() = default;
    Kind kind_ = Kind::subdifferential;
    std::optional<ConvexFunctionSpec> fn_;
    Matrix m_;
    StateVector b_;
};

/// Unique y with x in y + gamma*A(y). Subdifferential kind reduces to prox;
/// affine kind is a direct linear solve of (I + gamma*M) y = x - gamma*b.
StateVector resolvent(const MonotoneOperatorSpec& a, double gamma, const StateVector& x);

/// (x - resolvent(a, gamma, x)) / gamma.
StateVector yosida(const MonotoneOperatorSpec& a, double gamma, const StateVector& x);

}  // namespace sadi
