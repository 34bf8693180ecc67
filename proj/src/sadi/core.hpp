#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "sadi/errors.hpp"
#include "sadi/vec.hpp"

namespace sadi {

/// Step size gamma together with its upper bound gamma_max.
struct StepSize {
    double gamma;
    double gamma_max;

    explicit StepSize(double g, double g_max = 1.0) : gamma(g), gamma_max(g_max) {
        if (!(g > 0.0) || !(g < g_max)) {
            throw ParameterError("StepSize: need 0 < gamma < gamma_max, got gamma=" +
                                 std::to_string(g) + " gamma_max=" + std::to_string(g_max));
        }
    }
};

/// Finite iterate sequence x_0..x_n at a fixed step size, plus the seed of the
/// noise stream that produced it. States are stored flat (row-major) so long
/// runs stay cache- and memory-friendly. Continuous time is always derived as
/// t = gamma * k; it is never stored.
class Trajectory {
public:
    Trajectory(StepSize step, int dimension, std::uint64_t seed)
        : step_(step), dim_(dimension), seed_(seed) {
        if (dimension < 1) throw ParameterError("Trajectory: dimension must be >= 1");
    }

    void reserve(std::size_t states) { data_.reserve(states * static_cast<std::size_t>(dim_)); }

    void append(std::span<const double> x) {
        if (static_cast<int>(x.size()) != dim_) {
            throw DimensionError("Trajectory::append: state has wrong dimension");
        }
        if (!all_finite(x)) throw ParameterError("Trajectory::append: non-finite coordinate");
        data_.insert(data_.end(), x.begin(), x.end());
    }

    int dimension() const { return dim_; }
    std::size_t size() const { return data_.size() / static_cast<std::size_t>(dim_); }
    bool empty() const { return data_.empty(); }
    double gamma() const { return step_.gamma; }
    const StepSize& step() const { return step_; }
    std::uint64_t seed() const { return seed_; }

    std::span<const double> state(std::size_t k) const {
        if (k >= size()) throw RangeError("Trajectory::state: index out of range");
        return {data_.data() + k * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    StateVector state_vec(std::size_t k) const {
        auto s = state(k);
        return StateVector(s.begin(), s.end());
    }

    std::span<const double> back() const { return state(size() - 1); }

private:
    StepSize step_;
    int dim_;
    std::uint64_t seed_;
    std::vector<double> data_;
};

/// Piecewise-linear continuous-time view of a trajectory, evaluable on
/// [0, gamma*(size-1)].
class InterpolatedPath {
public:
    explicit InterpolatedPath(const Trajectory& traj) : traj_(&traj) {
        if (traj.empty()) throw ParameterError("InterpolatedPath: empty trajectory");
    }

    const Trajectory& trajectory() const { return *traj_; }
    double t_end() const { return traj_->gamma() * static_cast<double>(traj_->size() - 1); }

private:
    const Trajectory* traj_;
};

/// x_{floor(t/g)} + (t/g - floor(t/g)) * (x_{floor+1} - x_{floor}).
/// Exact at grid points: a query t produced as gamma*k (same product) returns
/// the stored iterate bit-for-bit.
StateVector interpolate(const InterpolatedPath& path, double t);

/// Weighted empirical measure. Weights are explicit so burn-in-trimmed
/// windows reuse the same type.
class OccupationMeasure {
public:
    struct Atom {
        StateVector point;
        double weight;
    };

    explicit OccupationMeasure(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::size_t size() const { return atoms_.size(); }
    int dimension() const { return static_cast<int>(atoms_.front().point.size()); }

    /// Barycenter: integral of the identity against the measure.
    StateVector mean() const;

private:
    std::vector<Atom> atoms_;
};

/// Uniform measure over x_0..x_n.
OccupationMeasure occupation_measure(const Trajectory& traj, std::size_t n);

/// Uniform measure over the window x_begin..x_end-1 (used for burn-in trims).
OccupationMeasure occupation_measure_window(const Trajectory& traj, std::size_t begin,
                                            std::size_t end);

/// Coordinatewise average of x_0..x_n.
StateVector cesaro_mean(const Trajectory& traj, std::size_t n);

/// One observed transition split into gamma*drift and the martingale-increment
/// remainder.
struct MartingaleDecomposition {
    StateVector drift_part;
    StateVector noise_part;
};

MartingaleDecomposition decompose_increment(const StateVector& x, const StateVector& x_next,
                                            const StepSize& step, const StateVector& drift);

/// CSV with header k,t,x_1,...,x_N, one row per kept iterate (every thin-th),
/// floats at 17 significant digits. Written atomically.
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path,
                          std::size_t thin = 1);

}  // namespace sadi
