#include "sadi/core.hpp"

#include <algorithm>
#include <cmath>

#include "sadi/csv.hpp"

namespace sadi {

StateVector interpolate(const InterpolatedPath& path, double t) {
    const Trajectory& traj = path.trajectory();
    const double g = traj.gamma();
    const std::size_t last = traj.size() - 1;
    const double t_end = g * static_cast<double>(last);

    if (!(t >= 0.0)) throw RangeError("interpolate: t must be nonnegative");
    if (t > t_end) {
        if (t - t_end <= 1e-9 * std::max(1.0, t_end)) {
            t = t_end;
        } else {
            throw RangeError("interpolate: t beyond the trajectory horizon");
        }
    }

    // Grid hit: if t is the product g*k for some integer k, return x_k as stored.
    const double s = t / g;
    const auto k = static_cast<long long>(std::llround(s));
    if (k >= 0 && static_cast<std::size_t>(k) <= last && g * static_cast<double>(k) == t) {
        return traj.state_vec(static_cast<std::size_t>(k));
    }

    if (last == 0) return traj.state_vec(0);
    std::size_t j = static_cast<std::size_t>(std::floor(s));
    if (j >= last) j = last - 1;
    double frac = s - static_cast<double>(j);
    frac = std::clamp(frac, 0.0, 1.0);
    return lerp(traj.state(j), traj.state(j + 1), frac);
}

OccupationMeasure::OccupationMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ParameterError("OccupationMeasure: no atoms");
    const std::size_t dim = atoms_.front().point.size();
    double total = 0.0;
    for (const Atom& a : atoms_) {
        if (a.point.size() != dim) throw DimensionError("OccupationMeasure: mixed dimensions");
        if (a.weight < 0.0) throw ParameterError("OccupationMeasure: negative weight");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ParameterError("OccupationMeasure: weights sum to " + std::to_string(total));
    }
}

StateVector OccupationMeasure::mean() const {
    StateVector m(atoms_.front().point.size(), 0.0);
    for (const Atom& a : atoms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += a.weight * a.point[i];
    }
    return m;
}

OccupationMeasure occupation_measure(const Trajectory& traj, std::size_t n) {
    if (n >= traj.size()) throw RangeError("occupation_measure: n out of range");
    return occupation_measure_window(traj, 0, n + 1);
}

OccupationMeasure occupation_measure_window(const Trajectory& traj, std::size_t begin,
                                            std::size_t end) {
    if (begin >= end || end > traj.size()) {
        throw RangeError("occupation_measure_window: bad window");
    }
    const double w = 1.0 / static_cast<double>(end - begin);
    std::vector<OccupationMeasure::Atom> atoms;
    atoms.reserve(end - begin);
    for (std::size_t k = begin; k < end; ++k) {
        atoms.push_back({traj.state_vec(k), w});
    }
    return OccupationMeasure(std::move(atoms));
}

StateVector cesaro_mean(const Trajectory& traj, std::size_t n) {
    if (n >= traj.size()) throw RangeError("cesaro_mean: n out of range");
    StateVector m(traj.dimension(), 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
        auto s = traj.state(k);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += s[i];
    }
    const double inv = 1.0 / static_cast<double>(n + 1);
    for (double& v : m) v *= inv;
    return m;
}

MartingaleDecomposition decompose_increment(const StateVector& x, const StateVector& x_next,
                                            const StepSize& step, const StateVector& drift) {
    require_same_dim(x, x_next, "decompose_increment");
    require_same_dim(x, drift, "decompose_increment");
    StateVector drift_part = scaled(drift, step.gamma);
    StateVector noise_part(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        noise_part[i] = (x_next[i] - x[i]) - drift_part[i];
    }
    return {std::move(drift_part), std::move(noise_part)};
}

void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path,
                          std::size_t thin) {
    if (thin == 0) throw ParameterError("write_trajectory_csv: thin must be >= 1");
    atomic_write(path, [&](std::ostream& out) {
        out << "k,t";
        for (int i = 1; i <= traj.dimension(); ++i) out << ",x_" << i;
        out << "\n";
        const double g = traj.gamma();
        for (std::size_t k = 0; k < traj.size(); k += thin) {
            out << k << ',' << format_g17(g * static_cast<double>(k));
            for (double v : traj.state(k)) out << ',' << format_g17(v);
            out << "\n";
        }
    });
}

}  // namespace sadi
