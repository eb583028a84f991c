// readout.cpp — expectation curves, readout inversion, clock resolution

#include "chronogen/readout.hpp"

#include "chronogen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chronogen {

ReadoutCurve expectation_curve(const CMatrix& observable, const ClockTrajectory& trajectory) {
    require_hermitian(observable, "expectation_curve");
    ReadoutCurve curve;
    curve.lambda_grid = trajectory.lambda_grid;
    curve.values.reserve(trajectory.chi_raw.size());
    for (const CVector& chi : trajectory.chi_raw) {
        if (chi.size() != observable.rows()) {
            throw ValidationError("expectation_curve: observable does not act on the clock space");
        }
        const Complex value = chi.dot(observable * chi) / chi.squaredNorm();
        if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
            throw Error("expectation_curve: expectation value is not real");
        }
        curve.values.push_back(value.real());
    }
    return curve;
}

bool is_strictly_monotone(const ReadoutCurve& curve, double tol) {
    if (curve.values.size() < 2) return false;
    const double first = curve.values[1] - curve.values[0];
    if (std::abs(first) <= tol) return false;
    const double sign = first > 0.0 ? 1.0 : -1.0;
    for (std::size_t k = 1; k < curve.values.size(); ++k) {
        if (sign * (curve.values[k] - curve.values[k - 1]) <= tol) return false;
    }
    return true;
}

double invert_readout(const ReadoutCurve& curve, double observed_value) {
    if (curve.values.size() != curve.lambda_grid.size()) {
        throw ValidationError("invert_readout: values and grid differ in length");
    }
    if (!is_strictly_monotone(curve)) {
        throw ReadoutUnusableError("invert_readout: curve is not strictly monotone on its grid");
    }
    const auto& v = curve.values;
    const bool ascending = v.back() > v.front();
    const double lo = ascending ? v.front() : v.back();
    const double hi = ascending ? v.back() : v.front();
    if (!(observed_value >= lo && observed_value <= hi)) {
        throw RangeError("invert_readout: value " + std::to_string(observed_value) +
                         " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    for (std::size_t k = 1; k < v.size(); ++k) {
        const double a = v[k - 1];
        const double b = v[k];
        if ((observed_value - a) * (observed_value - b) <= 0.0) {
            const double t = (observed_value - a) / (b - a);
            return curve.lambda_grid[k - 1] + t * (curve.lambda_grid[k] - curve.lambda_grid[k - 1]);
        }
    }
    return curve.lambda_grid.back();
}

ResolutionSpectrum resolution_spectrum(const CVector& chi0, const CMatrix& h_clock) {
    const EighResult eig = eigh(h_clock);
    if (chi0.size() != h_clock.rows()) {
        throw ValidationError("resolution_spectrum: dimension mismatch");
    }
    ResolutionSpectrum out;
    out.coefficients = eig.vectors.adjoint() * chi0;
    out.energies = eig.values;
    const RVector weights = out.coefficients.cwiseAbs2();
    const double total = weights.sum();
    const double fourth = weights.squaredNorm();
    if (fourth == 0.0) throw ValidationError("resolution_spectrum: chi0 must be nonzero");
    out.participation_ratio = total * total / fourth;
    return out;
}

}  // namespace chronogen
