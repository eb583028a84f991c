// readout.hpp — using the clock as an instrument

#pragma once

#include "chronogen/hilbert.hpp"
#include "chronogen/relational.hpp"

#include <vector>

namespace chronogen {

struct ReadoutCurve {
    std::vector<double> lambda_grid;
    std::vector<double> values;
};

// Overlaps a_k = ⟨E_{C,k}|χ₀⟩ in the (phase-fixed) eigenbasis of H_C.
struct ResolutionSpectrum {
    CVector coefficients;
    RVector energies;
    double participation_ratio = 0.0;  // (Σ|a_k|²)² / Σ|a_k|⁴
};

// ⟨χ_λ|A|χ_λ⟩ / ⟨χ_λ|χ_λ⟩ on the trajectory grid.
ReadoutCurve expectation_curve(const CMatrix& observable, const ClockTrajectory& trajectory);

// Strictly monotone within 1e-12 (all first differences share one sign).
bool is_strictly_monotone(const ReadoutCurve& curve, double tol = 1e-12);

// λ with curve(λ) = observed_value by linear interpolation. Throws
// ReadoutUnusableError for non-monotone curves and RangeError outside the range.
double invert_readout(const ReadoutCurve& curve, double observed_value);

ResolutionSpectrum resolution_spectrum(const CVector& chi0, const CMatrix& h_clock);

}  // namespace chronogen
