#pragma once

#include <complex>
#include <vector>

#include "factlab/field.hpp"
#include "factlab/point_counts.hpp"
#include "factlab/poly.hpp"
#include "factlab/progression.hpp"

namespace factlab {

/// |Î(r)| for every frequency r of a progression indicator, and their sum.
struct SpectrumReport {
  std::vector<double> magnitudes;
  double l1 = 0.0;
};

/// Transform convention: Î(r) = sum_x I(x) e^{-2 pi i r x / p}.
///
/// Uses the closed geometric form |sin(pi N t / p) / sin(pi t / p)| with
/// t = r * step, reducing N t modulo p in integers before the sine so the
/// argument never loses precision. O(p) overall.
SpectrumReport spectrum(const FieldCtx& ctx, const Progression& I);

/// Full complex transform, same convention.
std::vector<std::complex<double>> complex_spectrum(const FieldCtx& ctx,
                                                   const Progression& I);

/// (1/p) sum_r Î(r) e^{2 pi i r x / p}.
std::complex<double> reconstruct_indicator(
    const FieldCtx& ctx, const std::vector<std::complex<double>>& transform,
    u64 x);

inline constexpr double kInversionTolerance = 1e-6;

/// Whether the inverse transform at x reproduces I(x) within 1e-6.
bool inversion_check(const FieldCtx& ctx, const Progression& I, Residue x);

/// J_I(P,Q) against (|I|^2/p^2) J(P,Q), with the explicit error bound
/// (S_1^2 / p^2) * 2 d^2 sqrt(p), S_1 = sum_r |Î(r)|.
///
/// PreconditionError if phi(P, Q) has any linear divisor over F_p.
CountReport fourier_error_bound(const FieldCtx& ctx, const Poly& P,
                                const Poly& Q, const Progression& I);

}  // namespace factlab
