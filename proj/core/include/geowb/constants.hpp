#pragma once

// Named tolerances and reference constants. Every tolerance used by the
// toolkit lives here; modules must not invent local epsilons.

namespace geowb {

// Trace classification: |tr| within tol_trace of 2 counts as parabolic.
inline constexpr double tol_trace = 1e-10;

// Length comparisons (trace-derived lengths, cuff targets).
inline constexpr double tol_len = 1e-9;

// Matrix products renormalize (divide by sqrt(det)) after this many
// accumulated products; bounds determinant drift in long ball searches.
inline constexpr int renorm_interval = 32;

// Determinant drift ceiling enforced by the Isometry invariant.
inline constexpr double tol_det = 1e-12;

// Relator residual ceiling for holonomy representations.
inline constexpr double tol_relator = 1e-8;

// Length-equality bucketing for multiplicity histograms:
// two lengths coincide when |l1 - l2| <= tol_len * max(1, l).
inline constexpr double tol_bucket = 1e-9;

// cosh(l/2) = 1 + sqrt(2) at the genus-2 systole maximum; no genus-2
// surface has a systole above 2*arccosh(1+sqrt(2)) ~ 3.0571418.
double genus2_systole_bound();

// Initial adaptive cutoff for systole searches: genus2_systole_bound() + 1.
double systole_search_cutoff0();

}  // namespace geowb
