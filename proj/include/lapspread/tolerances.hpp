#pragma once

// Tolerance ladder. Each rung dominates the one before it so that
// eigensolver noise can never be reported as a counterexample.
namespace lapspread::tol {

inline constexpr double kEigen = 1e-9;       // relative eigenvalue accuracy
inline constexpr double kIdentity = 1e-8;    // closed-form identities
inline constexpr double kMargin = 1e-7;      // conjecture margins / TIGHT band
inline constexpr double kCluster = 1e-6;     // multiplicity clustering radius
inline constexpr double kSymmetry = 1e-12;   // symmetric-input check

}  // namespace lapspread::tol
