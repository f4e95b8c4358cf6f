// Copyright 2026 The benford Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace benford {

/// ln Gamma(x) for x > 0 (Lanczos approximation, ~1e-14 relative).
double log_gamma(double x);

/// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
/// Series expansion for x < a+1, Lentz continued fraction otherwise;
/// relative accuracy is ~1e-14, comfortably past the 1e-8 target that the
/// chi-square p-values rely on for dof <= 64.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a,x) = 1 - P(a,x).
double regularized_gamma_q(double a, double x);

}  // namespace benford
