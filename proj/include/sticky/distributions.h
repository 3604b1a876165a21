// Copyright 2026 The Stickyword Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace sticky::dist {

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1],
// evaluated by Lentz's continued fraction. Relative accuracy ~1e-14.
double RegularizedIncompleteBeta(double a, double b, double x);

// Student-t with `df` > 0 degrees of freedom (df may be fractional).
double StudentTCdf(double t, double df);
// P(|T| >= |t|). Infinite t gives 0.
double StudentTTwoTailed(double t, double df);
// Inverse CDF by bisection on StudentTCdf; p in (0, 1).
double StudentTQuantile(double p, double df);

// Upper tail P(F >= f) of the F distribution with (d1, d2) degrees of freedom.
double FSurvival(double f, double d1, double d2);

}  // namespace sticky::dist
