// Copyright 2026 The Cevian Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cevian/rational.hpp"

// Closed-form area ratios, evaluated directly from their formulas. These
// deliberately share no code with the geometric constructions in
// triangle.hpp / parallelogram.hpp: the test suites certify that both
// routes agree exactly on random rational inputs.

namespace cevian {

struct RouthParams {
  Rational lambda;
  Rational mu;
  Rational nu;
};

// (lmn - 1)^2 / ((lm + l + 1)(mn + m + 1)(nl + n + 1)), the area of the
// triangle cut out by the cevians with side ratios l:1, m:1, n:1.
// Throws DegenerateDenominator when a factor vanishes.
Rational routh_formula(const RouthParams& p);

// 2*l^2 / ((3 + l)(2l + 3)) for sides divided 1 : l : 1.
Rational hexagon_formula(const Rational& lambda);

// 8 / (9n^2 - 1) for odd n >= 3 equal side divisions. Throws BadParity.
Rational morgan_formula(long long n);

// 2(n-2)^2 / ((n+1)(2n-1)) for even n >= 4 equal side divisions.
// Throws BadParity.
Rational even_case_formula(long long n);

// 1 / (2l^2 + 2l + 1), the parallelogram ratio when all four sides are
// divided l : 1.
Rational corollary_formula(const Rational& lambda);

}  // namespace cevian
