// Copyright 2026 The qq developers.
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

#include "qq/eigh.hpp"
#include "qq/matrix.hpp"

namespace qq {

// exp(-i H t) for Hermitian H, evaluated through the eigendecomposition
// H = V diag(w) V^dag as V diag(exp(-i w t)) V^dag. The result is unitary
// to the accuracy of the decomposition. Throws if H is not Hermitian.
CMatrix expm_i(const CMatrix& h, double t);

// Same factorisation reused when the spectrum of H is already at hand.
CMatrix expm_i(const EigenSystem& es, double t);

// General dense exp(A) by scaling and squaring with a truncated Taylor
// series: A is scaled by 2^-s so its max-row-sum norm drops below 1/2, the
// series is summed until terms fall below machine precision, and the
// result is squared s times. Intended for the anti-Hermitian generators of
// displacement and squeezing; throws std::runtime_error if the series
// fails to converge within the term budget.
CMatrix expm(const CMatrix& a);

}  // namespace qq
