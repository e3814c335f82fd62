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

#include <functional>

namespace qq {

// Root of f on [a, b] by bisection; requires a sign change. The interval
// is halved to machine precision, which is deterministic and derivative
// free. Throws std::invalid_argument when f(a) and f(b) share a sign.
double find_root(const std::function<double(double)>& f, double a, double b);

// Minimum of a unimodal f on [a, b] by golden-section search refined to
// the requested x tolerance. Returns the abscissa; evaluate f again for
// the value. Throws when the bracket is invalid.
double minimize(const std::function<double(double)>& f, double a, double b,
                double xtol = 1e-10);

}  // namespace qq
