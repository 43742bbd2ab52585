/*
   Copyright 2026 The cycalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCALG_POLY_PARSE_HPP
#define CYCALG_POLY_PARSE_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cycalg {

/// Parses sums of terms such as "3+4*z", "-1/2*t^3 + t" or "7" into dense
/// rational coefficients (index = exponent). Throws std::invalid_argument
/// on malformed input or an unexpected variable name.
std::vector<mpq_class> parse_polynomial(std::string_view text, char var);

/// Inverse of parse_polynomial for already-rendered coefficient strings.
/// Zero coefficients must be passed as "0"; they are skipped. Output is in
/// ascending degree, e.g. "1+2*t^2"; the zero polynomial renders as "0".
std::string format_polynomial(const std::vector<std::string>& coeffs, char var);

}  // namespace cycalg

#endif  // CYCALG_POLY_PARSE_HPP
