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

#include "cycalg/poly_parse.hpp"

#include <cctype>
#include <stdexcept>

namespace cycalg {

namespace {

class Scanner {
public:
  Scanner(std::string_view text, char var) : text_(text), var_(var) {}

  std::vector<mpq_class> parse() {
    std::vector<mpq_class> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exponent] = term();
      if (out.size() <= exponent) out.resize(exponent + 1, mpq_class(0));
      out[exponent] += sign * coef;
      skip_ws();
    }
    return out;
  }

private:
  std::pair<mpq_class, std::size_t> term() {
    mpq_class coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = rational();
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        take();
        skip_ws();
      } else {
        return {coef, 0};
      }
    }
    if (peek() != var_) fail(have_coef ? "expected variable after '*'" : "expected coefficient or variable");
    take();
    skip_ws();
    std::size_t exponent = 1;
    if (peek() == '^') {
      take();
      skip_ws();
      exponent = static_cast<std::size_t>(integer().get_ui());
    }
    return {coef, exponent};
  }

  mpq_class rational() {
    mpz_class num = integer();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      mpz_class den = integer();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<mpq_class> parse_polynomial(std::string_view text, char var) { return Scanner(text, var).parse(); }

std::string format_polynomial(const std::vector<std::string>& coeffs, char var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string c = coeffs[i];
    if (c == "0") continue;
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cycalg
