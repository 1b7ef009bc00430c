/*
 * Copyright 2026 The mscc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "mscc/rational.hpp"

#include "mscc/errors.hpp"

#include <cctype>

namespace mscc {

BigInt floor(const Rational& r) {
  BigInt q = numer(r) / denom(r);  // truncates toward zero
  if (r < 0 && q * denom(r) != numer(r)) q -= 1;
  return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

std::string to_string(const Rational& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return Error(ErrorKind::ParameterRejected, "cannot parse rational '" + text + "'"); };
  if (text.empty()) throw bad();
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw bad();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    std::string whole = text.substr(0, dot);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) return Rational(parse_int(whole));
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = whole[0] == '-';
    BigInt mag = abs(parse_int(whole)) * scale + parse_int(frac);
    return Rational(negative ? BigInt(-mag) : mag, scale);
  }
  return Rational(parse_int(text));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace mscc
