/*
   Copyright 2026 The abrank Authors

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

#ifndef ABRANK_RATIONAL_HPP
#define ABRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abrank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Identity failures that the underlying mathematics rules out. Reaching one
/// means an implementation bug or a violated precondition upstream.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Builds n/d in canonical form.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

/// Always "num/den", including integers ("3/1"), so serialized values have a single shape.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Accepts "n" or "n/d" with optional sign; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

bool is_square(const Integer& n);
/// Square root in Q if q is a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// max(|num|, den)
Integer height(const Rational& q);

Rational pow(const Rational& q, unsigned long e);

}  // namespace abrank

#endif  // ABRANK_RATIONAL_HPP
