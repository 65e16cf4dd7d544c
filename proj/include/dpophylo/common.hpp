// Copyright 2026 The dpophylo Authors
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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpophylo {

/// Exact rational number. All coordinates and interval endpoints use it.
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad file, duplicate label, unknown vertex).
class InputError : public Error {
  public:
    using Error::Error;
};

/// An exhaustive search was asked to run beyond its size guard.
class GuardExceeded : public Error {
  public:
    using Error::Error;
};

/// A result failed its internal self-check. Seeing one of these is a bug.
class InvariantViolation : public Error {
  public:
    using Error::Error;
};

/// Parses `[-]digits` or `[-]digits/digits` with a nonzero denominator.
/// Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form: `p` for integers, `p/q` otherwise, always reduced.
std::string format_rational(const Rational& value);

/// Labels must be nonempty, free of whitespace and commas, must not start
/// with `#`, and must not be the edge-list keyword `vertex`.
bool is_valid_label(std::string_view label);

} // namespace dpophylo
