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

#include "dpophylo/common.hpp"

#include <algorithm>
#include <cctype>

namespace dpophylo {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && body.front() == '-')
        body.remove_prefix(1);

    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-')
        n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value)
{
    return value.get_str(10);
}

bool is_valid_label(std::string_view label)
{
    if (label.empty() || label.front() == '#' || label == "vertex")
        return false;
    return std::none_of(label.begin(), label.end(),
        [](unsigned char c) { return c == ',' || std::isspace(c) != 0 || std::iscntrl(c) != 0; });
}

} // namespace dpophylo
