// SPDX-License-Identifier: Apache-2.0
//
// nsmimo: correlation modelling for MIMO channels in non-separable scattering
// Copyright (C) 2026 The nsmimo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NSMIMO_ERRORS_HPP
#define NSMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nsmimo {

// Bad input to a public entry point (sizes, ranges, non-finite values).
class invalid_argument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A density whose unnormalized mass vanishes or whose parameters make it undefined.
class degenerate_distribution : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Quadrature or factorization that failed to reach its tolerance.
class numerical_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Requested a computation path the object does not support (e.g. closed form for a mixture).
class unsupported_method : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class not_positive_semidefinite : public numerical_failure {
  public:
    not_positive_semidefinite(const std::string &what, double eigenvalue)
        : numerical_failure(what), eigenvalue_(eigenvalue)
    {
    }

    double eigenvalue() const noexcept { return eigenvalue_; }

  private:
    double eigenvalue_;
};

namespace detail {

inline void require(bool condition, const std::string &message)
{
    if (!condition)
        throw nsmimo::invalid_argument(message);
}

} // namespace detail

} // namespace nsmimo

#endif
