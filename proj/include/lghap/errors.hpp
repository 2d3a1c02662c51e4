/*
   Copyright 2026 The lghap authors

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

#ifndef LGHAP_ERRORS_HPP
#define LGHAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lghap {

// Base class of every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Series exponential requires a vanishing constant term.
class NonZeroConstantTerm : public Error {
public:
    using Error::Error;
};

// Series reciprocal requires a nonzero (scalar) constant term.
class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

// Coefficient extraction past the truncation order.
class IndexBeyondOrder : public Error {
public:
    using Error::Error;
};

// Family-spec name not registered.
class UnknownFamily : public Error {
public:
    using Error::Error;
};

// Family-spec parameter out of domain (lambda=0, negative alpha, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Operation needs the EGF normalization but the family is OGF-based
// (or vice versa).
class NormalizationMismatch : public Error {
public:
    using Error::Error;
};

// A_0 = 0: no beta coefficients, no determinantal representation.
class DegenerateFamily : public Error {
public:
    using Error::Error;
};

// Matrix is not upper Hessenberg.
class ShapeViolation : public Error {
public:
    using Error::Error;
};

// Cofactor-expansion determinant past its cost guard.
class DimensionTooLarge : public Error {
public:
    using Error::Error;
};

// Reduction row requires an operator-valued substitution.
class UnsupportedCase : public Error {
public:
    using Error::Error;
};

// Malformed grid request.
class InvalidGrid : public Error {
public:
    using Error::Error;
};

} // namespace lghap

#endif // LGHAP_ERRORS_HPP
