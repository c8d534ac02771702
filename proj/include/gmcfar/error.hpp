/*
   Copyright 2026 The gmcfar Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace gmcfar {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The result is not representable as a finite double.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// The request is well formed but the closed forms do not cover it
/// (for example a single reference cell in the full-CFAR detectors).
class UnsupportedConfiguration : public Error {
public:
    using Error::Error;
};

/// A numerical routine could not reach its requested accuracy.
class NumericalFailure : public Error {
public:
    NumericalFailure(const std::string& what, double achieved_error)
        : Error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// No threshold multiplier produces the requested false-alarm probability.
class UnreachableTarget : public Error {
public:
    using Error::Error;
};

/// An adjudication report cannot back a false-alarm evaluation.
class InconsistentReport : public Error {
public:
    using Error::Error;
};

}  // namespace gmcfar
