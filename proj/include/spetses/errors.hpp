/*
   Copyright 2026 The spetses Authors

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

namespace spetses {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// A polynomial division left a nonzero remainder. This is a mathematical
/// finding about the operands, not a malfunction.
class InexactDivision : public Error {
public:
    explicit InexactDivision(const std::string& what) : Error("inexact division: " + what) {}
};

class InvalidGroup : public Error {
public:
    explicit InvalidGroup(const std::string& what) : Error("invalid group: " + what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class BoundExceeded : public Error {
public:
    explicit BoundExceeded(const std::string& what) : Error("bound exceeded: " + what) {}
};

/// Two independent routes to the same quantity disagreed.
class ConsistencyFailure : public Error {
public:
    explicit ConsistencyFailure(const std::string& what) : Error("consistency failure: " + what) {}
};

}  // namespace spetses
