// Copyright 2026 The Egograde Authors
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

#ifndef EGOGRADE_ERRORS_HPP_
#define EGOGRADE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace egograde
{

class Error : public std::runtime_error
{
public:
  explicit Error(const std::string & what) : std::runtime_error(what) {}
};

// A nominal path that cannot define a path-relative frame (too few vertices,
// repeated vertices).
class InvalidPathError : public Error
{
public:
  using Error::Error;
};

// A path-relative query landed beyond the ends of the nominal path.
class OutOfPathExtentError : public Error
{
public:
  using Error::Error;
};

// Grid/field/ensemble dimensions do not agree.
class ShapeError : public Error
{
public:
  using Error::Error;
};

// Invalid configuration values (cell sizes, distribution parameters, ...).
class ConfigError : public Error
{
public:
  using Error::Error;
};

// A per-actor query referenced an actor the scenario does not contain.
class MissingActorError : public Error
{
public:
  using Error::Error;
};

// Malformed scenario/config/report files.
class InputError : public Error
{
public:
  using Error::Error;
};

}  // namespace egograde

#endif  // EGOGRADE_ERRORS_HPP_
