// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The swiptrelay Authors
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

#ifndef SWIPT_ERROR_HPP
#define SWIPT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace swipt {

// Argument validation failures are reported as std::invalid_argument.

/// A relay with zero source->relay gain can never decode, so the DF problem
/// has only the zero-rate solution.
class DegenerateChannel : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Brute-force oracles refuse grids beyond their evaluation budget.
class ResourceLimit : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
  public:
    IoError(const std::string &path, const std::string &what)
        : std::runtime_error(path + ": " + what), path_(path)
    {
    }

    const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

} // namespace swipt

#endif
