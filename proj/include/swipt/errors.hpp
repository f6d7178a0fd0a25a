// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swipt {

/// Bad dimensions, out-of-range parameters, violated preconditions.
class InvalidArgument : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine hit its cap without converging.
class NumericalFailure : public std::runtime_error
{
  public:
    NumericalFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual)
    {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Channel matrix has a (numerically) zero singular value.
class DegenerateChannel : public std::runtime_error
{
  public:
    DegenerateChannel(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_(index)
    {}
    /// Zero-based position of the first vanishing gain.
    std::size_t index() const noexcept { return index_; }

  private:
    std::size_t index_;
};

/// The rate requirement cannot be met with the given channels.
class Infeasible : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Received RF power was requested for an allocation with no EH channel.
class NoHarvestingChannel : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

/// Equal power allocation leaves no budget for harvesting on any candidate.
class ApproxInfeasible : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace swipt
