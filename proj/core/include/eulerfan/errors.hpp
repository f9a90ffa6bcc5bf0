#pragma once

#include <stdexcept>
#include <string>

namespace eulerfan {

/// Input outside the mathematical domain of an operation (vacuum density,
/// negative kinetic level, evaluation time outside a solution's slab).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input that makes the requested object undefined, e.g. a shock between
/// two equal densities.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed: vacuum formation in the Riemann solve,
/// non-monotone bracket, singular Jacobian, Newton stall.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A piecewise solution was asked for data at or beyond its first wave
/// interaction.
class HorizonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fan subsolution failed its feasibility check where feasibility is
/// a precondition (gluing).
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace eulerfan
