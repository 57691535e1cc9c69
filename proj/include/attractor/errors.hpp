#pragma once

#include <stdexcept>

namespace attractor {

class NoAttractor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AsymmetricCharge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DependentVectors : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateCoefficients : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace attractor
