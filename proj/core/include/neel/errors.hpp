#pragma once

#include <stdexcept>
#include <string>

namespace neel {

// Thrown when an iterative scheme (adaptive quadrature, bracketed root
// finding, interpolant refinement) exhausts its budget without reaching
// the requested tolerance. Domain violations use std::domain_error.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace neel
