#pragma once

#include <stdexcept>
#include <string>

namespace qet {

// Root finder did not reach the requested residual; carries the last residual seen.
class solver_error : public std::runtime_error {
 public:
  solver_error(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Two eigenvalues closer than the resolution threshold. The crystal spectrum
// is non-degenerate, so this signals a bad input rather than physics.
class degeneracy_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerically invalid intermediate (non-positive eigenvalue, failed eigensolve).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested truncated-basis dimension exceeds the configured ceiling.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qet
