#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ohsz/types.hpp"

namespace ohsz {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 1000;
  // Test hook: applied to every Hamiltonian the battery builds through its
  // primary construction path, so a deliberate corruption can prove that the
  // checks actually detect broken inputs.
  std::function<void(Matrix8d&)> tamper;
};

struct CheckResult {
  std::string name;
  double residual;   // worst value observed across all samples
  double threshold;  // pass iff residual <= threshold (and nothing threw)
  bool pass;
  std::string note;  // failure context, e.g. an exception message
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  int samples = 0;
  double seconds = 0.0;
  bool all_pass() const;
};

// Run the full invariant battery: algebraic identities of the operators,
// agreement of the two Hamiltonian constructions, the closed-form
// characteristic coefficients against the trace-recurrence oracle, the
// closed-form spectrum against the iterative eigensolver, the chiral
// mirror symmetry, and the unitary-dynamics invariants. Deterministic:
// `samples` pseudo-random field configurations derived from `seed`, plus a
// fixed set of structural special points. Pure computation, no IO.
VerifyReport verify_all(const VerifyOptions& options = {});

}  // namespace ohsz
