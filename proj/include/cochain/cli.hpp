#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cochain/report.hpp"

namespace cochain::cli {

enum ExitCode : int {
  kVerified = 0,
  kIdentityViolation = 1,
  kInputError = 2,
};

struct ComplexSuiteOptions {
  std::size_t dim = 3;
  std::size_t grade = 2;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  // Adds 1 to one entry of the first d_K(d_K(E)) so the suite must fail.
  bool inject_fault = false;
};

// Seeded property suite on random polynomial members of K(grade) and
// G(grade): d_K o d_K = 0, d_G o d_G = 0, psi o phi = id, phi o psi = id,
// membership of phi/psi/d_K outputs, the G decomposition identity, and on
// grade 1 the explicit d_G formula.
VerificationReport complex_suite(const ComplexSuiteOptions& options);

// Entry point behind the `cochain` executable; `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cochain::cli
