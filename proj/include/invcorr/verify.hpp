#ifndef INVCORR_VERIFY_HPP_
#define INVCORR_VERIFY_HPP_

#include "invcorr/io.hpp"

namespace invcorr {

struct TheoremResult {
  std::string scope;
  std::string name;
  std::string subject;
  bool passed = false;
  std::string detail;  // failure reason / witness text
};

struct VerifyOptions {
  std::string scope = "all";
  std::vector<std::string> fixtures;  // builtin filter; empty means all
  bool include_builtin = true;
  Budget budget;
};

// Runs every theorem family in scope over the builtin fixtures and any
// workspace structures, one result per (theorem, subject).
std::vector<TheoremResult> verify_theorems(const VerifyOptions& opt,
                                           const Workspace* extra = nullptr);
bool all_passed(const std::vector<TheoremResult>& results);

// Canonical structure families used by the suite and the acceptance
// criteria.
std::vector<std::pair<std::string, RightSet>> fixture_right_sets();
std::vector<std::pair<std::string, PartialMorita>> fixture_moritas();
std::vector<std::pair<std::string, McAlisterFn>> fixture_mcalisters();

// Single-entry mutation sweep: flips one table cell of one fixture
// structure and reruns the targeted verifier slice. Deterministic in the
// seed.
struct MutationOutcome {
  int samples = 0;
  int detected = 0;
};
MutationOutcome mutation_sweep(int samples, unsigned seed,
                               const Budget& budget = {});

}  // namespace invcorr

#endif  // INVCORR_VERIFY_HPP_
