#pragma once

// Verification suite: the integration-level checks that tie the solvers,
// the asymptotes and the printed constants together. Each criterion bundles
// sub-checks of the form measured <= bound; asymptotic-remainder bounds are
// frozen through the golden store on first run and regressed afterwards.

#include <string>
#include <vector>

namespace neel {

struct VerifySubCheck {
  std::string what;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerifyCriterion {
  int number = 0;
  std::string label;
  std::vector<VerifySubCheck> subs;
  std::string note;       // printed for failing criteria
  double seconds = 0.0;

  bool passed() const;
  const VerifySubCheck* worst() const;  // largest measured/bound, null if empty
};

enum class VerifyLevel {
  kQuick,  // printed constants only, seconds
  kFull,   // constants, dos, series, lemmas, bcs, asymptotes, oracle
};

// Runs the suite and returns one entry per criterion, in order. A criterion
// that throws is reported as failed with the exception text; the golden
// store is opened at <golden dir>/asymptotes.csv per GoldenStore rules.
std::vector<VerifyCriterion> run_verification(VerifyLevel level);

}  // namespace neel
