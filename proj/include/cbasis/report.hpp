#pragma once

// Machine-readable census exports and the verification report comparing the
// semi-infinite basis census against the Freudenthal oracle.  All output is
// byte-deterministic for a fixed input.

#include <iosfwd>
#include <string>
#include <vector>

#include "cbasis/cartan.hpp"
#include "cbasis/character.hpp"

namespace cbasis {

/// {"ell":..,"lambda":[..],"depth":..,"entries":[{"d":..,"mu":[..],"count":..},..]}
/// with entries sorted by (d, lexicographic mu).
void write_census_json(std::ostream& os, int ell, const std::vector<int>& lambda, int depth,
                       const GradedCharacter& g);

/// Header d,mu1,...,muN,count; one row per entry, same order as the JSON.
void write_census_csv(std::ostream& os, int ell, const GradedCharacter& g);

void write_census_text(std::ostream& os, const GradedCharacter& g);

struct VerifyResult {
  bool ok = false;
  std::string report;
};

/// Side-by-side comparison of the two independent computations at the given
/// depth bound; the report carries per-depth totals and the first mismatch.
VerifyResult run_verify(const HighestWeight& L, int depth);

}  // namespace cbasis
