#pragma once

#include <cstdint>

#include "gamma2/presentation.hpp"
#include "gamma2/verifier_report.hpp"

namespace gamma2 {

/// Evaluate every relator of gamma2_presentation(n) plus the generator and
/// family-count contracts. 1 <= n <= 6.
Report check_canonical_presentation(int n);

/// Matrix-evaluation of every displayed appendix word identity at n = 3, for
/// both index assignments (j,k) = (2,3) and (3,2); a manifest count pins the
/// coverage.
Report check_appendix_identities();

/// Membership, endpoint-fixing and family-equality checks over the 21 edge
/// stabilizer triples at n = 3.
Report check_edge_systems();

/// Seeded factor/evaluate round-trips on random words.
Report roundtrip_suite(int n, int trials, int max_len, std::uint64_t seed);

/// The same abelian invariants along three routes: the canonical n = 2
/// presentation, the derived one, and the intermediate four-generator
/// presentation; plus permutation and redundancy stability.
Report cross_check_abelianization();

}  // namespace gamma2
