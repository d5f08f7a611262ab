#pragma once

#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// Walks every functor edge reachable from a real reduced multiring A:
/// RS and ARS always, plus SG and AOS when A is a multifield. Each edge's
/// round-trips are merged under a prefix ("sg.", "aos.", "rs.", "ars."),
/// and the multirings rebuilt along different edges are compared up to
/// isomorphism ("agree.*"). When A is not real reduced a single failing
/// "real_reduced" verdict is returned.
CheckReport diagram_audit(const FiniteMultiring& a);

}  // namespace mvalg
