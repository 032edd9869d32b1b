#pragma once

#include <cstdint>

#include "latcert/certify.hpp"
#include "latcert/gram.hpp"
#include "latcert/reduction.hpp"

namespace latcert {

enum class Answer { kYes, kNo };
enum class Route { kElkies, kHkz, kBoth };

struct DecisionStats {
    std::uint64_t enum_nodes = 0;
    int svp_calls = 0;
    int cvp_calls = 0;
    std::int64_t elapsed_ms = 0;
};

// A decision always carries a certificate that has already passed its
// verifier; the constructor path re-checks before returning.
struct Decision {
    Answer answer;
    Certificate certificate;
    Route route;
    DecisionStats stats;
};

// Elkies route: one CVP call finds the minimal characteristic vector z*.
// norm(z*)^2 < n proves NO with certificate z*; otherwise the instance is a
// rotated standard lattice and HKZ reduction materializes the witness U.
Decision decide_elkies(const GramMatrix& G);

// HKZ route: reduce; the reduced Gram equals the identity exactly for yes
// instances (U = transform^{-1}), otherwise the minimal characteristic
// vector must prove NO.
Decision decide_hkz(const GramMatrix& G);

// kBoth runs the two routes and insists on agreement (RouteDisagreementError
// otherwise, which is always a bug); returns the Elkies-route decision.
Decision decide(const GramMatrix& G, Route route = Route::kElkies);

}  // namespace latcert
