// errors.hpp -- exception types shared across the library.

#pragma once

#include <stdexcept>

namespace erlangmax {

// Direct coefficient products requested past the conditioning cap.
struct RepresentationUnstable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zeta evaluated at its pole s = 1.
struct PoleAtOne : std::domain_error {
    using std::domain_error::domain_error;
};

// Expansion parameters outside the stated validity region (e.g. s + 2p <= 0).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Series evaluated outside its stated convergence region.
struct ConvergenceGuard : std::domain_error {
    using std::domain_error::domain_error;
};

// Appendix approximation used where its smallness conditions fail.
struct ConditionViolated : std::domain_error {
    using std::domain_error::domain_error;
};

// Too many simulated paths stopped by the step cap instead of the margin rule.
struct TruncationExcess : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace erlangmax
