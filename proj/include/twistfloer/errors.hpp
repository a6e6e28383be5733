#ifndef TWISTFLOER_ERRORS_HPP
#define TWISTFLOER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twistfloer {

/// Dimension or basis mismatch in a linear-algebra operation.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested twist curve cannot exist on the given surface.
struct InvalidCurveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The surface/curve pair violates one of the topological hypotheses
/// required for the structure maps. Carries the failing requirement.
struct UnsupportedTopologyError : std::domain_error {
    explicit UnsupportedTopologyError(const std::string& failing_requirement)
        : std::domain_error("unsupported topology: " + failing_requirement),
          requirement(failing_requirement) {}
    std::string requirement;
};

/// A twist-generator label at an interior slice was used where only the
/// two boundary slices are meaningful.
struct NotABoundaryLabelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to reach its configured tolerance.
struct NumericError : std::runtime_error {
    NumericError(const std::string& what, double achieved_residual)
        : std::runtime_error(what), achieved(achieved_residual) {}
    double achieved;
};

}  // namespace twistfloer

#endif
