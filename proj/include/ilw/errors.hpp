#pragma once

#include <stdexcept>
#include <string>

namespace ilw {

/// Operation applied to the wrong member of the equation/measure family
/// (e.g. the deep-water symbol evaluated at the shallow limit point).
struct family_error : std::invalid_argument {
    explicit family_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Physical grid too small for the requested spectral content.
struct aliasing_error : std::invalid_argument {
    explicit aliasing_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Hermite degree beyond the supported cap.
struct degree_error : std::invalid_argument {
    explicit degree_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Importance-sampling ensemble with no usable weight.
struct ensemble_error : std::runtime_error {
    explicit ensemble_error(const std::string& what) : std::runtime_error(what) {}
};

/// Time stepper could not meet the conservation tolerance.
struct step_error : std::runtime_error {
    explicit step_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ilw
