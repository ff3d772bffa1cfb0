#pragma once

#include <functional>
#include <optional>

#include "rcperiod/unipoly.hpp"

namespace rcp {

Complex principal_root5(Complex z);

// Fifth root of arg(s) continued along the straight segment anchor -> s.
// At the anchor the principal root is used unless anchor_value is given.
// Throws Errc::BranchError if arg vanishes on (or numerically near) the segment.
Complex continue_root5(const std::function<Complex(Complex)>& arg, Complex s, Complex anchor = 0.0,
                       std::optional<Complex> anchor_value = std::nullopt);

} // namespace rcp
