#pragma once

#include <string>

#include "gbds/system.hpp"

namespace gbds {

/// Fixed-format overview of a system: boundary paths, singular vertices,
/// W*, groupoid size and the range projections S_{α,I_α}S_{α,I_α}*.
/// ∂E is listed exactly when finite, otherwise paths of depth ≤ depth.
std::string boundary_summary(const System& sys, std::size_t depth);

}  // namespace gbds
