#pragma once

#include "spw/fq_matrix.hpp"

namespace spw {

/// gamma(B, psi_a) = sum over y of psi_a(-1/2 y^t B y).
/// Throws std::domain_error("degenerate form") for singular B.
CycloNum gauss_sum(const FqMatrix& b, FqRaw a);

}  // namespace spw
