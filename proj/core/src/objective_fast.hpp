#pragma once

#include <string_view>

#include "bound_kernels.hpp"

namespace ezeta::detail {

/// Index of a known objective; usage error otherwise.
int objective_index(std::string_view objective_id);

/// Binary64 evaluation for search. `x` follows objective_parameters order;
/// NaN marks an absent optional parameter.
Eval<double> fast_objective(int index, const double* x, double ladder_sum);

}  // namespace ezeta::detail
