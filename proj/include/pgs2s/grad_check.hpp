#pragma once

#include <functional>

#include "pgs2s/param.hpp"
#include "pgs2s/rng.hpp"

namespace pgs2s {

// Compares analytic gradients already stored in params[i]->grad against
// central finite differences of f. f must be a deterministic forward-only
// evaluation of the same scalar the analytic gradients were computed for.
//
// Returns max over probed coordinates of
//   |analytic - central_difference| / max(1, |central_difference|).
//
// max_coords_per_block == 0 probes every coordinate; otherwise a random
// subset per block drawn from coord_rng (required in that case).
double grad_check(const std::function<double()>& f, const ParamRefs& params, double h = 1e-5,
                  std::size_t max_coords_per_block = 0, Rng* coord_rng = nullptr);

}  // namespace pgs2s
