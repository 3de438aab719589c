#include "pgs2s/grad_check.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pgs2s/errors.hpp"

namespace pgs2s {

double grad_check(const std::function<double()>& f, const ParamRefs& params, double h,
                  std::size_t max_coords_per_block, Rng* coord_rng) {
    if (max_coords_per_block > 0 && coord_rng == nullptr)
        throw ContractError("grad_check: coordinate sampling requires an rng");
    double worst = 0.0;
    for (ParamBlock* p : params) {
        const std::size_t n = p->value.size();
        std::vector<std::size_t> coords;
        if (max_coords_per_block == 0 || max_coords_per_block >= n) {
            coords.resize(n);
            std::iota(coords.begin(), coords.end(), std::size_t{0});
        } else {
            for (std::size_t i = 0; i < max_coords_per_block; ++i)
                coords.push_back(coord_rng->index(n));
        }
        for (const std::size_t c : coords) {
            double* slot = p->value.data() + c;
            const double saved = *slot;
            *slot = saved + h;
            const double fp = f();
            *slot = saved - h;
            const double fm = f();
            *slot = saved;
            if (!std::isfinite(fp) || !std::isfinite(fm))
                throw ProbeError("grad_check: non-finite value at perturbed point of '" +
                                 p->name + "'");
            const double fd = (fp - fm) / (2.0 * h);
            const double analytic = p->grad.data()[c];
            const double rel = std::abs(analytic - fd) / std::max(1.0, std::abs(fd));
            worst = std::max(worst, rel);
        }
    }
    return worst;
}

}  // namespace pgs2s
