#include "pgs2s/param.hpp"

#include <cmath>
#include <cstring>

namespace pgs2s {

void zero_grads(const ParamRefs& params) {
    for (ParamBlock* p : params) p->zero_grad();
}

void init_uniform_fan_in(ParamBlock& p, std::size_t fan_in, Rng& rng) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (double& v : p.value.flat()) v = rng.uniform(-bound, bound);
}

std::vector<double> snapshot_values(const ParamRefs& params) {
    std::vector<double> out;
    for (const ParamBlock* p : params) {
        const auto f = p->value.flat();
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

bool values_equal(const ParamRefs& params, const std::vector<double>& snapshot) {
    std::size_t off = 0;
    for (const ParamBlock* p : params) {
        const auto f = p->value.flat();
        if (off + f.size() > snapshot.size()) return false;
        if (std::memcmp(f.data(), snapshot.data() + off, f.size() * sizeof(double)) != 0)
            return false;
        off += f.size();
    }
    return off == snapshot.size();
}

}  // namespace pgs2s
