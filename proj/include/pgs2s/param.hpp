#pragma once

#include <string>
#include <vector>

#include "pgs2s/matrix.hpp"
#include "pgs2s/rng.hpp"

namespace pgs2s {

// A learnable weight matrix plus its gradient slot.
struct ParamBlock {
    std::string name;
    Matrix value;
    Matrix grad;

    ParamBlock() = default;
    ParamBlock(std::string n, std::size_t rows, std::size_t cols)
        : name(std::move(n)), value(rows, cols), grad(rows, cols) {}

    void zero_grad() { grad.fill(0.0); }
};

using ParamRefs = std::vector<ParamBlock*>;

void zero_grads(const ParamRefs& params);

// uniform(-1/sqrt(fan_in), +1/sqrt(fan_in))
void init_uniform_fan_in(ParamBlock& p, std::size_t fan_in, Rng& rng);

// Flattened copy of all values, in declared block order (byte-compare helper).
std::vector<double> snapshot_values(const ParamRefs& params);
bool values_equal(const ParamRefs& params, const std::vector<double>& snapshot);

}  // namespace pgs2s
