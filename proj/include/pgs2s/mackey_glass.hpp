#pragma once

#include "pgs2s/series.hpp"

namespace pgs2s {

// Generator for the Mackey-Glass delay differential equation
//
//   dx/dt = 0.2 x(t - delay) / (1 + x(t - delay)^10) + linear_sign * 0.1 x(t)
//
// with constant history x(t) = history for t <= 0.
//
// linear_sign = -1 is the standard benchmark form, which settles onto the
// familiar chaotic attractor. linear_sign = +1 is a variant that grows
// without bound and is rejected by the integrator with DivergenceError once
// the state leaves the representable range; it is exposed only as a switch.
struct MgOptions {
    double delay = 17.0;
    double history = 1.2;
    double dt = 0.1;           // integrator step
    double sample_every = 1.0; // output spacing; dt must divide it
    double linear_sign = -1.0; // sign of the 0.1 x(t) term
};

// Returns n samples at t = 0, sample_every, 2*sample_every, ...
// Integration: classical RK4 with a cubic-Hermite delay buffer and exact
// constant-history lookups for delayed arguments <= 0.
TimeSeries mackey_glass(std::size_t n, const MgOptions& opt = {});

}  // namespace pgs2s
