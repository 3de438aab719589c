#include "pgs2s/mackey_glass.hpp"

#include <cmath>
#include <deque>
#include <string>

#include "pgs2s/errors.hpp"

namespace pgs2s {

namespace {

struct DelayBuffer {
    // ring[i] holds x(t_now - i*dt); dring the matching derivatives.
    std::deque<double> ring, dring;
    double dt;
    double history;
    double t_now = 0.0;
    double delay;

    DelayBuffer(double delay_, double dt_, double history_) : dt(dt_), history(history_), delay(delay_) {
        const auto len = static_cast<std::size_t>(std::lround(delay_ / dt_)) + 2;
        ring.assign(len, history_);
        dring.assign(len, 0.0);  // constant history
    }

    // x(t_now + offset*dt - delay), offset in [0, 1].
    double delayed(double offset) const {
        const double tq = t_now + offset * dt - delay;
        if (tq <= 1e-12) return history;  // exact constant history
        const double pos = delay / dt - offset;  // steps back from t_now
        const auto i0 = static_cast<std::size_t>(std::floor(pos));
        const double frac = pos - static_cast<double>(i0);
        const double newer = ring[i0];
        if (frac < 1e-12) return newer;
        const double older = ring[i0 + 1];
        // cubic Hermite on [older, newer], s = 0 at the older node
        const double s = 1.0 - frac;
        const double da = dring[i0 + 1] * dt;
        const double db = dring[i0] * dt;
        const double s2 = s * s;
        const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        const double h10 = s * (1.0 - s) * (1.0 - s);
        const double h01 = s2 * (3.0 - 2.0 * s);
        const double h11 = s2 * (s - 1.0);
        return h00 * older + h10 * da + h01 * newer + h11 * db;
    }

    void push(double x, double dx) {
        ring.push_front(x);
        ring.pop_back();
        dring.push_front(dx);
        dring.pop_back();
    }
};

}  // namespace

TimeSeries mackey_glass(std::size_t n, const MgOptions& opt) {
    if (opt.dt <= 0.0 || opt.sample_every <= 0.0 || opt.delay <= 0.0)
        throw ConfigError("mackey_glass: dt, sample_every and delay must be positive");
    const double ratio = opt.sample_every / opt.dt;
    const auto steps_per_sample = static_cast<std::size_t>(std::lround(ratio));
    if (steps_per_sample == 0 || std::abs(ratio - static_cast<double>(steps_per_sample)) > 1e-9)
        throw ConfigError("mackey_glass: dt must divide sample_every");
    if (std::abs(opt.linear_sign) != 1.0)
        throw ConfigError("mackey_glass: linear_sign must be +1 or -1");

    const auto deriv = [&](double x, double xd) {
        const double p = xd * xd;        // xd^2
        const double p4 = p * p;         // xd^4
        const double xd10 = p4 * p4 * p; // xd^10
        return 0.2 * xd / (1.0 + xd10) + opt.linear_sign * 0.1 * x;
    };

    TimeSeries ts;
    ts.name = "mackey-glass";
    ts.frequency = "synthetic";
    ts.channel_names = {"y"};
    ts.values.resize(n, 1);
    if (n == 0) return ts;

    DelayBuffer buf(opt.delay, opt.dt, opt.history);
    double x = opt.history;
    buf.dring[0] = deriv(x, buf.delayed(0.0));  // right-derivative at t = 0
    ts.values(0, 0) = x;

    const double dt = opt.dt;
    std::size_t written = 1;
    std::size_t step = 0;
    while (written < n) {
        const double xd0 = buf.delayed(0.0);
        const double xdh = buf.delayed(0.5);
        const double xd1 = buf.delayed(1.0);
        const double k1 = deriv(x, xd0);
        const double k2 = deriv(x + 0.5 * dt * k1, xdh);
        const double k3 = deriv(x + 0.5 * dt * k2, xdh);
        const double k4 = deriv(x + dt * k3, xd1);
        x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        buf.t_now += dt;
        if (!std::isfinite(x))
            throw DivergenceError("mackey_glass: state became non-finite at t = " +
                                  std::to_string(buf.t_now));
        buf.push(x, 0.0);
        buf.dring[0] = deriv(x, buf.delayed(0.0));
        ++step;
        if (step % steps_per_sample == 0) {
            ts.values(written, 0) = x;
            ++written;
        }
    }
    return ts;
}

}  // namespace pgs2s
