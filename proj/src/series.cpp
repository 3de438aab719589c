#include "pgs2s/series.hpp"

#include <cmath>

#include "pgs2s/errors.hpp"

namespace pgs2s {

void TimeSeries::validate() const {
    if (values.cols() == 0 || values.rows() == 0) throw SchemaError("series '" + name + "' is empty");
    if (target_channel >= values.cols())
        throw SchemaError("series '" + name + "': target channel out of range");
    if (!channel_names.empty() && channel_names.size() != values.cols())
        throw SchemaError("series '" + name + "': channel name count mismatch");
    if (!values.all_finite())
        throw NumericError("series '" + name + "' contains non-finite values");
}

ScalerParams fit_scaler(const Matrix& rows) {
    if (rows.rows() == 0) throw TaskSizeError("fit_scaler: empty training slice");
    ScalerParams s;
    const std::size_t m = rows.cols();
    s.mins.assign(m, 0.0);
    s.maxs.assign(m, 0.0);
    for (std::size_t c = 0; c < m; ++c) {
        double lo = rows(0, c), hi = rows(0, c);
        for (std::size_t r = 1; r < rows.rows(); ++r) {
            lo = std::min(lo, rows(r, c));
            hi = std::max(hi, rows(r, c));
        }
        if (!(hi > lo))
            throw DegenerateChannelError("fit_scaler: channel " + std::to_string(c) +
                                         " is constant (min == max)");
        s.mins[c] = lo;
        s.maxs[c] = hi;
    }
    return s;
}

Matrix apply_scaler(const ScalerParams& s, const Matrix& rows) {
    if (rows.cols() != s.channels()) throw DimensionError("apply_scaler: channel count mismatch");
    Matrix out(rows.rows(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) out(r, c) = s.apply_one(rows(r, c), c);
    return out;
}

Matrix invert_scaler(const ScalerParams& s, const Matrix& rows) {
    if (rows.cols() != s.channels()) throw DimensionError("invert_scaler: channel count mismatch");
    Matrix out(rows.rows(), rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c) out(r, c) = s.invert_one(rows(r, c), c);
    return out;
}

void SplitSpec::validate() const {
    const double sum = train_frac + val_frac + test_frac;
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("split fractions must sum to 1 (got " + std::to_string(sum) + ")");
    if (train_frac <= 0 || val_frac < 0 || test_frac < 0)
        throw ConfigError("split fractions must be non-negative with train > 0");
}

void split_sizes(std::size_t n, const SplitSpec& spec, std::size_t& n_train, std::size_t& n_val,
                 std::size_t& n_test) {
    spec.validate();
    n_train = static_cast<std::size_t>(static_cast<double>(n) * spec.train_frac);
    n_val = static_cast<std::size_t>(static_cast<double>(n) * spec.val_frac);
    n_test = n - n_train - n_val;
}

WindowedDataset window_segment(const Matrix& segment, std::size_t target_channel, std::size_t L,
                               std::size_t H, std::size_t global_offset) {
    WindowedDataset ds;
    ds.lags = L;
    ds.horizon = H;
    ds.channels = segment.cols();
    ds.target_channel = target_channel;
    if (L == 0 || H == 0) throw ConfigError("window_segment: L and H must be >= 1");
    if (segment.rows() < L + H)
        throw TaskSizeError("window_segment: segment length " + std::to_string(segment.rows()) +
                            " < L+H = " + std::to_string(L + H));
    const std::size_t count = segment.rows() - L - H + 1;
    ds.samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Sample s;
        s.window.resize(L, segment.cols());
        for (std::size_t r = 0; r < L; ++r)
            for (std::size_t c = 0; c < segment.cols(); ++c) s.window(r, c) = segment(i + r, c);
        s.target.resize(H);
        for (std::size_t k = 0; k < H; ++k) s.target[k] = segment(i + L + k, target_channel);
        s.anchor = global_offset + i + L - 1;
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

SplitDatasets window_and_split(const TimeSeries& series, std::size_t L, std::size_t H,
                               const SplitSpec& spec) {
    series.validate();
    std::size_t n_train = 0, n_val = 0, n_test = 0;
    split_sizes(series.length(), spec, n_train, n_val, n_test);

    const auto slice = [&](std::size_t begin, std::size_t len) {
        Matrix seg(len, series.channels());
        for (std::size_t r = 0; r < len; ++r)
            for (std::size_t c = 0; c < series.channels(); ++c)
                seg(r, c) = series.values(begin + r, c);
        return seg;
    };

    SplitDatasets out;
    out.train = window_segment(slice(0, n_train), series.target_channel, L, H, 0);
    out.val = window_segment(slice(n_train, n_val), series.target_channel, L, H, n_train);
    out.test =
        window_segment(slice(n_train + n_val, n_test), series.target_channel, L, H, n_train + n_val);
    return out;
}

}  // namespace pgs2s
