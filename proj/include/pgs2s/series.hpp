#pragma once

#include <string>
#include <vector>

#include "pgs2s/matrix.hpp"

namespace pgs2s {

// A (possibly multivariate) series: one row per time step, one column per
// channel. Column `target_channel` is the variable being predicted; the
// remaining columns are exogenous inputs.
struct TimeSeries {
    std::string name;
    std::string frequency;  // informational label
    std::vector<std::string> channel_names;
    Matrix values;  // T x m
    std::size_t target_channel = 0;

    std::size_t length() const { return values.rows(); }
    std::size_t channels() const { return values.cols(); }
    void validate() const;  // finite values, channel bookkeeping
};

// Per-channel min-max parameters, fit on the training slice only.
struct ScalerParams {
    std::vector<double> mins;
    std::vector<double> maxs;

    std::size_t channels() const { return mins.size(); }
    double apply_one(double x, std::size_t ch) const {
        return (x - mins[ch]) / (maxs[ch] - mins[ch]);
    }
    double invert_one(double x, std::size_t ch) const {
        return x * (maxs[ch] - mins[ch]) + mins[ch];
    }
};

// rows: the training slice of the raw series (T_train x m).
// Throws DegenerateChannelError if some channel is constant.
ScalerParams fit_scaler(const Matrix& rows);
Matrix apply_scaler(const ScalerParams& s, const Matrix& rows);
Matrix invert_scaler(const ScalerParams& s, const Matrix& rows);

struct SplitSpec {
    double train_frac = 0.64;
    double val_frac = 0.16;
    double test_frac = 0.20;
    bool chronological = true;

    void validate() const;  // fractions sum to 1
};

// One supervised sample: an L x m input window and the H target values of
// the target channel. `anchor` is the global index t of the window's last row.
struct Sample {
    Matrix window;               // L x m
    std::vector<double> target;  // H
    std::size_t anchor;
};

struct WindowedDataset {
    std::size_t lags = 0;     // L
    std::size_t horizon = 0;  // H
    std::size_t channels = 0;
    std::size_t target_channel = 0;
    std::vector<Sample> samples;

    std::size_t size() const { return samples.size(); }
    // y_t of sample i: last target-channel value of its window
    double last_input_value(std::size_t i) const {
        return samples[i].window(lags - 1, target_channel);
    }
};

struct SplitDatasets {
    WindowedDataset train, val, test;
};

// Windows a single contiguous segment, stride 1, exhaustive.
WindowedDataset window_segment(const Matrix& segment, std::size_t target_channel, std::size_t L,
                               std::size_t H, std::size_t global_offset);

// Chronological split of the series first, then windowing within each split;
// no sample straddles a split boundary. Throws TaskSizeError if any split is
// too short for one sample.
SplitDatasets window_and_split(const TimeSeries& series, std::size_t L, std::size_t H,
                               const SplitSpec& spec);

// Split boundaries used by window_and_split: [0, n_train), [n_train,
// n_train+n_val), [n_train+n_val, n).
void split_sizes(std::size_t n, const SplitSpec& spec, std::size_t& n_train, std::size_t& n_val,
                 std::size_t& n_test);

}  // namespace pgs2s
