#pragma once

#include <string>
#include <vector>

#include "pgs2s/series.hpp"

namespace pgs2s {

// Loads a comma-separated series: one header row, one row per time step,
// rows kept in file order (assumed chronological). Columns not named in
// target/exogenous (e.g. a timestamp) are ignored. Errors:
//   missing column           -> SchemaError
//   non-numeric cell         -> ParseError (names the row)
//   blank cell / short row   -> GapError (names the row; no imputation)
TimeSeries load_csv(const std::string& path, const std::string& target_column,
                    const std::vector<std::string>& exogenous_columns = {});

// Writes a single-channel series as "t,y" rows (t = 0,1,2,...).
void write_csv(const TimeSeries& series, const std::string& path);

}  // namespace pgs2s
