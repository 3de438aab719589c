#pragma once

#include <string>
#include <vector>

#include "pgs2s/param.hpp"

namespace pgs2s {

enum class CellKind { Lstm, Ernn, Gru };

std::string to_string(CellKind k);
CellKind cell_kind_from_string(const std::string& s);

// One recurrent cell operating on batched column vectors. The gate input at
// each step is the concatenation [h_prev; x_ext] of width units + ext_in.
//
// Block layout (fixed, serialized in this order):
//   LSTM: U_f U_i U_c U_o b_f b_i b_c b_o
//   GRU:  U_z U_r U_h b_z b_r b_h
//   ERNN: U b
struct CellParams {
    CellKind kind;
    std::size_t units;   // state dimension
    std::size_t ext_in;  // external input width
    std::vector<ParamBlock> blocks;

    CellParams(CellKind kind, std::size_t units, std::size_t ext_in, const std::string& prefix);

    // uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights, zero biases,
    // LSTM forget-gate bias +1
    void init(Rng& rng);
    ParamRefs params();
    std::size_t gate_width() const { return units + ext_in; }
    bool has_cell_state() const { return kind == CellKind::Lstm; }
};

// Forward-pass values one backward step needs.
struct CellStepCache {
    Matrix z;  // (units+ext_in) x B gate input [h_prev; x_ext]
    Matrix h;  // units x B new hidden state
    // LSTM
    Matrix f, i, g, o, c_prev, c, tanh_c;
    // GRU
    Matrix zg, r, zr, cand;
};

// h_prev, x_ext -> cache (including new h and, for LSTM, new c).
// Throws NumericError if the new state is non-finite.
void cell_forward(const CellParams& cell, const Matrix& h_prev, const Matrix& c_prev,
                  const Matrix& x_ext, CellStepCache& cache);

// Accumulates parameter gradients into cell.blocks[*].grad.
// dh: gradient w.r.t. this step's h. dc_inout: carries the cell-state gradient
// chain (LSTM; ignored otherwise); on return it holds the gradient w.r.t. the
// previous step's c. dh_prev/dx_ext receive the input-side gradients.
void cell_backward(CellParams& cell, const CellStepCache& cache, const Matrix& dh,
                   Matrix& dc_inout, Matrix& dh_prev, Matrix& dx_ext);

}  // namespace pgs2s
