#include "pgs2s/cells.hpp"

#include <cmath>

#include "pgs2s/activations.hpp"
#include "pgs2s/errors.hpp"

namespace pgs2s {

std::string to_string(CellKind k) {
    switch (k) {
        case CellKind::Lstm: return "lstm";
        case CellKind::Ernn: return "ernn";
        case CellKind::Gru: return "gru";
    }
    return "?";
}

CellKind cell_kind_from_string(const std::string& s) {
    if (s == "lstm") return CellKind::Lstm;
    if (s == "ernn") return CellKind::Ernn;
    if (s == "gru") return CellKind::Gru;
    throw ConfigError("unknown cell kind '" + s + "' (expected lstm|ernn|gru)");
}

CellParams::CellParams(CellKind kind_, std::size_t units_, std::size_t ext_in_,
                       const std::string& prefix)
    : kind(kind_), units(units_), ext_in(ext_in_) {
    if (units == 0 || ext_in == 0) throw DimensionError("cell: units and ext_in must be >= 1");
    const std::size_t w = gate_width();
    const auto add = [&](const char* name, std::size_t r, std::size_t c) {
        blocks.emplace_back(prefix + name, r, c);
    };
    switch (kind) {
        case CellKind::Lstm:
            add("U_f", units, w);
            add("U_i", units, w);
            add("U_c", units, w);
            add("U_o", units, w);
            add("b_f", units, 1);
            add("b_i", units, 1);
            add("b_c", units, 1);
            add("b_o", units, 1);
            break;
        case CellKind::Gru:
            add("U_z", units, w);
            add("U_r", units, w);
            add("U_h", units, w);
            add("b_z", units, 1);
            add("b_r", units, 1);
            add("b_h", units, 1);
            break;
        case CellKind::Ernn:
            add("U", units, w);
            add("b", units, 1);
            break;
    }
}

void CellParams::init(Rng& rng) {
    for (auto& b : blocks) {
        if (b.value.cols() == 1) {
            b.value.fill(0.0);
        } else {
            init_uniform_fan_in(b, gate_width(), rng);
        }
    }
    if (kind == CellKind::Lstm) {
        // blocks[4] is b_f: +1 stabilizes early training
        blocks[4].value.fill(1.0);
    }
}

ParamRefs CellParams::params() {
    ParamRefs refs;
    refs.reserve(blocks.size());
    for (auto& b : blocks) refs.push_back(&b);
    return refs;
}

namespace {

Matrix concat_rows(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("concat_rows: column mismatch");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    std::copy(top.flat().begin(), top.flat().end(), out.flat().begin());
    std::copy(bottom.flat().begin(), bottom.flat().end(),
              out.flat().begin() + static_cast<std::ptrdiff_t>(top.size()));
    return out;
}

Matrix rows_copy(const Matrix& m, std::size_t begin, std::size_t count) {
    Matrix out(count, m.cols());
    std::copy(m.flat().begin() + static_cast<std::ptrdiff_t>(begin * m.cols()),
              m.flat().begin() + static_cast<std::ptrdiff_t>((begin + count) * m.cols()),
              out.flat().begin());
    return out;
}

void add_rows_from(Matrix& dest, const Matrix& src, std::size_t src_begin) {
    const double* s = src.data() + src_begin * src.cols();
    double* d = dest.data();
    for (std::size_t i = 0; i < dest.size(); ++i) d[i] += s[i];
}

// gate = act(U z + b)
Matrix gate(const ParamBlock& u, const ParamBlock& b, const Matrix& z, bool use_sigmoid) {
    Matrix a = matmul(u.value, z);
    add_col_broadcast(a, b.value);
    if (use_sigmoid)
        sigmoid_in_place(a);
    else
        tanh_in_place(a);
    return a;
}

// accumulate dU += da z^T, db += row sums(da)
void accumulate_gate_grads(ParamBlock& u, ParamBlock& b, const Matrix& da, const Matrix& z) {
    add_matmul_nt(u.grad, da, z);
    add_row_sums(b.grad, da);
}

}  // namespace

void cell_forward(const CellParams& cell, const Matrix& h_prev, const Matrix& c_prev,
                  const Matrix& x_ext, CellStepCache& cache) {
    if (h_prev.rows() != cell.units || x_ext.rows() != cell.ext_in ||
        h_prev.cols() != x_ext.cols())
        throw DimensionError("cell_forward: input shapes do not match cell dimensions");
    cache.z = concat_rows(h_prev, x_ext);
    switch (cell.kind) {
        case CellKind::Lstm: {
            if (!c_prev.same_shape(h_prev)) throw DimensionError("cell_forward: c_prev shape");
            const auto& bl = cell.blocks;
            cache.f = gate(bl[0], bl[4], cache.z, true);
            cache.i = gate(bl[1], bl[5], cache.z, true);
            cache.g = gate(bl[2], bl[6], cache.z, false);
            cache.o = gate(bl[3], bl[7], cache.z, true);
            cache.c_prev = c_prev;
            hadamard(cache.i, cache.g, cache.c);
            Matrix fc;
            hadamard(cache.f, c_prev, fc);
            add_in_place(cache.c, fc);
            cache.tanh_c = tanh_act(cache.c);
            hadamard(cache.o, cache.tanh_c, cache.h);
            break;
        }
        case CellKind::Gru: {
            const auto& bl = cell.blocks;
            cache.zg = gate(bl[0], bl[3], cache.z, true);
            cache.r = gate(bl[1], bl[4], cache.z, true);
            Matrix rh;
            hadamard(cache.r, h_prev, rh);
            cache.zr = concat_rows(rh, x_ext);
            cache.cand = gate(bl[2], bl[5], cache.zr, false);
            // h = (1 - zg) ⊙ h_prev + zg ⊙ cand
            cache.h.resize(cell.units, h_prev.cols());
            const double* pz = cache.zg.data();
            const double* ph = h_prev.data();
            const double* pc = cache.cand.data();
            double* out = cache.h.data();
            for (std::size_t idx = 0; idx < cache.h.size(); ++idx)
                out[idx] = (1.0 - pz[idx]) * ph[idx] + pz[idx] * pc[idx];
            break;
        }
        case CellKind::Ernn: {
            cache.h = gate(cell.blocks[0], cell.blocks[1], cache.z, false);
            break;
        }
    }
    if (!cache.h.all_finite() || (cell.has_cell_state() && !cache.c.all_finite()))
        throw NumericError("cell_forward: non-finite activation");
}

void cell_backward(CellParams& cell, const CellStepCache& cache, const Matrix& dh,
                   Matrix& dc_inout, Matrix& dh_prev, Matrix& dx_ext) {
    const std::size_t n = cell.units, x = cell.ext_in, b = dh.cols();
    Matrix dz(n + x, b);
    switch (cell.kind) {
        case CellKind::Lstm: {
            auto& bl = cell.blocks;
            Matrix da(n, b), dc(n, b);
            // dc = dc_in + dh ⊙ o ⊙ (1 - tanh(c)^2)
            {
                const double* pdh = dh.data();
                const double* po = cache.o.data();
                const double* pt = cache.tanh_c.data();
                const double* pin = dc_inout.data();
                double* pdc = dc.data();
                for (std::size_t idx = 0; idx < dc.size(); ++idx)
                    pdc[idx] = pin[idx] + pdh[idx] * po[idx] * (1.0 - pt[idx] * pt[idx]);
            }
            // output gate
            {
                const double* pdh = dh.data();
                const double* pt = cache.tanh_c.data();
                const double* po = cache.o.data();
                double* pda = da.data();
                for (std::size_t idx = 0; idx < da.size(); ++idx)
                    pda[idx] = pdh[idx] * pt[idx] * po[idx] * (1.0 - po[idx]);
            }
            accumulate_gate_grads(bl[3], bl[7], da, cache.z);
            add_matmul_tn(dz, bl[3].value, da);
            // input gate
            {
                const double* pdc = dc.data();
                const double* pg = cache.g.data();
                const double* pi = cache.i.data();
                double* pda = da.data();
                for (std::size_t idx = 0; idx < da.size(); ++idx)
                    pda[idx] = pdc[idx] * pg[idx] * pi[idx] * (1.0 - pi[idx]);
            }
            accumulate_gate_grads(bl[1], bl[5], da, cache.z);
            add_matmul_tn(dz, bl[1].value, da);
            // candidate
            {
                const double* pdc = dc.data();
                const double* pi = cache.i.data();
                const double* pg = cache.g.data();
                double* pda = da.data();
                for (std::size_t idx = 0; idx < da.size(); ++idx)
                    pda[idx] = pdc[idx] * pi[idx] * (1.0 - pg[idx] * pg[idx]);
            }
            accumulate_gate_grads(bl[2], bl[6], da, cache.z);
            add_matmul_tn(dz, bl[2].value, da);
            // forget gate
            {
                const double* pdc = dc.data();
                const double* pc = cache.c_prev.data();
                const double* pf = cache.f.data();
                double* pda = da.data();
                for (std::size_t idx = 0; idx < da.size(); ++idx)
                    pda[idx] = pdc[idx] * pc[idx] * pf[idx] * (1.0 - pf[idx]);
            }
            accumulate_gate_grads(bl[0], bl[4], da, cache.z);
            add_matmul_tn(dz, bl[0].value, da);
            // chain to previous cell state
            hadamard(dc, cache.f, dc_inout);
            break;
        }
        case CellKind::Gru: {
            auto& bl = cell.blocks;
            const Matrix h_prev = rows_copy(cache.z, 0, n);
            Matrix da_z(n, b), da_n(n, b);
            // update gate and candidate pre-activations
            {
                const double* pdh = dh.data();
                const double* pz = cache.zg.data();
                const double* pn = cache.cand.data();
                const double* ph = h_prev.data();
                double* pz_out = da_z.data();
                double* pn_out = da_n.data();
                for (std::size_t idx = 0; idx < da_z.size(); ++idx) {
                    pz_out[idx] = pdh[idx] * (pn[idx] - ph[idx]) * pz[idx] * (1.0 - pz[idx]);
                    pn_out[idx] = pdh[idx] * pz[idx] * (1.0 - pn[idx] * pn[idx]);
                }
            }
            accumulate_gate_grads(bl[2], bl[5], da_n, cache.zr);
            Matrix dzr(n + x, b);
            add_matmul_tn(dzr, bl[2].value, da_n);
            // reset gate via q = d(r ⊙ h_prev)
            Matrix da_r(n, b);
            {
                const double* pq = dzr.data();  // first n rows of dzr
                const double* ph = h_prev.data();
                const double* pr = cache.r.data();
                double* pda = da_r.data();
                for (std::size_t idx = 0; idx < da_r.size(); ++idx)
                    pda[idx] = pq[idx] * ph[idx] * pr[idx] * (1.0 - pr[idx]);
            }
            accumulate_gate_grads(bl[0], bl[3], da_z, cache.z);
            accumulate_gate_grads(bl[1], bl[4], da_r, cache.z);
            add_matmul_tn(dz, bl[0].value, da_z);
            add_matmul_tn(dz, bl[1].value, da_r);
            // dh_prev contributions assembled below; stash the direct and
            // reset-path parts into dz's top rows so the generic split applies
            {
                double* pdz = dz.data();  // top n rows
                const double* pdh = dh.data();
                const double* pz = cache.zg.data();
                const double* pq = dzr.data();
                const double* pr = cache.r.data();
                for (std::size_t idx = 0; idx < n * b; ++idx)
                    pdz[idx] += pdh[idx] * (1.0 - pz[idx]) + pq[idx] * pr[idx];
            }
            // external-input rows of dzr also feed x_ext
            {
                double* pdst = dz.data() + n * b;
                const double* psrc = dzr.data() + n * b;
                for (std::size_t idx = 0; idx < x * b; ++idx) pdst[idx] += psrc[idx];
            }
            break;
        }
        case CellKind::Ernn: {
            Matrix da(n, b);
            const double* pdh = dh.data();
            const double* ph = cache.h.data();
            double* pda = da.data();
            for (std::size_t idx = 0; idx < da.size(); ++idx)
                pda[idx] = pdh[idx] * (1.0 - ph[idx] * ph[idx]);
            accumulate_gate_grads(cell.blocks[0], cell.blocks[1], da, cache.z);
            add_matmul_tn(dz, cell.blocks[0].value, da);
            break;
        }
    }
    dh_prev = rows_copy(dz, 0, n);
    dx_ext.resize(x, b);
    dx_ext.fill(0.0);
    add_rows_from(dx_ext, dz, n);
}

}  // namespace pgs2s
