#include "pgs2s/seq2seq.hpp"

#include <cmath>

#include "pgs2s/errors.hpp"

namespace pgs2s {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::FreeRunning: return "fr";
        case Regime::TeacherForcing: return "tf";
        case Regime::ScheduledSampling: return "ss";
        case Regime::PolicyGradient: return "pg";
        case Regime::Teach: return "teach";
    }
    return "?";
}

Regime regime_from_string(const std::string& s) {
    if (s == "fr") return Regime::FreeRunning;
    if (s == "tf") return Regime::TeacherForcing;
    if (s == "ss") return Regime::ScheduledSampling;
    if (s == "pg") return Regime::PolicyGradient;
    if (s == "teach") return Regime::Teach;
    throw ConfigError("unknown regime '" + s + "'");
}

SeqParams::SeqParams(CellKind kind_, std::size_t enc_units_, std::size_t dec_units_,
                     std::size_t input_channels_)
    : kind(kind_),
      enc_units(enc_units_),
      dec_units(dec_units_),
      input_channels(input_channels_),
      enc(kind_, enc_units_, input_channels_, "enc."),
      dec(kind_, dec_units_, 1 + enc_units_, "dec."),
      v_out("v_out", 1, dec_units_),
      b_out("b_out", 1, 1) {
    if (enc_units != dec_units)
        throw ConfigError("SeqParams: enc_units must equal dec_units (the encoder's final "
                          "hidden state initializes the decoder state)");
}

void SeqParams::init(Rng& rng) {
    enc.init(rng);
    dec.init(rng);
    init_uniform_fan_in(v_out, dec_units, rng);
    b_out.value.fill(0.0);
}

ParamRefs SeqParams::params() {
    ParamRefs refs = enc.params();
    const ParamRefs d = dec.params();
    refs.insert(refs.end(), d.begin(), d.end());
    refs.push_back(&v_out);
    refs.push_back(&b_out);
    return refs;
}

EncodeCache encode_steps(const SeqParams& p, const std::vector<Matrix>& xs) {
    if (xs.empty()) throw ContractError("encode: empty input sequence");
    const std::size_t batch = xs[0].cols();
    EncodeCache cache;
    cache.batch = batch;
    cache.steps.resize(xs.size());
    Matrix h(p.enc_units, batch), c(p.enc_units, batch);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        cell_forward(p.enc, h, c, xs[j], cache.steps[j]);
        h = cache.steps[j].h;
        if (p.enc.has_cell_state()) c = cache.steps[j].c;
    }
    cache.context = h;
    if (p.enc.has_cell_state()) cache.final_cell = c;
    return cache;
}

EncodeCache encode(const SeqParams& p, const WindowedDataset& ds,
                   std::span<const std::size_t> indices) {
    if (ds.channels != p.input_channels)
        throw DimensionError("encode: dataset channel count does not match model");
    const std::size_t batch = indices.size();
    std::vector<Matrix> xs(ds.lags);
    for (std::size_t j = 0; j < ds.lags; ++j) {
        xs[j].resize(p.input_channels, batch);
        for (std::size_t b = 0; b < batch; ++b) {
            const Sample& s = ds.samples[indices[b]];
            for (std::size_t ch = 0; ch < p.input_channels; ++ch) xs[j](ch, b) = s.window(j, ch);
        }
    }
    return encode_steps(p, xs);
}

namespace {

void validate_decode_options(const DecodeOptions& opt, std::size_t horizon) {
    const bool training = opt.phase == Phase::Train;
    switch (opt.regime) {
        case Regime::TeacherForcing:
        case Regime::ScheduledSampling:
            if (training && opt.truth == nullptr)
                throw ContractError("decode: training TF/SS requires the ground-truth sequence");
            if (training && opt.truth != nullptr && opt.truth->rows() != horizon)
                throw DimensionError("decode: truth must have H rows");
            if (opt.regime == Regime::ScheduledSampling && training && opt.rng == nullptr)
                throw ContractError("decode: training SS requires an rng for coin flips");
            break;
        case Regime::PolicyGradient:
            if (opt.chooser == nullptr)
                throw ContractError("decode: PG regime requires an input chooser");
            if (opt.aux_inputs == nullptr)
                throw ContractError("decode: PG regime requires auxiliary pool inputs");
            break;
        case Regime::Teach:
            if (opt.teach_model < 0) throw ContractError("decode: Teach regime needs a pool index");
            if (opt.teach_model != opt.decoder_pool_index && opt.aux_inputs == nullptr)
                throw ContractError("decode: Teach regime requires auxiliary pool inputs");
            break;
        case Regime::FreeRunning: break;
    }
}

}  // namespace

DecodeResult decode(const SeqParams& p, const EncodeCache& enc, const Matrix& first_input,
                    std::size_t horizon, const DecodeOptions& opt) {
    if (horizon == 0) throw ContractError("decode: horizon must be >= 1");
    validate_decode_options(opt, horizon);
    const std::size_t batch = enc.batch;
    if (first_input.rows() != 1 || first_input.cols() != batch)
        throw DimensionError("decode: first_input must be 1 x batch");

    const bool pool_driven = opt.regime == Regime::PolicyGradient || opt.regime == Regime::Teach;
    const bool training = opt.phase == Phase::Train;

    DecodeResult res;
    res.preds.resize(horizon, batch);
    res.provenance.assign(horizon, std::vector<Provenance>(batch));
    if (pool_driven) res.actions.assign(horizon, std::vector<int>(batch, -1));
    res.steps.resize(horizon);

    Matrix h = enc.context;
    Matrix c = p.dec.has_cell_state() ? enc.final_cell : Matrix(p.dec_units, batch);
    Matrix x_ext(1 + p.enc_units, batch);
    Matrix input_row = first_input;
    for (std::size_t b = 0; b < batch; ++b) res.provenance[0][b].kind = Provenance::InitialTruth;

    std::vector<int> actions(batch);
    for (std::size_t k = 1; k <= horizon; ++k) {
        // gate input: [s_{k-1}; fed value; context]
        for (std::size_t b = 0; b < batch; ++b) x_ext(0, b) = input_row(0, b);
        for (std::size_t rix = 0; rix < p.enc_units; ++rix)
            for (std::size_t b = 0; b < batch; ++b) x_ext(1 + rix, b) = enc.context(rix, b);
        CellStepCache& step = res.steps[k - 1];
        cell_forward(p.dec, h, c, x_ext, step);
        h = step.h;
        if (p.dec.has_cell_state()) c = step.c;
        // output layer: yhat = V s_k + b
        for (std::size_t b = 0; b < batch; ++b) {
            double y = p.b_out.value(0, 0);
            for (std::size_t u = 0; u < p.dec_units; ++u) y += p.v_out.value(0, u) * h(u, b);
            res.preds(k - 1, b) = y;
        }
        if (opt.record_states) res.states.push_back(h);

        if (pool_driven) {
            if (opt.regime == Regime::PolicyGradient) {
                opt.chooser->choose(h, k, opt.phase, actions);
            } else {
                std::fill(actions.begin(), actions.end(), opt.teach_model);
            }
            res.actions[k - 1] = actions;
        }
        if (k == horizon) break;

        // choose the input consumed at step k+1: a prediction of y_{t+k}
        for (std::size_t b = 0; b < batch; ++b) {
            Provenance& prov = res.provenance[k][b];
            double v = 0.0;
            switch (opt.regime) {
                case Regime::FreeRunning:
                    v = res.preds(k - 1, b);
                    prov.kind = Provenance::Self;
                    break;
                case Regime::TeacherForcing:
                    if (training) {
                        v = (*opt.truth)(k - 1, b);
                        prov.kind = Provenance::Truth;
                    } else {
                        v = res.preds(k - 1, b);
                        prov.kind = Provenance::Self;
                    }
                    break;
                case Regime::ScheduledSampling:
                    if (training && opt.rng->bernoulli(opt.ss_truth_prob)) {
                        v = (*opt.truth)(k - 1, b);
                        prov.kind = Provenance::Truth;
                    } else {
                        v = res.preds(k - 1, b);
                        prov.kind = Provenance::Self;
                    }
                    break;
                case Regime::PolicyGradient:
                case Regime::Teach: {
                    const int a = actions[b];
                    if (a == opt.decoder_pool_index) {
                        v = res.preds(k - 1, b);
                    } else {
                        if (a < 0 || static_cast<std::size_t>(a) >= opt.aux_inputs->size())
                            throw ContractError("decode: chosen pool index has no input matrix");
                        v = (*opt.aux_inputs)[static_cast<std::size_t>(a)](k - 1, b);
                    }
                    prov.kind = Provenance::Pool;
                    prov.pool_index = a;
                    break;
                }
            }
            input_row(0, b) = v;
        }
    }
    return res;
}

double bptt(SeqParams& p, const EncodeCache& enc, const DecodeResult& dec, const Matrix& targets) {
    const std::size_t horizon = dec.preds.rows();
    const std::size_t batch = dec.preds.cols();
    if (!targets.same_shape(dec.preds)) throw DimensionError("bptt: target shape mismatch");
    if (enc.steps.empty()) throw ContractError("bptt: encoder cache is empty");

    double loss = 0.0;
    Matrix d_preds(horizon, batch);
    const double scale = 2.0 / (static_cast<double>(horizon) * static_cast<double>(batch));
    for (std::size_t k = 0; k < horizon; ++k) {
        for (std::size_t b = 0; b < batch; ++b) {
            const double e = dec.preds(k, b) - targets(k, b);
            loss += e * e;
            d_preds(k, b) = scale * e;
        }
    }
    loss /= static_cast<double>(horizon) * static_cast<double>(batch);

    Matrix ds_next(p.dec_units, batch);
    Matrix dc(p.dec_units, batch);
    Matrix dcontext(p.enc_units, batch);
    Matrix dh(p.dec_units, batch), dh_prev, dx_ext;
    for (std::size_t k = horizon; k >= 1; --k) {
        const CellStepCache& step = dec.steps[k - 1];
        // dh = ds_next + V^T dyhat_k ; output-layer grads
        dh = ds_next;
        for (std::size_t b = 0; b < batch; ++b) {
            const double dy = d_preds(k - 1, b);
            p.b_out.grad(0, 0) += dy;
            for (std::size_t u = 0; u < p.dec_units; ++u) {
                p.v_out.grad(0, u) += dy * step.h(u, b);
                dh(u, b) += p.v_out.value(0, u) * dy;
            }
        }
        cell_backward(p.dec, step, dh, dc, dh_prev, dx_ext);
        // context occupies rows 1.. of the decoder's external input; row 0 is
        // the fed value, which is detached.
        for (std::size_t rix = 0; rix < p.enc_units; ++rix)
            for (std::size_t b = 0; b < batch; ++b) dcontext(rix, b) += dx_ext(1 + rix, b);
        ds_next = dh_prev;
    }
    // state handoff: s_0 = h_L and (LSTM) c_0 = c_L
    add_in_place(dcontext, ds_next);

    Matrix dh_enc = dcontext;
    Matrix dc_enc = dc;
    for (std::size_t j = enc.steps.size(); j >= 1; --j) {
        cell_backward(p.enc, enc.steps[j - 1], dh_enc, dc_enc, dh_prev, dx_ext);
        dh_enc = dh_prev;
    }
    return loss;
}

SingleDecode decode_sequence(const SeqParams& p, const Matrix& window, double first_input,
                             std::size_t horizon, const DecodeOptions& opt) {
    std::vector<Matrix> xs(window.rows());
    for (std::size_t j = 0; j < window.rows(); ++j) {
        xs[j].resize(window.cols(), 1);
        for (std::size_t ch = 0; ch < window.cols(); ++ch) xs[j](ch, 0) = window(j, ch);
    }
    const EncodeCache enc = encode_steps(p, xs);
    Matrix fi(1, 1);
    fi(0, 0) = first_input;
    DecodeOptions o = opt;
    o.record_states = true;
    const DecodeResult r = decode(p, enc, fi, horizon, o);
    SingleDecode out;
    out.preds.resize(horizon);
    out.provenance.resize(horizon);
    for (std::size_t k = 0; k < horizon; ++k) {
        out.preds[k] = r.preds(k, 0);
        out.provenance[k] = r.provenance[k][0];
    }
    for (const Matrix& s : r.states) {
        std::vector<double> col(s.rows());
        for (std::size_t u = 0; u < s.rows(); ++u) col[u] = s(u, 0);
        out.states.push_back(std::move(col));
    }
    return out;
}

}  // namespace pgs2s
