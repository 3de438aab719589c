#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgs2s/cells.hpp"
#include "pgs2s/series.hpp"

namespace pgs2s {

enum class Regime { FreeRunning, TeacherForcing, ScheduledSampling, PolicyGradient, Teach };
enum class Phase { Train, Eval };

std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

// Encoder-decoder parameter bundle. The decoder consumes, at every step, the
// concatenation [s_{k-1}, fed input value, context], hence its gate width is
// dec_units + 1 + enc_units. The context vector is the encoder's final hidden
// state, which also initializes the decoder state, so enc_units == dec_units.
struct SeqParams {
    CellKind kind;
    std::size_t enc_units, dec_units, input_channels;
    CellParams enc, dec;
    ParamBlock v_out;  // 1 x dec_units
    ParamBlock b_out;  // 1 x 1

    SeqParams(CellKind kind, std::size_t enc_units, std::size_t dec_units,
              std::size_t input_channels);
    void init(Rng& rng);
    ParamRefs params();
};

struct EncodeCache {
    std::vector<CellStepCache> steps;
    Matrix context;     // enc_units x B (= h_L)
    Matrix final_cell;  // enc_units x B (LSTM) or empty
    std::size_t batch = 0;
};

// Runs L encoder steps from zero initial state over the batch's windows.
EncodeCache encode(const SeqParams& p, const WindowedDataset& ds,
                   std::span<const std::size_t> indices);
// Low-level variant: xs[j] is the m x B input of step j.
EncodeCache encode_steps(const SeqParams& p, const std::vector<Matrix>& xs);

// Where the input consumed at a decode step came from.
struct Provenance {
    enum Kind : std::uint8_t { InitialTruth, Truth, Self, Pool };
    Kind kind = InitialTruth;
    int pool_index = -1;  // valid when kind == Pool
};

// Selects pool models during policy-gradient decoding. `states` holds the
// decoder hidden states s_k (dec_units x B) right after step k; the chosen
// action of column b determines the input fed at step k+1.
struct InputChooser {
    virtual ~InputChooser() = default;
    virtual void choose(const Matrix& states, std::size_t step_k, Phase phase,
                        std::span<int> actions) = 0;
};

struct DecodeOptions {
    Regime regime = Regime::FreeRunning;
    Phase phase = Phase::Eval;
    double ss_truth_prob = 1.0;     // SS: probability of feeding truth
    InputChooser* chooser = nullptr;
    int teach_model = -1;           // Teach: fixed pool index
    int decoder_pool_index = 2;     // pool slot meaning "decoder's own output"
    // Per aux pool model, an H x B matrix of that model's predictions in the
    // decoder's (normalized) input scale. Required for PG and Teach.
    const std::vector<Matrix>* aux_inputs = nullptr;
    const Matrix* truth = nullptr;  // H x B normalized targets (TF/SS training)
    Rng* rng = nullptr;             // SS coin flips
    bool record_states = false;
};

struct DecodeResult {
    Matrix preds;  // H x B, normalized scale
    std::vector<std::vector<Provenance>> provenance;  // [H][B], source of step k's input
    std::vector<std::vector<int>> actions;            // [H][B] for PG/Teach, else empty
    std::vector<Matrix> states;                       // s_1..s_H if record_states
    std::vector<CellStepCache> steps;                 // decoder caches for BPTT
};

// Decodes H steps. Step 1 always consumes first_input (the window's last
// ground-truth target value); later steps follow the regime. In Eval phase
// TF and SS fall back to free running.
DecodeResult decode(const SeqParams& p, const EncodeCache& enc, const Matrix& first_input,
                    std::size_t horizon, const DecodeOptions& opt);

// Mean per-sequence MSE over the batch plus exact gradients of it w.r.t. all
// SeqParams, accumulated into their grad slots. Fed-back inputs are treated
// as constants: no gradient flows through the prediction-feedback path.
double bptt(SeqParams& p, const EncodeCache& enc, const DecodeResult& dec, const Matrix& targets);

// Convenience for tests and single-sample decoding.
struct SingleDecode {
    std::vector<double> preds;
    std::vector<Provenance> provenance;
    std::vector<std::vector<double>> states;
};
SingleDecode decode_sequence(const SeqParams& p, const Matrix& window, double first_input,
                             std::size_t horizon, const DecodeOptions& opt);

}  // namespace pgs2s
