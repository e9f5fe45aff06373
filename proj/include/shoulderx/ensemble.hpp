#pragma once

#include <array>

#include "shoulderx/heads.hpp"

namespace shoulderx {

// Feature-concatenation ensemble (EL1): three providers' penultimate vectors
// are concatenated and a fresh classifier is trained on top, scored through
// independent sigmoids.
inline constexpr std::array<int, 3> kEl1ProviderDims{80, 1664, 960};
inline constexpr int kEl1HiddenDim = 2704; // sum of the provider dims

struct EL1Model {
    Head classifier; // standard 2704 -> 2, ScoreMode::sigmoid
};

/// Concatenates one sample's provider vectors in fixed order; dims must be
/// exactly (80, 1664, 960).
std::vector<float> el1_concat(std::span<const float> f1, std::span<const float> f2,
                              std::span<const float> f3);

/// Join + per-row el1_concat over whole tables (provider order preserved).
FeatureTable el1_concat_tables(const FeatureTable& f1, const FeatureTable& f2,
                               const FeatureTable& f3);

/// Trains only the 2704 -> 2 classifier on the concatenated features
/// (providers stay frozen); deterministic under cfg.seed.
EL1Model el1_train(const FeatureTable& f1, const FeatureTable& f2, const FeatureTable& f3,
                   const TrainConfig& cfg);

PredictionTable el1_predict(const EL1Model& model, const FeatureTable& f1,
                            const FeatureTable& f2, const FeatureTable& f3);

// Rule-based ensemble (EL2) over four prediction sources, role order:
//   model 1, model 2: abnormal referees (both 1 -> model 4 arbitrates)
//   model 3:          fallback decider   (with model 4 both 0 -> model 2 arbitrates)
//   model 4:          abnormal arbiter / normal referee
inline constexpr int kSubEnsembleModels = 4;
inline constexpr int kSubEnsembleInputDim = 8; // 4 models x (score0, score1)

struct SubEnsemble {
    Head classifier; // standard 8 -> 2, softmax scoring
};

/// Builds the 8-wide stacked feature table: per sample, (score0, score1) of
/// each model in the given order. Tables are joined on sample_id.
FeatureTable stack_prediction_scores(const std::vector<PredictionTable>& tables);

SubEnsemble subensemble_train(const std::vector<PredictionTable>& tables,
                              const TrainConfig& cfg);

PredictionTable subensemble_predict(const SubEnsemble& model,
                                    const std::vector<PredictionTable>& tables);

/// The arbitration rule on four labels:
///   p1 = 1 and p2 = 1 -> p4;  else p3 = 0 and p4 = 0 -> p2;  else p3.
int el2_decide(int p1, int p2, int p3, int p4);

/// Row-wise el2_decide over four aligned prediction tables in role order.
/// Each output row carries the deciding model's score pair, so ROC curves
/// remain computable downstream.
PredictionTable el2_evaluate(const std::vector<PredictionTable>& tables);

/// Role-ordered prediction-file paths for the EL2 command; loadable from a
/// key-value spec file with keys m1..m4.
struct EL2Spec {
    std::array<std::string, 4> prediction_paths;

    static EL2Spec load(const std::string& path);
    void validate() const; // all four present and pairwise distinct
};

} // namespace shoulderx
