#pragma once

#include <string>

#include "shoulderx/nn_core.hpp"

namespace shoulderx {

enum class HeadKind { standard, spinal };

/// How logits become the (score0, score1) pair: softmax over the pair, or an
/// independent sigmoid per class (scores then need not sum to 1).
enum class ScoreMode { softmax, sigmoid };

inline constexpr int kSpinalSegments = 4;

struct HeadSpec {
    HeadKind kind = HeadKind::standard;
    int feature_dim = 0;
    int width = 0; // spinal segment width; unused for standard heads

    void validate() const; // spinal requires an even feature_dim and width > 0
};

/// A trainable classification head over frozen backbone features.
///
/// standard: a single feature_dim -> 2 classifier.
/// spinal:   four width-w segments, each fed one half of the input plus the
///           previous segment's output (halves alternate first/second), then
///           a 4w -> 2 classifier over the concatenated segment outputs.
///
///   s1 = relu(L1(x_a))        s2 = relu(L2(x_b || s1))
///   s3 = relu(L3(x_a || s2))  s4 = relu(L4(x_b || s3))
///   logits = C(s1 || s2 || s3 || s4)
struct Head {
    HeadKind kind = HeadKind::standard;
    int feature_dim = 0;
    int width = 0;
    ScoreMode scoring = ScoreMode::softmax;
    std::vector<DenseLayer> layers; // spinal: 4 segments then classifier; standard: classifier

    const DenseLayer& classifier() const { return layers.back(); }
    int penultimate_dim() const {
        return kind == HeadKind::spinal ? kSpinalSegments * width : feature_dim;
    }
    std::size_t parameter_count() const;
};

Head make_head(const HeadSpec& spec, Rng& rng, ScoreMode scoring = ScoreMode::softmax);

std::array<double, 2> head_logits(const Head& head, std::span<const float> x);

/// Spinal penultimate vector s1 || s2 || s3 || s4 (length 4w). For a
/// standard head the penultimate representation is the input itself.
std::vector<double> spinal_penultimate(const Head& head, std::span<const float> x);

/// Per-layer gradient buffers mirroring a head's layers.
struct HeadGradients {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> bias;
    void zero();
};
HeadGradients make_gradients(const Head& head);

/// Forward + exact cross-entropy backward for one example; adds
/// weight * d(loss)/d(theta) into `grads` and returns the loss. Covers the
/// spinal fan-out (each segment output feeds both the next segment and the
/// classifier).
double head_backward(const Head& head, std::span<const float> x, int label,
                     double weight, HeadGradients& grads);

/// DifferentiableHead adapter so nn_core's train_loop can drive a Head.
class TrainableHead final : public DifferentiableHead {
public:
    explicit TrainableHead(Head& head) : head_(head), grads_(make_gradients(head)) {}

    int input_dim() const override { return head_.feature_dim; }
    std::size_t parameter_count() const override { return head_.parameter_count(); }
    std::vector<std::span<double>> parameter_blocks() override;
    std::vector<std::span<const double>> gradient_blocks() const override;
    void zero_gradients() override { grads_.zero(); }
    double accumulate_example(std::span<const float> x, int label, double weight) override {
        return head_backward(head_, x, label, weight, grads_);
    }

private:
    Head& head_;
    HeadGradients grads_;
};

/// Seeded init + train_loop with the given config; deterministic.
Head train_head(const HeadSpec& spec, const FeatureTable& train, const TrainConfig& cfg,
                ScoreMode scoring = ScoreMode::softmax);

/// Scores every row (softmax or per-class sigmoid per head.scoring);
/// predicted = argmax with ties to class 0; row order preserved.
PredictionTable predict_with_head(const Head& head, const FeatureTable& features);

/// Penultimate activations as a feature table (spinal: 4w columns; standard:
/// a copy of the input features). This is how concatenation ensembles are fed.
FeatureTable penultimate_features(const Head& head, const FeatureTable& features);

/// Versioned whitespace-separated text format; weights at 17 significant
/// digits (exact double round-trip).
void save_head(const Head& head, const std::string& path);
Head load_head(const std::string& path);

} // namespace shoulderx
