#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "shoulderx/data_model.hpp"
#include "shoulderx/rng.hpp"

namespace shoulderx {

/// Affine map y = Wx + b. Weights are row-major out_dim x in_dim.
/// All arithmetic is double precision.
struct DenseLayer {
    int in_dim = 0;
    int out_dim = 0;
    std::vector<double> weights; // out_dim * in_dim
    std::vector<double> bias;    // out_dim

    static DenseLayer zeros(int out_dim, int in_dim);
    /// Fan-in init: weights uniform in +-1/sqrt(in_dim), bias zero.
    static DenseLayer fan_in_init(int out_dim, int in_dim, Rng& rng);

    std::size_t parameter_count() const { return weights.size() + bias.size(); }
};

void linear_forward(const DenseLayer& layer, std::span<const double> x, std::span<double> y);
std::vector<double> linear_forward(const DenseLayer& layer, std::span<const double> x);

void relu_inplace(std::span<double> x);
double sigmoid(double x);
/// Numerically stable softmax (max subtraction); output sums to 1.
void softmax_inplace(std::span<double> x);

struct CrossEntropyResult {
    double loss = 0.0;
    std::array<double, 2> grad_logits{}; // softmax(logits) - onehot(label)
};

/// loss = -log softmax(logits)[label] for the two-class case.
CrossEntropyResult cross_entropy(std::array<double, 2> logits, int label);

/// Adam accumulators over a fixed flat parameter layout.
struct AdamState {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::int64_t t = 0;
    std::vector<double> m, v;

    static AdamState for_parameter_count(std::size_t n);
};

/// One Adam update over parameter blocks laid out in fixed order. `params`
/// and `grads` must list blocks of identical shapes whose total size matches
/// the state.
void adam_step(std::span<const std::span<double>> params,
               std::span<const std::span<const double>> grads,
               AdamState& state, double lr);

struct TrainConfig {
    double lr0 = 1e-4;
    int epochs = 40;
    int lr_step_epochs = 10; // decade length of the step schedule
    double lr_decay = 0.1;   // factor applied per decade
    int batch_size = 32;
    std::uint64_t seed = 0;

    void validate() const;
};

/// lr0 * lr_decay^floor(epoch / lr_step_epochs); throws on out-of-range epoch.
double lr_at_epoch(const TrainConfig& cfg, int epoch);

/// What train_loop needs from a model: parameter access plus a per-example
/// forward/backward that accumulates weight * d(loss)/d(theta).
class DifferentiableHead {
public:
    virtual ~DifferentiableHead() = default;
    virtual int input_dim() const = 0;
    virtual std::size_t parameter_count() const = 0;
    virtual std::vector<std::span<double>> parameter_blocks() = 0;
    virtual std::vector<std::span<const double>> gradient_blocks() const = 0;
    virtual void zero_gradients() = 0;
    /// Returns the (unweighted) cross-entropy loss for this example.
    virtual double accumulate_example(std::span<const float> x, int label, double weight) = 0;
};

struct TrainResult {
    std::vector<double> epoch_loss; // mean per-sample loss, one entry per epoch
};

/// Mini-batch Adam training: indices reshuffled every epoch from the seeded
/// generator, gradients averaged per batch, learning rate from lr_at_epoch.
/// Deterministic: (seed, data, config) fully determine the final weights.
TrainResult train_loop(DifferentiableHead& head, const FeatureTable& data,
                       const TrainConfig& cfg);

} // namespace shoulderx
