#pragma once

#include <span>
#include <string>
#include <vector>

#include "shoulderx/util.hpp"

namespace shoulderx {

/// Class index convention used throughout: 0 = normal (negative),
/// 1 = abnormal (positive, fracture).
struct SampleRef {
    std::string sample_id;
    int label = 0; // 0 or 1
};

/// Per-sample feature vectors keyed by sample id. All rows share `dim`;
/// ids are unique; values are finite. Values are stored as float: the CSV
/// interchange format carries 9 significant digits, which round-trips a
/// float exactly.
class FeatureTable {
public:
    FeatureTable() = default;
    explicit FeatureTable(int dim) : dim_(dim) {
        if (dim <= 0) throw ValidationError("FeatureTable: dim must be positive");
    }

    int dim() const { return dim_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }

    const SampleRef& sample(std::size_t i) const { return samples_[i]; }
    std::span<const float> row(std::size_t i) const {
        return {values_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }

    /// Appends a row; enforces dim, finiteness, unique non-empty id.
    void add_row(SampleRef ref, std::span<const float> values);

    const std::vector<SampleRef>& samples() const { return samples_; }

private:
    int dim_ = 0;
    std::vector<SampleRef> samples_;
    std::vector<float> values_; // size() * dim_, row-major
};

/// One scored prediction. `predicted` always equals argmax(score0, score1)
/// with ties resolved to class 0; scores are finite and within [0, 1] but
/// need not sum to 1 (independent-sigmoid scorers).
struct PredictionRow {
    SampleRef ref;
    float score0 = 0.0f;
    float score1 = 0.0f;
    int predicted = 0;
};

/// Computes the predicted label for a score pair: argmax, tie -> class 0.
inline int predicted_label(float score0, float score1) {
    return score1 > score0 ? 1 : 0;
}

class PredictionTable {
public:
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    const PredictionRow& row(std::size_t i) const { return rows_[i]; }
    const std::vector<PredictionRow>& rows() const { return rows_; }

    /// Appends a row; enforces score range, argmax/tie consistency and
    /// unique non-empty id.
    void add_row(PredictionRow row);

private:
    std::vector<PredictionRow> rows_;
};

/// Expected composition of one dataset split (class counts and the size
/// every image must have once preprocessed).
struct DatasetManifest {
    std::string split;       // "train" or "test"
    long long count_class0 = 0;
    long long count_class1 = 0;
    int image_h = 320;
    int image_w = 320;
    int image_c = 3;

    void validate() const;
};

struct ManifestReport {
    long long expected_class0 = 0, expected_class1 = 0;
    long long observed_class0 = 0, observed_class1 = 0;
    bool passed() const {
        return expected_class0 == observed_class0 && expected_class1 == observed_class1;
    }
    long long delta_class0() const { return observed_class0 - expected_class0; }
    long long delta_class1() const { return observed_class1 - expected_class1; }
    std::string summary() const;
};

// ---- file formats (header-first CSV, UTF-8, one sample per row) ----
//
//   feature file:    sample_id,label,f0,...,f{D-1}
//   prediction file: sample_id,label,score0,score1,predicted
//   manifest file:   "key value" lines; keys split, count_class0,
//                    count_class1, image_h, image_w, image_c

FeatureTable load_feature_table(const std::string& path);
void write_feature_table(const FeatureTable& table, const std::string& path);

PredictionTable load_prediction_table(const std::string& path);
void write_prediction_table(const PredictionTable& table, const std::string& path);

DatasetManifest load_manifest(const std::string& path);
void write_manifest(const DatasetManifest& manifest, const std::string& path);

ManifestReport validate_manifest(const DatasetManifest& manifest, const FeatureTable& table);
ManifestReport validate_manifest(const DatasetManifest& manifest, const PredictionTable& table);

/// One sample's entries across several joined prediction tables.
struct AlignedPrediction {
    SampleRef ref;
    std::vector<PredictionRow> preds; // one per input table, input order
};

/// Inner join of >= 2 prediction tables on sample_id (row order follows the
/// first table). Throws if any table misses an id present in another or if
/// labels disagree for a shared id.
std::vector<AlignedPrediction> join_by_sample(const std::vector<PredictionTable>& tables);

/// Joins feature tables on sample_id and concatenates rows in table order.
/// Same id/label rules as join_by_sample; result dim is the sum of dims.
FeatureTable concat_features(const std::vector<const FeatureTable*>& tables);

} // namespace shoulderx
