#pragma once

#include <string>
#include <vector>

#include "shoulderx/data_model.hpp"

namespace shoulderx {

/// Binary confusion counts; positive = class 1 (abnormal).
struct ConfusionMatrix {
    long long tp = 0, tn = 0, fp = 0, fn = 0;
    long long total() const { return tp + tn + fp + fn; }
};

ConfusionMatrix confusion(const PredictionTable& preds); // throws on empty table

double accuracy(const ConfusionMatrix& cm);

struct MacroPRF {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::vector<std::string> warnings; // degenerate per-class denominators
};

/// Per-class precision/recall/F1 (class 1 tp-based, class 0 tn-based with
/// roles swapped), unweighted mean over the two classes. A zero denominator
/// contributes 0 for that class's term and is flagged in warnings.
MacroPRF macro_prf(const ConfusionMatrix& cm);

/// Chance-corrected agreement (p0 - pe) / (1 - pe) with
/// pe = (tp+fp)(tp+fn)/n^2 + (fn+tn)(fp+tn)/n^2. The degenerate pe = 1 case
/// is defined as 0 and flagged through `warning` when given.
double cohens_kappa(const ConfusionMatrix& cm, std::string* warning = nullptr);

struct RocPoint {
    double threshold = 0.0; // +inf for the (0,0) anchor
    double fpr = 0.0;
    double tpr = 0.0;
};

/// Threshold sweep over all distinct score values (positive when
/// score >= threshold); points ordered by descending threshold, anchored at
/// (0,0), ending at (1,1). fpr and tpr are non-decreasing along the curve.
struct RocCurve {
    std::vector<RocPoint> points;
};

/// One-vs-rest ROC for `target_class`: `scores` is that class's score
/// column, a label equal to target_class counts as positive. Requires both
/// a positive and a negative sample.
RocCurve roc_curve(std::span<const float> scores, std::span<const int> labels,
                   int target_class);

RocCurve roc_for_class(const PredictionTable& preds, int target_class);

/// Trapezoidal area over fpr; equals the Mann-Whitney statistic
/// P(score_pos > score_neg) + 0.5 P(tie).
double auc(const RocCurve& curve);

struct MetricsReport {
    ConfusionMatrix cm;
    double accuracy = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    double kappa = 0.0;
    double auc_class0 = 0.0; // one-vs-rest on the score0 column
    double auc_class1 = 0.0; // one-vs-rest on the score1 column
    std::vector<std::string> warnings;
};

/// Every metric from one prediction table; requires both classes present.
MetricsReport full_report(const PredictionTable& preds);

/// Human-readable report: key:value lines plus the 2x2 matrix.
std::string render_report_text(const MetricsReport& report);

/// Machine-readable JSON variant (stable key order).
std::string render_report_json(const MetricsReport& report);

/// "threshold,fpr,tpr" CSV; the +inf anchor threshold serializes as "inf".
std::string render_roc_csv(const RocCurve& curve);

/// Static SVG with both class curves, the chance diagonal and an AUC legend.
std::string render_roc_svg(const RocCurve& class0, double auc0,
                           const RocCurve& class1, double auc1);

} // namespace shoulderx
