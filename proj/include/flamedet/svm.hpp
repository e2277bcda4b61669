#ifndef FLAMEDET_SVM_HPP
#define FLAMEDET_SVM_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace flamedet {

enum class KernelKind { kLinear, kPolynomial, kRbf };

/// Kernel selection. degree/coef0 apply to polynomial kernels, sigma to RBF:
///   linear      u . v
///   polynomial  (u . v + coef0)^degree
///   rbf         exp(-|u - v|^2 / (2 sigma^2))
struct KernelSpec {
    KernelKind kind = KernelKind::kLinear;
    int degree = 2;
    double coef0 = 1.0;
    double sigma = 10.0;

    static KernelSpec linear();
    static KernelSpec polynomial(int degree, double coef0 = 1.0);
    static KernelSpec rbf(double sigma);

    /// Parses "linear", "poly<d>" or "rbf<sigma>" (e.g. "poly2", "rbf10").
    static KernelSpec parse(const std::string& text);
    std::string to_string() const;
};

double kernel_eval(const std::vector<double>& u, const std::vector<double>& v,
                   const KernelSpec& k);

/// Optional per-feature min-max scaling fitted on the training set and
/// persisted with the model.
struct MinMaxScaler {
    std::vector<double> offset;
    std::vector<double> scale;

    static MinMaxScaler fit(const std::vector<std::vector<double>>& rows);
    std::vector<double> apply(const std::vector<double>& x) const;
};

/// Trained kernel classifier: support vectors with dual coefficients
/// alpha_i * y_i, a bias, and the kernel it was trained with.
struct SvmModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> dual_coefs;
    double bias = 0.0;
    KernelSpec kernel;
    double C = 1.0;
    std::optional<MinMaxScaler> scaler;
};

struct TrainOptions {
    double C = 1.0;
    double tol = 1e-3;
    long max_iterations = 1000000;
    bool scale_features = false;
};

/// SMO on the dual soft-margin problem. Labels must be +1/-1 with both
/// classes present. Throws ConvergenceError if the iteration budget runs out
/// before every KKT violation falls below tol.
SvmModel train(const std::vector<std::vector<double>>& data, const std::vector<int>& labels,
               const KernelSpec& kernel, const TrainOptions& options = {});

struct Prediction {
    int label = 1;  // sign of score; 0 maps to +1
    double score = 0.0;
};

Prediction predict(const SvmModel& model, const std::vector<double>& x);

struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t tn = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
};

struct MetricReport {
    double sensitivity = 0.0;
    double specificity = 0.0;
    double accuracy = 0.0;
    double error = 0.0;
};

/// Sensitivity, specificity, accuracy and error from confusion counts.
/// Requires at least one positive and one negative ground-truth sample.
MetricReport metrics(const ConfusionCounts& c);

struct CrossValidationResult {
    ConfusionCounts counts;
    MetricReport report;
};

/// Stratified k-fold cross-validation, deterministic for a given seed.
/// Confusion counts accumulate over held-out folds only.
CrossValidationResult kfold_cv(const std::vector<std::vector<double>>& data,
                               const std::vector<int>& labels, int k, const KernelSpec& kernel,
                               const TrainOptions& options, std::uint64_t seed);

/// Versioned line-oriented text format; floats round-trip exactly via
/// shortest decimal representation.
void save_model(const SvmModel& model, const std::filesystem::path& file);
SvmModel load_model(const std::filesystem::path& file);

}  // namespace flamedet

#endif
