#include "wmetrics/types.hpp"

#include <cmath>

namespace wmetrics {

namespace {

bool all_equal(const std::vector<int>& v) {
    for (int x : v) {
        if (x != v.front()) {
            return false;
        }
    }
    return true;
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw DimensionError("weight vector must hold at least one entry");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        double w = weights_[i];
        if (!std::isfinite(w) || w <= 0.0) {
            throw std::invalid_argument("weights must be finite and strictly positive (entry " +
                                        std::to_string(i) + " is " + std::to_string(w) + ")");
        }
        sum += w;
    }
    trace_ = sum;
}

WeightVector WeightVector::ones(std::size_t n) {
    return WeightVector(std::vector<double>(n, 1.0));
}

BinaryLabeledData::BinaryLabeledData(std::vector<int> truth, std::vector<int> prediction)
    : truth_(std::move(truth)), prediction_(std::move(prediction)) {
    if (truth_.size() != prediction_.size()) {
        throw DimensionError("truth and prediction differ in length: " +
                             std::to_string(truth_.size()) + " vs " +
                             std::to_string(prediction_.size()));
    }
    if (truth_.empty()) {
        throw DimensionError("labeled data must hold at least one observation");
    }
    auto check = [](const std::vector<int>& v, const char* name) {
        for (int x : v) {
            if (x != 0 && x != 1) {
                throw std::invalid_argument(std::string(name) + " entries must be 0 or 1, got " +
                                            std::to_string(x));
            }
        }
    };
    check(truth_, "truth");
    check(prediction_, "prediction");
}

bool BinaryLabeledData::truth_constant() const { return all_equal(truth_); }
bool BinaryLabeledData::prediction_constant() const { return all_equal(prediction_); }

MulticlassLabeledData::MulticlassLabeledData(std::vector<int> truth_class,
                                             std::vector<int> predicted_class,
                                             std::size_t num_classes)
    : truth_class_(std::move(truth_class)),
      predicted_class_(std::move(predicted_class)),
      num_classes_(num_classes) {
    if (truth_class_.size() != predicted_class_.size()) {
        throw DimensionError("truth and prediction differ in length: " +
                             std::to_string(truth_class_.size()) + " vs " +
                             std::to_string(predicted_class_.size()));
    }
    if (truth_class_.empty()) {
        throw DimensionError("labeled data must hold at least one observation");
    }
    if (num_classes_ < 2) {
        throw std::invalid_argument("num_classes must be at least 2, got " +
                                    std::to_string(num_classes_));
    }
    auto check = [this](const std::vector<int>& v, const char* name) {
        for (int x : v) {
            if (x < 0 || static_cast<std::size_t>(x) >= num_classes_) {
                throw std::invalid_argument(std::string(name) + " class index " +
                                            std::to_string(x) + " outside [0, " +
                                            std::to_string(num_classes_) + ")");
            }
        }
    };
    check(truth_class_, "truth");
    check(predicted_class_, "prediction");
}

bool MulticlassLabeledData::truth_constant() const { return all_equal(truth_class_); }
bool MulticlassLabeledData::prediction_constant() const { return all_equal(predicted_class_); }

double weighted_inner(std::span<const int> a, std::span<const int> b, const WeightVector& w) {
    if (a.size() != b.size() || a.size() != w.size()) {
        throw DimensionError("weighted_inner arguments differ in length: " +
                             std::to_string(a.size()) + ", " + std::to_string(b.size()) +
                             ", " + std::to_string(w.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += w[i] * static_cast<double>(a[i]) * static_cast<double>(b[i]);
    }
    return sum;
}

std::pair<Matrix, Matrix> one_hot(const MulticlassLabeledData& data) {
    const std::size_t k = data.num_classes();
    const std::size_t n = data.size();
    Matrix t(k, n);
    Matrix c(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        t(static_cast<std::size_t>(data.truth_class()[j]), j) = 1.0;
        c(static_cast<std::size_t>(data.predicted_class()[j]), j) = 1.0;
    }
    return {std::move(t), std::move(c)};
}

}  // namespace wmetrics
