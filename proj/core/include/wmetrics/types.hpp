#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wmetrics/matrix.hpp"

namespace wmetrics {

// Thrown when paired inputs (labels, weights) disagree in length or shape.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a metric is undefined because a label vector carries no
// variation (e.g. all-positive truth), which zeroes a denominator.
class DegenerateLabels : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a stability-bound operation is called outside its domain.
// The message names the condition that failed.
class PreconditionViolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Strictly positive per-observation weights with their cached total.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    static WeightVector ones(std::size_t n);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<double>& values() const { return weights_; }

    // Total weight; equals the sum of all entries.
    double trace() const { return trace_; }

private:
    std::vector<double> weights_;
    double trace_;
};

// Paired 0/1 truth and prediction vectors of equal length.
class BinaryLabeledData {
public:
    BinaryLabeledData(std::vector<int> truth, std::vector<int> prediction);

    std::size_t size() const { return truth_.size(); }
    const std::vector<int>& truth() const { return truth_; }
    const std::vector<int>& prediction() const { return prediction_; }

    bool truth_constant() const;
    bool prediction_constant() const;

private:
    std::vector<int> truth_;
    std::vector<int> prediction_;
};

// Paired class-index vectors over a declared number of classes.
// Two classes are accepted so binary cross-checks can run through the
// multiclass machinery.
class MulticlassLabeledData {
public:
    MulticlassLabeledData(std::vector<int> truth_class, std::vector<int> predicted_class,
                          std::size_t num_classes);

    std::size_t size() const { return truth_class_.size(); }
    std::size_t num_classes() const { return num_classes_; }
    const std::vector<int>& truth_class() const { return truth_class_; }
    const std::vector<int>& predicted_class() const { return predicted_class_; }

    bool truth_constant() const;
    bool prediction_constant() const;

private:
    std::vector<int> truth_class_;
    std::vector<int> predicted_class_;
    std::size_t num_classes_;
};

// Weighted inner product sum_i w_i * a_i * b_i.
double weighted_inner(std::span<const int> a, std::span<const int> b, const WeightVector& w);

// One-hot indicator matrices (truth, prediction), each K x N with exactly
// one 1 per column.
std::pair<Matrix, Matrix> one_hot(const MulticlassLabeledData& data);

}  // namespace wmetrics
