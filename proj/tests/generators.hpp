#ifndef WMETRICS_TESTS_GENERATORS_HPP
#define WMETRICS_TESTS_GENERATORS_HPP

// Seeded random-instance builders for the property tests. All draws go
// through wmetrics::Rng so every test run is reproducible.

#include <cmath>
#include <cstdint>
#include <vector>

#include "wmetrics/rng.hpp"

namespace testgen {

struct BinaryInstance {
  std::vector<int> truth;
  std::vector<int> pred;
  std::vector<double> weights;
};

struct MulticlassInstance {
  std::vector<int> truth;
  std::vector<int> pred;
  size_t k = 0;
  std::vector<double> weights;
};

inline std::vector<double> random_weights(wmetrics::Rng& rng, size_t n, double lo, double hi,
                                          bool log_scale) {
  std::vector<double> w(n);
  for (size_t i = 0; i < n; ++i) {
    if (log_scale) {
      w[i] = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    } else {
      w[i] = rng.uniform(lo, hi);
    }
  }
  return w;
}

inline bool constant(const std::vector<int>& v) {
  for (int x : v) {
    if (x != v.front()) {
      return false;
    }
  }
  return true;
}

// Uniform labels, redrawn until neither vector is constant.
inline BinaryInstance random_binary_instance(wmetrics::Rng& rng, size_t n_min, size_t n_max,
                                             double w_lo, double w_hi, bool log_weights) {
  const size_t n = n_min + rng.below(n_max - n_min + 1);
  BinaryInstance inst;
  inst.weights = random_weights(rng, n, w_lo, w_hi, log_weights);
  do {
    inst.truth.assign(n, 0);
    inst.pred.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      inst.truth[i] = static_cast<int>(rng.below(2));
      inst.pred[i] = static_cast<int>(rng.below(2));
    }
  } while (constant(inst.truth) || constant(inst.pred));
  return inst;
}

// Prediction agrees with truth at probability `match`; labels redrawn until
// nonconstant. match < 0 draws the prediction independently.
inline MulticlassInstance random_multiclass_instance(wmetrics::Rng& rng, size_t n_min,
                                                     size_t n_max, size_t k_min, size_t k_max,
                                                     double w_lo, double w_hi, double match) {
  const size_t n = n_min + rng.below(n_max - n_min + 1);
  const size_t k = k_min + rng.below(k_max - k_min + 1);
  MulticlassInstance inst;
  inst.k = k;
  inst.weights = random_weights(rng, n, w_lo, w_hi, false);
  do {
    inst.truth.assign(n, 0);
    inst.pred.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      inst.truth[i] = static_cast<int>(rng.below(k));
      if (match >= 0.0 && rng.uniform01() < match) {
        inst.pred[i] = inst.truth[i];
      } else if (match >= 0.0) {
        const auto other = rng.below(k - 1);
        inst.pred[i] =
            static_cast<int>(other >= static_cast<size_t>(inst.truth[i]) ? other + 1 : other);
      } else {
        inst.pred[i] = static_cast<int>(rng.below(k));
      }
    }
  } while (constant(inst.truth) || constant(inst.pred));
  return inst;
}

}  // namespace testgen

#endif
