#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "tscflp/instance.hpp"

namespace tscflp {

enum class Activation { sigmoid, tanh };

Activation parse_activation(const std::string& name);
const char* activation_name(Activation a);

/// Single-hidden-layer extreme learning machine.
///
/// Hidden weights and biases are random and never trained; only the output
/// weights `beta` (beta[0] is the bias term) are fitted in closed form.
struct ElmModel {
  Eigen::MatrixXd weights;  // h x n, entries in (-1, 1)
  Eigen::VectorXd bias;     // h, entries in (0, 1)
  Eigen::VectorXd beta;     // h + 1
  Activation activation = Activation::sigmoid;
  // Targets are mapped to [0, 1] before fitting; predictions map back.
  double target_offset = 0.0;
  double target_scale = 1.0;
  bool trained = false;

  std::size_t inputs() const noexcept { return static_cast<std::size_t>(weights.cols()); }
  std::size_t hidden() const noexcept { return static_cast<std::size_t>(weights.rows()); }
};

/// Training pairs keyed by input vector. Adding an input that is already
/// present overwrites its target in place.
class TrainingSet {
 public:
  void add(std::vector<std::uint8_t> input, double target);
  void add(const Individual& ind, double target);

  std::size_t size() const noexcept { return inputs_.size(); }
  bool empty() const noexcept { return inputs_.empty(); }
  const std::vector<std::vector<std::uint8_t>>& inputs() const noexcept { return inputs_; }
  const std::vector<double>& targets() const noexcept { return targets_; }

 private:
  std::vector<std::vector<std::uint8_t>> inputs_;
  std::vector<double> targets_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Flattens (y, z) into the surrogate's input layout.
std::vector<std::uint8_t> encode(const Individual& ind);

/// Random hidden layer for `n` inputs and `h` hidden nodes. Rows are drawn
/// in order from one stream, so the model for h nodes is a prefix of the
/// model for h + 1 nodes with the same seed.
ElmModel elm_init(std::size_t n, std::size_t h, std::uint64_t seed,
                  Activation activation = Activation::sigmoid);

/// min(2n, N - 1), at least 1.
std::size_t default_hidden_count(std::size_t n, std::size_t samples);

/// N x (h + 1) hidden-layer output matrix with a leading column of ones.
Eigen::MatrixXd hidden_layer_matrix(const ElmModel& model,
                                    const std::vector<std::vector<std::uint8_t>>& inputs);

/// beta = pinv(H) * T via SVD; singular values <= rtol * sigma_max are
/// treated as zero, giving the minimum-norm least-squares solution.
Eigen::VectorXd pseudo_inverse_solve(const Eigen::MatrixXd& h, const Eigen::VectorXd& t,
                                     double rtol = 1e-10);

ElmModel elm_train(ElmModel model, const TrainingSet& set);

double elm_predict(const ElmModel& model, std::span<const std::uint8_t> x);
double elm_predict(const ElmModel& model, const Individual& ind);
std::vector<double> elm_predict_batch(const ElmModel& model,
                                      const std::vector<std::vector<std::uint8_t>>& xs);

}  // namespace tscflp
