#include "tscflp/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tscflp/rng.hpp"

namespace tscflp {

namespace {

double activate(Activation a, double u) {
  switch (a) {
    case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-u));
    case Activation::tanh: return std::tanh(u);
  }
  return u;
}

std::string key_of(const std::vector<std::uint8_t>& input) {
  return {input.begin(), input.end()};
}

}  // namespace

Activation parse_activation(const std::string& name) {
  if (name == "sigmoid") return Activation::sigmoid;
  if (name == "tanh") return Activation::tanh;
  throw std::invalid_argument("unknown activation '" + name + "'");
}

const char* activation_name(Activation a) {
  return a == Activation::tanh ? "tanh" : "sigmoid";
}

void TrainingSet::add(std::vector<std::uint8_t> input, double target) {
  if (!std::isfinite(target)) throw std::invalid_argument("training target must be finite");
  auto key = key_of(input);
  if (auto it = index_.find(key); it != index_.end()) {
    targets_[it->second] = target;
    return;
  }
  index_.emplace(std::move(key), inputs_.size());
  inputs_.push_back(std::move(input));
  targets_.push_back(target);
}

void TrainingSet::add(const Individual& ind, double target) { add(encode(ind), target); }

std::vector<std::uint8_t> encode(const Individual& ind) {
  std::vector<std::uint8_t> out(ind.y);
  out.insert(out.end(), ind.z.begin(), ind.z.end());
  return out;
}

ElmModel elm_init(std::size_t n, std::size_t h, std::uint64_t seed, Activation activation) {
  if (n < 1) throw std::invalid_argument("ELM input dimension must be >= 1");
  if (h < 1) throw std::invalid_argument("ELM hidden node count must be >= 1");
  ElmModel model;
  model.activation = activation;
  model.weights.resize(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(n));
  model.bias.resize(static_cast<Eigen::Index>(h));
  Rng rng = Rng::substream(seed, "elm-hidden");
  for (Eigen::Index r = 0; r < model.weights.rows(); ++r) {
    for (Eigen::Index c = 0; c < model.weights.cols(); ++c)
      model.weights(r, c) = 2.0 * rng.uniform_open01() - 1.0;
    model.bias(r) = rng.uniform_open01();
  }
  model.beta = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(h + 1));
  return model;
}

std::size_t default_hidden_count(std::size_t n, std::size_t samples) {
  const std::size_t by_samples = samples > 1 ? samples - 1 : 1;
  return std::max<std::size_t>(1, std::min(2 * n, by_samples));
}

Eigen::MatrixXd hidden_layer_matrix(const ElmModel& model,
                                    const std::vector<std::vector<std::uint8_t>>& inputs) {
  const auto rows = static_cast<Eigen::Index>(inputs.size());
  const auto h = model.weights.rows();
  Eigen::MatrixXd x(rows, model.weights.cols());
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& in = inputs[static_cast<std::size_t>(r)];
    if (in.size() != model.inputs()) throw std::invalid_argument("input dimension mismatch");
    for (Eigen::Index c = 0; c < x.cols(); ++c) x(r, c) = in[static_cast<std::size_t>(c)];
  }
  Eigen::MatrixXd pre = x * model.weights.transpose();
  pre.rowwise() += model.bias.transpose();
  Eigen::MatrixXd out(rows, h + 1);
  out.col(0).setOnes();
  out.rightCols(h) = pre.unaryExpr([a = model.activation](double u) { return activate(a, u); });
  return out;
}

Eigen::VectorXd pseudo_inverse_solve(const Eigen::MatrixXd& h, const Eigen::VectorXd& t, double rtol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? rtol * sigma(0) : 0.0;
  Eigen::VectorXd ut = svd.matrixU().transpose() * t;
  for (Eigen::Index i = 0; i < sigma.size(); ++i)
    ut(i) = sigma(i) > cutoff ? ut(i) / sigma(i) : 0.0;
  return svd.matrixV() * ut;
}

ElmModel elm_train(ElmModel model, const TrainingSet& set) {
  if (set.empty()) throw std::invalid_argument("ELM training set is empty");
  const auto& targets = set.targets();
  for (double t : targets)
    if (!std::isfinite(t)) throw std::invalid_argument("training target must be finite");

  const auto [lo, hi] = std::minmax_element(targets.begin(), targets.end());
  model.target_offset = *lo;
  model.target_scale = *hi > *lo ? *hi - *lo : 1.0;

  Eigen::VectorXd t(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t i = 0; i < targets.size(); ++i)
    t(static_cast<Eigen::Index>(i)) = (targets[i] - model.target_offset) / model.target_scale;

  model.beta = pseudo_inverse_solve(hidden_layer_matrix(model, set.inputs()), t);
  if (!model.beta.allFinite()) throw std::runtime_error("ELM output weights are not finite");
  model.trained = true;
  return model;
}

double elm_predict(const ElmModel& model, std::span<const std::uint8_t> x) {
  if (!model.trained) throw std::logic_error("ELM model is not trained");
  if (x.size() != model.inputs()) throw std::invalid_argument("input dimension mismatch");
  double out = model.beta(0);
  for (Eigen::Index r = 0; r < model.weights.rows(); ++r) {
    double u = model.bias(r);
    for (std::size_t c = 0; c < x.size(); ++c)
      if (x[c]) u += model.weights(r, static_cast<Eigen::Index>(c));
    out += model.beta(r + 1) * activate(model.activation, u);
  }
  return model.target_offset + model.target_scale * out;
}

double elm_predict(const ElmModel& model, const Individual& ind) {
  const auto x = encode(ind);
  return elm_predict(model, std::span<const std::uint8_t>(x));
}

std::vector<double> elm_predict_batch(const ElmModel& model,
                                      const std::vector<std::vector<std::uint8_t>>& xs) {
  if (!model.trained) throw std::logic_error("ELM model is not trained");
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(elm_predict(model, std::span<const std::uint8_t>(x)));
  return out;
}

}  // namespace tscflp
