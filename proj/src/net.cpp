#include "robevo/net.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace robevo {

std::size_t param_count(const NetworkTopology& t) {
  if (!t.valid()) throw std::invalid_argument("param_count: invalid topology");
  return (t.n_sensors + 1) * t.n_internal + t.n_internal * t.n_internal +
         (t.n_internal + 1) * t.n_motors;
}

Network::Network(const NetworkTopology& topology, ParameterVector weights)
    : topology_(topology), weights_(std::move(weights)) {
  if (weights_.size() != param_count(topology_))
    throw std::invalid_argument("Network: weight vector length does not match topology");
  for (double w : weights_)
    if (!std::isfinite(w)) throw std::invalid_argument("Network: non-finite weight");
  internal_.assign(topology_.n_internal, 0.0);
  scratch_.assign(topology_.n_internal, 0.0);
}

static double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<double> Network::activate(std::span<const double> sensor_values) {
  const std::size_t S = topology_.n_sensors;
  const std::size_t H = topology_.n_internal;
  const std::size_t O = topology_.n_motors;
  if (sensor_values.size() != S)
    throw std::invalid_argument("activate: sensor vector length mismatch");
  for (double v : sensor_values)
    if (!std::isfinite(v)) throw std::invalid_argument("activate: non-finite sensor value");

  const double* w_in = weights_.data();              // (S+1) x H
  const double* w_rec = w_in + (S + 1) * H;          // H x H
  const double* w_out = w_rec + H * H;               // H x O
  const double* w_out_bias = w_out + H * O;          // O

  for (std::size_t i = 0; i < H; ++i) {
    const double* row = w_in + i * (S + 1);
    double sum = row[S];  // bias input is a constant 1
    for (std::size_t s = 0; s < S; ++s) sum += row[s] * sensor_values[s];
    const double* rec = w_rec + i * H;
    for (std::size_t j = 0; j < H; ++j) sum += rec[j] * internal_[j];
    scratch_[i] = std::tanh(sum);
  }
  internal_.swap(scratch_);

  std::vector<double> motors(O);
  for (std::size_t o = 0; o < O; ++o) {
    const double* row = w_out + o * H;
    double sum = w_out_bias[o];
    for (std::size_t j = 0; j < H; ++j) sum += row[j] * internal_[j];
    motors[o] = logistic(sum);
  }
  return motors;
}

void Network::reset() { internal_.assign(topology_.n_internal, 0.0); }

void save_genome(std::ostream& os, const NetworkTopology& t, const ParameterVector& weights) {
  if (weights.size() != param_count(t))
    throw std::invalid_argument("save_genome: weight count mismatch");
  os << t.n_sensors << ' ' << t.n_internal << ' ' << t.n_motors << '\n';
  os << std::setprecision(17);
  for (double w : weights) os << w << '\n';
}

void save_genome_file(const std::string& path, const NetworkTopology& t,
                      const ParameterVector& weights) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_genome_file: cannot open " + path);
  save_genome(os, t, weights);
}

std::pair<NetworkTopology, ParameterVector> load_genome(std::istream& is) {
  NetworkTopology t;
  if (!(is >> t.n_sensors >> t.n_internal >> t.n_motors))
    throw std::runtime_error("load_genome: bad header");
  const std::size_t n = param_count(t);
  ParameterVector weights;
  weights.reserve(n);
  double w = 0.0;
  while (weights.size() < n && (is >> w)) weights.push_back(w);
  if (weights.size() != n) throw std::runtime_error("load_genome: truncated genome");
  return {t, std::move(weights)};
}

std::pair<NetworkTopology, ParameterVector> load_genome_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_genome_file: cannot open " + path);
  return load_genome(is);
}

}  // namespace robevo
