#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace robevo {

// Fixed topology of a fully connected recurrent controller:
// sensors + bias feed the internal layer, the internal layer is fully
// recurrent on its previous-step activations, and internal + bias feed
// the motor layer.
struct NetworkTopology {
  std::size_t n_sensors = 0;
  std::size_t n_internal = 0;
  std::size_t n_motors = 0;

  bool valid() const { return n_sensors >= 1 && n_internal >= 1 && n_motors >= 1; }

  friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;
};

using ParameterVector = std::vector<double>;

// Total genome length for a topology:
//   (n_sensors+1)*n_internal + n_internal^2 + (n_internal+1)*n_motors.
std::size_t param_count(const NetworkTopology& t);

// Recurrent controller. Weight layout, in genome order:
//   1. sensor->internal, row-major by internal neuron; each row is
//      [w_sensor_0 .. w_sensor_{S-1}, w_bias]
//   2. internal->internal, row-major by destination neuron
//   3. internal->motor, row-major by motor neuron
//   4. bias->motor, one entry per motor
// Internal neurons use tanh, motors use the logistic function, so motor
// outputs live in (0,1) and internal activations in (-1,1).
class Network {
 public:
  Network(const NetworkTopology& topology, ParameterVector weights);

  const NetworkTopology& topology() const { return topology_; }
  const ParameterVector& weights() const { return weights_; }
  std::span<const double> internal_activations() const { return internal_; }

  // One synaptic update: internal neurons read sensors, bias and the
  // previous step's internal activations; motors read the new internal
  // activations and bias. State persists across calls until reset().
  std::vector<double> activate(std::span<const double> sensor_values);

  // Zeroes all internal activations.
  void reset();

 private:
  NetworkTopology topology_;
  ParameterVector weights_;
  std::vector<double> internal_;
  std::vector<double> scratch_;
};

// Genome file format: one header line "n_sensors n_internal n_motors",
// then one decimal weight per line.
void save_genome(std::ostream& os, const NetworkTopology& t, const ParameterVector& weights);
void save_genome_file(const std::string& path, const NetworkTopology& t,
                      const ParameterVector& weights);
std::pair<NetworkTopology, ParameterVector> load_genome(std::istream& is);
std::pair<NetworkTopology, ParameterVector> load_genome_file(const std::string& path);

}  // namespace robevo
