#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nuq/noise.hpp"
#include "nuq/pauli.hpp"

namespace nuq {

/// Normalized complex amplitude vector over the computational basis.
/// Bit conventions follow PauliString: qubit 0 is the most significant bit.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }
  double norm() const { return amplitudes.norm(); }
  StateVector& normalize();
};

int basis_index(std::string_view label);
std::string basis_label(int index, int n_qubits);

StateVector init_basis_state(int n_qubits, int index);
StateVector init_basis_state(int n_qubits, std::string_view label);

std::complex<double> inner(const StateVector& a, const StateVector& b);

/// u must be unitary within 1e-10.
StateVector apply_unitary(const DenseOperator& u, const StateVector& psi);

/// exp(-i t h) psi via eigendecomposition of the Hermitian h.
StateVector evolve_hermitian(const DenseOperator& h, double t, const StateVector& psi);

/// sigma_I |psi>, applied directly with per-basis-state phases.
StateVector apply_pauli(const PauliString& p, const StateVector& psi);

/// <psi| sigma_I |psi>; real for any Pauli string.
double exact_string_expectation(const PauliString& p, const StateVector& psi);

/// sum_I c_I <psi|sigma_I|psi>. Throws if the imaginary residue of a
/// Hermitian observable exceeds 1e-10.
double exact_expectation(const PauliSum& obs, const StateVector& psi);

/// Deterministic seed derivation (splitmix64 chain) so that concurrent
/// experiment points and per-term measurements draw from disjoint streams.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

/// Seedable RNG wrapper; uniform() maps mt19937_64 output to [0,1) without
/// platform-dependent distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
};

struct SamplingPlan {
  int shots = 8192;
  std::uint64_t seed = 0;
  std::optional<ReadoutNoise> readout_noise;

  void validate(int n_qubits) const;
};

struct Estimate {
  double value = 0.0;
  double std_err = 0.0;
};

/// Basis change sending every non-identity factor of p to Z (Hadamard for X,
/// S-dagger then Hadamard for Y), so a computational-basis measurement of the
/// rotated state samples the eigenvalues of p.
StateVector rotate_for_measurement(const PauliString& p, const StateVector& psi);

/// Eigenvalue (+1/-1) of Pauli string p on measurement outcome `index`.
int parity_sign(const PauliString& p, int index);

/// Histogram over 2^n outcomes: multinomial draw from probs, then per-bit
/// readout flips when noise is present. Sum of counts equals shots.
std::vector<long> sample_histogram(const std::vector<double>& probs, int n_qubits,
                                   int shots, Rng& rng,
                                   const std::optional<ReadoutNoise>& noise);

/// Per-term measurement of a single Pauli string with the full shot budget.
Estimate sampled_string_expectation(const PauliString& p, const StateVector& psi,
                                    const SamplingPlan& plan, std::uint64_t term_seed);

/// Shot-sampled expectation of a Hermitian PauliSum; each term is measured
/// independently with the full shot budget and a seed derived from
/// (plan.seed, term code). Stderr is the per-term sample standard error
/// combined in quadrature.
Estimate sampled_expectation(const PauliSum& obs, const StateVector& psi,
                             const SamplingPlan& plan);

/// Computational-basis counts, bitstring label -> count.
std::map<std::string, long> sample_counts(const StateVector& psi, const SamplingPlan& plan);

}  // namespace nuq
