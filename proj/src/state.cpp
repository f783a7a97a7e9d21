#include "nuq/state.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace nuq {

namespace {

constexpr double kNormTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void check_state(const StateVector& psi) {
  if (psi.amplitudes.size() != (Eigen::Index(1) << psi.n_qubits)) {
    throw std::invalid_argument("state vector length is not 2^n_qubits");
  }
}

// Single-qubit gate on qubit q of an n-qubit state. Qubit 0 is the MSB, so
// the stride between its 0/1 components is 2^(n-1-q).
void apply_one_qubit(const Eigen::Matrix2cd& g, int qubit, StateVector& psi) {
  const Eigen::Index stride = Eigen::Index(1) << (psi.n_qubits - 1 - qubit);
  const Eigen::Index dim = psi.dim();
  for (Eigen::Index base = 0; base < dim; ++base) {
    if (base & stride) continue;
    Complex a0 = psi.amplitudes[base];
    Complex a1 = psi.amplitudes[base + stride];
    psi.amplitudes[base] = g(0, 0) * a0 + g(0, 1) * a1;
    psi.amplitudes[base + stride] = g(1, 0) * a0 + g(1, 1) * a1;
  }
}

}  // namespace

StateVector& StateVector::normalize() {
  double n = norm();
  if (n < 1e-14) throw std::runtime_error("cannot normalize a zero state");
  amplitudes /= n;
  return *this;
}

int basis_index(std::string_view label) {
  int index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label must be a bitstring");
    }
    index = (index << 1) | (c - '0');
  }
  return index;
}

std::string basis_label(int index, int n_qubits) {
  std::string s(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (index & (1 << (n_qubits - 1 - q))) s[static_cast<std::size_t>(q)] = '1';
  }
  return s;
}

StateVector init_basis_state(int n_qubits, int index) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (index < 0 || index >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  StateVector psi;
  psi.n_qubits = n_qubits;
  psi.amplitudes = Eigen::VectorXcd::Zero(dim);
  psi.amplitudes[index] = 1.0;
  return psi;
}

StateVector init_basis_state(int n_qubits, std::string_view label) {
  if (static_cast<int>(label.size()) != n_qubits) {
    throw std::invalid_argument("basis label length must equal qubit count");
  }
  return init_basis_state(n_qubits, basis_index(label));
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("qubit count mismatch in inner product");
  }
  return a.amplitudes.dot(b.amplitudes);
}

StateVector apply_unitary(const DenseOperator& u, const StateVector& psi) {
  check_state(psi);
  if (u.rows() != psi.dim() || u.cols() != psi.dim()) {
    throw std::invalid_argument("unitary dimension does not match state");
  }
  DenseOperator residual = u * u.adjoint() - DenseOperator::Identity(u.rows(), u.cols());
  if (residual.cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("operator is not unitary within 1e-10");
  }
  StateVector out = psi;
  out.amplitudes = u * psi.amplitudes;
  return out;
}

StateVector evolve_hermitian(const DenseOperator& h, double t, const StateVector& psi) {
  check_state(psi);
  if (!is_hermitian(h, kNormTol)) {
    throw std::invalid_argument("evolve_hermitian requires a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  Eigen::VectorXcd phases = (Complex(0, -t) * solver.eigenvalues().cast<Complex>()).array().exp();
  StateVector out = psi;
  out.amplitudes = solver.eigenvectors() *
                   (phases.asDiagonal() * (solver.eigenvectors().adjoint() * psi.amplitudes));
  return out;
}

StateVector apply_pauli(const PauliString& p, const StateVector& psi) {
  check_state(psi);
  if (p.n_qubits() != psi.n_qubits) {
    throw std::invalid_argument("Pauli string qubit count does not match state");
  }
  const int n = psi.n_qubits;
  int flip_mask = 0;
  for (int q = 0; q < n; ++q) {
    Axis a = p.axis(q);
    if (a == Axis::X || a == Axis::Y) flip_mask |= 1 << (n - 1 - q);
  }
  StateVector out = psi;
  for (Eigen::Index idx = 0; idx < psi.dim(); ++idx) {
    Complex phase(1, 0);
    for (int q = 0; q < n; ++q) {
      const bool bit = (idx >> (n - 1 - q)) & 1;
      switch (p.axis(q)) {
        case Axis::Y: phase *= bit ? Complex(0, -1) : Complex(0, 1); break;
        case Axis::Z: if (bit) phase = -phase; break;
        default: break;
      }
    }
    out.amplitudes[static_cast<Eigen::Index>(idx) ^ flip_mask] = phase * psi.amplitudes[idx];
  }
  return out;
}

double exact_string_expectation(const PauliString& p, const StateVector& psi) {
  return inner(psi, apply_pauli(p, psi)).real();
}

double exact_expectation(const PauliSum& obs, const StateVector& psi) {
  check_state(psi);
  Complex acc(0, 0);
  for (const auto& [code, c] : obs.terms()) {
    StateVector transformed = apply_pauli(PauliString(obs.n_qubits(), code), psi);
    acc += c * inner(psi, transformed);
  }
  if (obs.is_hermitian() && std::abs(acc.imag()) > 1e-10) {
    throw std::runtime_error("imaginary residue in Hermitian expectation value");
  }
  return acc.real();
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = splitmix64(base);
  for (std::uint64_t t : tags) s = splitmix64(s ^ t);
  return s;
}

void SamplingPlan::validate(int n_qubits) const {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (readout_noise) {
    readout_noise->validate();
    if (readout_noise->n_qubits() != n_qubits) {
      throw std::invalid_argument("readout noise qubit count does not match state");
    }
  }
}

StateVector rotate_for_measurement(const PauliString& p, const StateVector& psi) {
  StateVector out = psi;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2;
  Eigen::Matrix2cd sdg = Eigen::Matrix2cd::Identity();
  sdg(1, 1) = Complex(0, -1);
  for (int q = 0; q < p.n_qubits(); ++q) {
    switch (p.axis(q)) {
      case Axis::X:
        apply_one_qubit(h, q, out);
        break;
      case Axis::Y:
        apply_one_qubit(sdg, q, out);
        apply_one_qubit(h, q, out);
        break;
      default:
        break;
    }
  }
  return out;
}

int parity_sign(const PauliString& p, int index) {
  const int n = p.n_qubits();
  int sign = 1;
  for (int q = 0; q < n; ++q) {
    if (p.axis(q) != Axis::I && ((index >> (n - 1 - q)) & 1)) sign = -sign;
  }
  return sign;
}

std::vector<long> sample_histogram(const std::vector<double>& probs, int n_qubits,
                                   int shots, Rng& rng,
                                   const std::optional<ReadoutNoise>& noise) {
  const std::size_t dim = probs.size();
  std::vector<double> cdf(dim);
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  std::vector<long> hist(dim, 0);
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (idx >= dim) idx = dim - 1;
    if (noise) {
      for (int q = 0; q < n_qubits; ++q) {
        const std::size_t bit = std::size_t(1) << (n_qubits - 1 - q);
        const bool one = idx & bit;
        const double p_flip = one ? noise->p10[static_cast<std::size_t>(q)]
                                  : noise->p01[static_cast<std::size_t>(q)];
        if (p_flip > 0.0 && rng.bernoulli(p_flip)) idx ^= bit;
      }
    }
    ++hist[idx];
  }
  return hist;
}

Estimate sampled_string_expectation(const PauliString& p, const StateVector& psi,
                                    const SamplingPlan& plan, std::uint64_t term_seed) {
  if (p.is_identity()) return {1.0, 0.0};
  StateVector rotated = rotate_for_measurement(p, psi);
  std::vector<double> probs(static_cast<std::size_t>(rotated.dim()));
  for (Eigen::Index i = 0; i < rotated.dim(); ++i) {
    probs[static_cast<std::size_t>(i)] = std::norm(rotated.amplitudes[i]);
  }
  Rng rng(term_seed);
  std::vector<long> hist = sample_histogram(probs, psi.n_qubits, plan.shots, rng,
                                            plan.readout_noise);
  long plus = 0;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (parity_sign(p, static_cast<int>(i)) > 0) plus += hist[i];
  }
  const double mean = (2.0 * static_cast<double>(plus) - plan.shots) / plan.shots;
  double se = 0.0;
  if (plan.shots > 1) {
    const double var = (1.0 - mean * mean) * plan.shots / (plan.shots - 1.0);
    se = std::sqrt(std::max(0.0, var) / plan.shots);
  }
  return {mean, se};
}

Estimate sampled_expectation(const PauliSum& obs, const StateVector& psi,
                             const SamplingPlan& plan) {
  check_state(psi);
  plan.validate(psi.n_qubits);
  if (!obs.is_hermitian()) {
    throw std::invalid_argument("sampled_expectation requires a Hermitian observable");
  }
  double value = 0.0;
  double var = 0.0;
  for (const auto& [code, c] : obs.terms()) {
    PauliString p(obs.n_qubits(), code);
    if (p.is_identity()) {
      value += c.real();
      continue;
    }
    Estimate term = sampled_string_expectation(
        p, psi, plan, derive_seed(plan.seed, {0x7465726dull, code}));
    value += c.real() * term.value;
    var += c.real() * c.real() * term.std_err * term.std_err;
  }
  return {value, std::sqrt(var)};
}

std::map<std::string, long> sample_counts(const StateVector& psi, const SamplingPlan& plan) {
  check_state(psi);
  plan.validate(psi.n_qubits);
  std::vector<double> probs(static_cast<std::size_t>(psi.dim()));
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    probs[static_cast<std::size_t>(i)] = std::norm(psi.amplitudes[i]);
  }
  Rng rng(derive_seed(plan.seed, {0x636f756e7473ull}));
  std::vector<long> hist = sample_histogram(probs, psi.n_qubits, plan.shots, rng,
                                            plan.readout_noise);
  std::map<std::string, long> counts;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    if (hist[i] > 0) counts[basis_label(static_cast<int>(i), psi.n_qubits)] = hist[i];
  }
  return counts;
}

}  // namespace nuq
