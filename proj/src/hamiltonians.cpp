#include "nuq/hamiltonians.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "nuq/oracle.hpp"

namespace nuq {

namespace {

// B-field term sum_p omega_p (bx X_p + bz Z_p) plus the collective
// self-interaction mu/4 (X^2 + Y^2 + Z^2).
PauliSum build_hamiltonian(const NeutrinoParams& params, double bx, double bz) {
  const int n = params.n_neutrinos;
  PauliSum h(n);
  for (int p = 0; p < n; ++p) {
    const double omega_p = params.omega0 * (p + 1);
    if (bz != 0.0) h.add(PauliString::single(n, p, Axis::Z), bz * omega_p);
    if (bx != 0.0) h.add(PauliString::single(n, p, Axis::X), bx * omega_p);
  }
  if (params.mu != 0.0) {
    // (sum_p sigma_p)^2 = N I + sum_{p != q} sigma_p sigma_q for each axis.
    h.add(PauliString(n), 3.0 * n * params.mu / 4.0);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          PauliString s(n);
          s.set_axis(p, a).set_axis(q, a);
          h.add(s, params.mu / 2.0);
        }
      }
    }
  }
  return h;
}

}  // namespace

double default_mixing_angle() { return 0.5 * std::asin(std::sqrt(0.1)); }

void NeutrinoParams::validate() const {
  if (n_neutrinos < 1) throw std::invalid_argument("need at least one neutrino");
  if (omega0 <= 0.0) throw std::invalid_argument("omega0 must be positive");
  if (mu < 0.0) throw std::invalid_argument("mu must be nonnegative");
}

double coupling_mu(double r, double sphere_radius, double prefactor) {
  if (sphere_radius <= 0.0) throw std::invalid_argument("sphere radius must be positive");
  if (r < sphere_radius) {
    throw std::invalid_argument("distance r must be at least the sphere radius");
  }
  const double ratio = sphere_radius / r;
  const double root = std::sqrt(1.0 - ratio * ratio);
  return prefactor * (1.0 - root) * (1.0 - root);
}

PauliSum mass_hamiltonian(const NeutrinoParams& params) {
  params.validate();
  return build_hamiltonian(params, 0.0, -0.5);
}

PauliSum flavor_hamiltonian(const NeutrinoParams& params) {
  params.validate();
  const double c = std::cos(2.0 * params.theta);
  const double s = std::sin(2.0 * params.theta);
  return build_hamiltonian(params, 0.5 * s, -0.5 * c);
}

PauliSum number_operator(int n) {
  PauliSum op(n);
  op.add(PauliString(n), 0.5 * n);
  for (int p = 0; p < n; ++p) {
    op.add(PauliString::single(n, p, Axis::Z), -0.5);
  }
  return op;
}

std::vector<BlockSector> block_sectors(int n) {
  if (n < 1) throw std::invalid_argument("need at least one qubit");
  std::vector<BlockSector> sectors(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) sectors[static_cast<std::size_t>(k)].particle_number = k;
  for (int label = 0; label < (1 << n); ++label) {
    const int k = std::popcount(static_cast<unsigned>(label));
    sectors[static_cast<std::size_t>(k)].basis_states.push_back(label);
  }
  return sectors;
}

DenseOperator project_block(const DenseOperator& h, const BlockSector& sector) {
  const Eigen::Index full_dim = h.rows();
  if (h.cols() != full_dim) throw std::invalid_argument("operator must be square");
  std::vector<bool> in_sector(static_cast<std::size_t>(full_dim), false);
  for (int s : sector.basis_states) {
    if (s < 0 || s >= full_dim) throw std::invalid_argument("sector state out of range");
    in_sector[static_cast<std::size_t>(s)] = true;
  }
  for (int s : sector.basis_states) {
    for (Eigen::Index j = 0; j < full_dim; ++j) {
      if (!in_sector[static_cast<std::size_t>(j)] && std::abs(h(s, j)) > 1e-9) {
        throw std::invalid_argument(
            "cross-sector matrix element above 1e-9: operator does not "
            "commute with the number operator");
      }
    }
  }
  const int d = sector.dim();
  DenseOperator block(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      block(a, b) = h(sector.basis_states[static_cast<std::size_t>(a)],
                      sector.basis_states[static_cast<std::size_t>(b)]);
    }
  }
  return block;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 0; i < std::min(k, n - k); ++i) out = out * (n - i) / (i + 1);
  return out;
}

int qubits_for_block(int n, int k) {
  const long d = binomial(n, k);
  int q = 0;
  while ((1L << q) < d) ++q;
  return q;
}

PauliSum reduced_two_particle_block(const NeutrinoParams& params,
                                    std::optional<double> padding) {
  params.validate();
  if (params.n_neutrinos != 4) {
    throw std::invalid_argument("reduced two-particle block is defined for N = 4");
  }
  const double w = params.omega0;
  const double mu = params.mu;
  const double pad = padding.value_or(w);

  PauliSum h(3);
  h.add("III", (w + 6.0 * mu) / 4.0);

  const double g = mu / 2.0;
  for (const char* s : {"XXX", "ZXX", "YYX", "XXI", "XZI", "ZXI", "YYI",
                        "IXX", "IZX", "XII", "IXI", "IIX"}) {
    h.add(s, g);
  }
  h.add("ZZI", -g);

  h.add("ZZI", (2.0 * w - mu) / 2.0);
  h.add("IZZ", w / 4.0);
  h.add("ZII", (mu + w) / 2.0);
  h.add("IZI", (2.0 * mu - w) / 4.0);
  h.add("IIZ", w / 4.0);

  if (pad != w) {
    // Shift the two artificial levels away from omega0: the padding states
    // |110> and |111> carry the projector (I - Z0 - Z1 + Z0Z1)/4.
    const double d = (pad - w) / 4.0;
    h.add("III", d);
    h.add("ZII", -d);
    h.add("IZI", -d);
    h.add("ZZI", d);
  }

  // Guard against padding that lands at or beyond the genuine spectrum edge.
  EighResult full = eigh(reconstruct(h));
  std::vector<double> genuine(full.eigenvalues.data(),
                              full.eigenvalues.data() + full.eigenvalues.size());
  for (int rep = 0; rep < 2; ++rep) {
    auto it = std::min_element(genuine.begin(), genuine.end(),
                               [pad](double a, double b) {
                                 return std::abs(a - pad) < std::abs(b - pad);
                               });
    genuine.erase(it);
  }
  const auto [lo, hi] = std::minmax_element(genuine.begin(), genuine.end());
  if (pad <= *lo + 1e-12 || pad >= *hi - 1e-12) {
    throw std::invalid_argument(
        "padding value is an extreme eigenvalue of the padded block");
  }
  return h;
}

PauliSum reduced_one_particle_block(const NeutrinoParams& params, int sign) {
  params.validate();
  if (params.n_neutrinos != 4) {
    throw std::invalid_argument("reduced one-particle block is defined for N = 4");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const double w = params.omega0;
  const double mu = params.mu;

  PauliSum h(2);
  h.add("II", (6.0 * mu + sign * 5.0 * w) / 2.0);
  h.add("XI", mu);
  h.add("IX", mu);
  h.add("XX", mu);
  h.add("ZI", w);
  h.add("IZ", w / 2.0);
  return h;
}

std::pair<StateVector, StateVector> degenerate_eigenvectors(double mu) {
  if (mu <= 0.0) {
    throw std::invalid_argument(
        "degenerate eigenvectors require mu > 0 (v2 diverges as mu -> 0)");
  }
  StateVector v1 = init_basis_state(3, 0);
  v1.amplitudes.setZero();
  v1.amplitudes[basis_index("010")] = 1.0 / std::sqrt(2.0);
  v1.amplitudes[basis_index("011")] = -1.0 / std::sqrt(2.0);

  StateVector v2 = init_basis_state(3, 0);
  v2.amplitudes.setZero();
  const double scale = 1.0 / std::sqrt(11.0 + 4.0 / mu + 4.0 / (mu * mu));
  v2.amplitudes[basis_index("010")] = scale * (1.0 + 2.0 / mu);
  v2.amplitudes[basis_index("000")] = -scale;
  v2.amplitudes[basis_index("001")] = -2.0 * scale;
  v2.amplitudes[basis_index("101")] = scale;
  v2.amplitudes[basis_index("100")] = 2.0 * scale;
  return {v1, v2};
}

PauliSum spectral_fold(const PauliSum& h, double alpha) {
  PauliSum shifted = h;
  shifted.add(PauliString(h.n_qubits()), -alpha);
  return shifted.multiply(shifted);
}

DenseOperator spectral_fold(const DenseOperator& h, double alpha) {
  DenseOperator shifted = h - alpha * DenseOperator::Identity(h.rows(), h.cols());
  return shifted * shifted;
}

}  // namespace nuq
