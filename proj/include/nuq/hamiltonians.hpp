#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nuq/pauli.hpp"
#include "nuq/state.hpp"

namespace nuq {

/// Mixing angle with sin^2(2*theta) = 0.1.
double default_mixing_angle();

/// Physical oscillation scale in MeV; documentation constant only, all
/// computations use units where omega0 = 1.
inline constexpr double kPhysicalOmega0MeV = 1.055e-16;

/// One neutrino per oscillation frequency, omega_p = p * omega0 for
/// p = 1..N; mu is the neutrino-neutrino coupling in units of omega0.
struct NeutrinoParams {
  int n_neutrinos = 4;
  double omega0 = 1.0;
  double mu = 0.0;
  double theta = default_mixing_angle();

  void validate() const;
};

/// Coupling as a function of distance r >= sphere_radius from the center of
/// the emission sphere: prefactor * (1 - sqrt(1 - R^2/r^2))^2.
double coupling_mu(double r, double sphere_radius, double prefactor);

/// Mass-basis Hamiltonian
///   H = -1/2 sum_p omega_p Z_p + mu/4 (X^2 + Y^2 + Z^2)
/// with collective X = sum_p X_p (and likewise Y, Z); includes the constant
/// 3*N*mu/4 identity term from squared same-site Paulis.
PauliSum mass_hamiltonian(const NeutrinoParams& params);

/// Flavor-basis Hamiltonian
///   H = -1/2 sum_p omega_p (cos2t Z_p - sin2t X_p) + mu/4 (X^2 + Y^2 + Z^2);
/// equals mass_hamiltonian at theta = 0.
PauliSum flavor_hamiltonian(const NeutrinoParams& params);

/// Total number operator sum_p (I - Z_p) / 2.
PauliSum number_operator(int n);

/// Invariant subspace of fixed Hamming weight k; basis states are the
/// N-bit labels with k ones, sorted ascending by integer value.
struct BlockSector {
  int particle_number = 0;
  std::vector<int> basis_states;

  int dim() const { return static_cast<int>(basis_states.size()); }
};

std::vector<BlockSector> block_sectors(int n);

/// Restriction of h to the sector's basis states. Throws if any cross-sector
/// matrix element exceeds 1e-9 (the input does not commute with the number
/// operator).
DenseOperator project_block(const DenseOperator& h, const BlockSector& sector);

/// ceil(log2 C(N,k)); qubits needed to host the k-particle block.
int qubits_for_block(int n, int k);

long binomial(int n, int k);

/// Three-qubit operator hosting the six-dimensional two-particle block of the
/// four-neutrino system,
///   H_block = (omega0 + 6 mu)/4 I + mu/2 H1 + H2,
/// padded with two artificial levels on |110> and |111>. The padding value
/// defaults to omega0 and is rejected if it falls at or beyond either end of
/// the genuine six-level spectrum, where imaginary-time evolution could
/// converge to a spurious state.
PauliSum reduced_two_particle_block(const NeutrinoParams& params,
                                    std::optional<double> padding = {});

/// Two-qubit operator for the one-particle (sign = -1) and three-particle
/// (sign = +1) blocks of the four-neutrino system:
///   (6 mu +/- 5 omega0)/2 I + mu (X0 + X1 + X0X1) + omega0 (Z0 + Z1/2).
PauliSum reduced_one_particle_block(const NeutrinoParams& params, int sign);

/// The two analytic eigenvectors of the padded two-particle block with the
/// degenerate eigenvalue 2*mu:
///   v1 = (|010> - |011>)/sqrt(2)
///   v2 = N [(1 + 2/mu)|010> - |000> - 2|001> + |101> + 2|100>],
/// N^-2 = 11 + 4/mu + 4/mu^2. Requires mu > 0 (v2 diverges as mu -> 0).
std::pair<StateVector, StateVector> degenerate_eigenvectors(double mu);

/// (H - alpha I)^2: eigenvectors preserved, eigenvalues mapped to
/// (lambda - alpha)^2 so the level nearest alpha becomes the minimum.
PauliSum spectral_fold(const PauliSum& h, double alpha);
DenseOperator spectral_fold(const DenseOperator& h, double alpha);

}  // namespace nuq
