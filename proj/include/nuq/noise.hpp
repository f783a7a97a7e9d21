#pragma once

#include <stdexcept>
#include <vector>

namespace nuq {

/// Per-qubit classical readout-flip channel, applied independently to each
/// measured bit of each shot. p01[q] is the probability of reading 1 given a
/// true 0 on qubit q; p10[q] of reading 0 given a true 1.
struct ReadoutNoise {
  std::vector<double> p01;
  std::vector<double> p10;

  static ReadoutNoise uniform(int n_qubits, double p01_all, double p10_all) {
    ReadoutNoise n;
    n.p01.assign(static_cast<std::size_t>(n_qubits), p01_all);
    n.p10.assign(static_cast<std::size_t>(n_qubits), p10_all);
    n.validate();
    return n;
  }

  int n_qubits() const { return static_cast<int>(p01.size()); }

  void validate() const {
    if (p01.size() != p10.size()) {
      throw std::invalid_argument("readout noise p01/p10 length mismatch");
    }
    for (double p : p01) {
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("p01 out of [0,1]");
    }
    for (double p : p10) {
      if (p < 0.0 || p > 1.0) throw std::invalid_argument("p10 out of [0,1]");
    }
  }
};

/// Global depolarizing damping standing in for foldable entangling-gate
/// noise: each non-identity Pauli expectation is scaled by
/// (1-lambda)^(fold * weight), where weight is the circuit's configured
/// entangling-unit count.
struct FoldableNoise {
  double lambda = 0.0;
  int fold = 1;

  void validate() const {
    if (lambda < 0.0 || lambda >= 1.0) {
      throw std::invalid_argument("fold damping lambda must be in [0,1)");
    }
    if (fold < 1) throw std::invalid_argument("fold factor must be >= 1");
  }
};

}  // namespace nuq
