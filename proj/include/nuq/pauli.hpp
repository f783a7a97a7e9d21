#pragma once

#include <Eigen/Dense>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nuq {

using Complex = std::complex<double>;

/// Explicit complex matrix; used for small blocks (dim <= 16) and oracle work.
using DenseOperator = Eigen::MatrixXcd;

enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_to_char(Axis a);
Axis axis_from_char(char c);

/// Tensor product of single-qubit Pauli operators.
///
/// Qubit 0 is the leftmost tensor factor and the most significant bit of a
/// computational basis index, so |q0 q1 ... q_{n-1}> has basis index
/// q0*2^{n-1} + ... + q_{n-1}. Axes are packed two bits per qubit into an
/// integer code, which doubles as a dense table index (all strings on n
/// qubits enumerate as codes 0 .. 4^n-1).
class PauliString {
 public:
  explicit PauliString(int n_qubits);
  PauliString(int n_qubits, std::uint32_t code);
  explicit PauliString(std::string_view letters);

  static PauliString single(int n_qubits, int qubit, Axis a);

  int n_qubits() const { return n_qubits_; }
  std::uint32_t code() const { return code_; }
  Axis axis(int qubit) const;
  PauliString& set_axis(int qubit, Axis a);
  bool is_identity() const { return code_ == 0; }
  /// Number of non-identity factors.
  int weight() const;
  /// Number of Y factors (odd count = purely imaginary matrix).
  int y_count() const;
  std::string to_string() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_;
  std::uint32_t code_;
};

struct PauliProduct {
  Complex phase;  // one of +1, -1, +i, -i
  PauliString string;
};

/// Factor-wise product a*b with the accumulated phase, so that
/// to_matrix(a)*to_matrix(b) == phase * to_matrix(result).
PauliProduct multiply(const PauliString& a, const PauliString& b);

/// True when a and b commute (even number of anticommuting factors).
bool commutes(const PauliString& a, const PauliString& b);

/// 2^n x 2^n Kronecker-product realization.
DenseOperator to_matrix(const PauliString& p);

bool is_hermitian(const DenseOperator& m, double tol = 1e-12);

/// Weighted sum of Pauli strings; the universal operator representation.
///
/// Terms with coefficient magnitude below kPruneThreshold are dropped on
/// insertion. Terms are keyed by packed string code, so iteration order is
/// deterministic.
class PauliSum {
 public:
  static constexpr double kPruneThreshold = 1e-12;

  explicit PauliSum(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  PauliSum& add(const PauliString& p, Complex c);
  PauliSum& add(std::string_view letters, Complex c);
  Complex coefficient(const PauliString& p) const;

  const std::map<std::uint32_t, Complex>& terms() const { return terms_; }
  PauliString string_for(std::uint32_t code) const {
    return PauliString(n_qubits_, code);
  }

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  /// Operator product expanded term by term through Pauli algebra.
  PauliSum multiply(const PauliSum& other) const;

  /// All coefficients real within tol.
  bool is_hermitian(double tol = 1e-12) const;

  /// One term per line: `±c.ccccc IXYZ`.
  std::string to_text() const;

 private:
  int n_qubits_;
  std::map<std::uint32_t, Complex> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(Complex scale, PauliSum s);

/// Pauli-basis coefficients c_I = Tr[m sigma_I] / 2^n, iterating all 4^n
/// strings. Throws std::invalid_argument unless m is 2^n x 2^n.
PauliSum decompose(const DenseOperator& m, int n_qubits);

/// Dense realization sum_I c_I sigma_I; inverse of decompose.
DenseOperator reconstruct(const PauliSum& s);

}  // namespace nuq
