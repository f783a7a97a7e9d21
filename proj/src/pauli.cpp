#include "nuq/pauli.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nuq {

namespace {

// sigma_a * sigma_b = i^kPhasePow[a][b] * sigma_{a XOR b}
constexpr int kPhasePow[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) {
    throw std::invalid_argument("qubit count must be in [1, 12]");
  }
}

Eigen::Matrix2cd axis_matrix(Axis a) {
  Eigen::Matrix2cd m;
  const Complex i(0, 1);
  switch (a) {
    case Axis::I: m << 1, 0, 0, 1; break;
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, -i, i, 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

char axis_to_char(Axis a) {
  switch (a) {
    case Axis::I: return 'I';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  throw std::invalid_argument("invalid axis");
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'I': return Axis::I;
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    case 'Z': return Axis::Z;
    default: throw std::invalid_argument(std::string("invalid axis letter: ") + c);
  }
}

PauliString::PauliString(int n_qubits) : n_qubits_(n_qubits), code_(0) {
  check_qubit_count(n_qubits);
}

PauliString::PauliString(int n_qubits, std::uint32_t code)
    : n_qubits_(n_qubits), code_(code) {
  check_qubit_count(n_qubits);
  if (n_qubits < 16 && code >= (1u << (2 * n_qubits))) {
    throw std::invalid_argument("axis code out of range for qubit count");
  }
}

PauliString::PauliString(std::string_view letters)
    : n_qubits_(static_cast<int>(letters.size())), code_(0) {
  check_qubit_count(n_qubits_);
  for (int q = 0; q < n_qubits_; ++q) {
    set_axis(q, axis_from_char(letters[static_cast<std::size_t>(q)]));
  }
}

PauliString PauliString::single(int n_qubits, int qubit, Axis a) {
  PauliString p(n_qubits);
  p.set_axis(qubit, a);
  return p;
}

Axis PauliString::axis(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  return static_cast<Axis>((code_ >> (2 * qubit)) & 3u);
}

PauliString& PauliString::set_axis(int qubit, Axis a) {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  code_ &= ~(3u << (2 * qubit));
  code_ |= static_cast<std::uint32_t>(a) << (2 * qubit);
  return *this;
}

int PauliString::weight() const {
  int w = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    if (axis(q) != Axis::I) ++w;
  }
  return w;
}

int PauliString::y_count() const {
  int w = 0;
  for (int q = 0; q < n_qubits_; ++q) {
    if (axis(q) == Axis::Y) ++w;
  }
  return w;
}

std::string PauliString::to_string() const {
  std::string s(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) {
    s[static_cast<std::size_t>(q)] = axis_to_char(axis(q));
  }
  return s;
}

PauliProduct multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
  int phase_pow = 0;
  for (int q = 0; q < a.n_qubits(); ++q) {
    phase_pow += kPhasePow[static_cast<int>(a.axis(q))][static_cast<int>(b.axis(q))];
  }
  return {kPowersOfI[phase_pow % 4], PauliString(a.n_qubits(), a.code() ^ b.code())};
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
  int anticommuting = 0;
  for (int q = 0; q < a.n_qubits(); ++q) {
    Axis x = a.axis(q);
    Axis y = b.axis(q);
    if (x != Axis::I && y != Axis::I && x != y) ++anticommuting;
  }
  return anticommuting % 2 == 0;
}

DenseOperator to_matrix(const PauliString& p) {
  DenseOperator m = DenseOperator::Identity(1, 1);
  for (int q = 0; q < p.n_qubits(); ++q) {
    Eigen::Matrix2cd f = axis_matrix(p.axis(q));
    DenseOperator next(m.rows() * 2, m.cols() * 2);
    next.topLeftCorner(m.rows(), m.cols()) = f(0, 0) * m;
    next.topRightCorner(m.rows(), m.cols()) = f(0, 1) * m;
    next.bottomLeftCorner(m.rows(), m.cols()) = f(1, 0) * m;
    next.bottomRightCorner(m.rows(), m.cols()) = f(1, 1) * m;
    m.swap(next);
  }
  return m;
}

bool is_hermitian(const DenseOperator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits);
}

PauliSum& PauliSum::add(const PauliString& p, Complex c) {
  if (p.n_qubits() != n_qubits_) {
    throw std::invalid_argument("Pauli string qubit count does not match sum");
  }
  auto [it, inserted] = terms_.try_emplace(p.code(), c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kPruneThreshold) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::add(std::string_view letters, Complex c) {
  return add(PauliString(letters), c);
}

Complex PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find(p.code());
  return it == terms_.end() ? Complex(0, 0) : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum addition");
  }
  for (const auto& [code, c] : other.terms_) add(PauliString(n_qubits_, code), c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum subtraction");
  }
  for (const auto& [code, c] : other.terms_) add(PauliString(n_qubits_, code), -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  if (std::abs(scale) < kPruneThreshold) {
    terms_.clear();
    return *this;
  }
  for (auto& [code, c] : terms_) c *= scale;
  return *this;
}

PauliSum PauliSum::multiply(const PauliSum& other) const {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("qubit count mismatch in PauliSum product");
  }
  PauliSum out(n_qubits_);
  for (const auto& [ca, a] : terms_) {
    PauliString sa(n_qubits_, ca);
    for (const auto& [cb, b] : other.terms_) {
      PauliProduct prod = nuq::multiply(sa, PauliString(n_qubits_, cb));
      out.add(prod.string, a * b * prod.phase);
    }
  }
  return out;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [code, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& [code, c] : terms_) {
    std::snprintf(buf, sizeof(buf), "%+.5f ", c.real());
    out += buf;
    out += PauliString(n_qubits_, code).to_string();
    out += '\n';
  }
  return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(Complex scale, PauliSum s) { return s *= scale; }

PauliSum decompose(const DenseOperator& m, int n_qubits) {
  check_qubit_count(n_qubits);
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("matrix dimension is not 2^n_qubits");
  }
  PauliSum out(n_qubits);
  const std::uint32_t n_strings = 1u << (2 * n_qubits);
  for (std::uint32_t code = 0; code < n_strings; ++code) {
    PauliString p(n_qubits, code);
    Complex c = (m * to_matrix(p)).trace() / static_cast<double>(dim);
    if (std::abs(c) >= PauliSum::kPruneThreshold) out.add(p, c);
  }
  return out;
}

DenseOperator reconstruct(const PauliSum& s) {
  const Eigen::Index dim = Eigen::Index(1) << s.n_qubits();
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& [code, c] : s.terms()) {
    m += c * to_matrix(PauliString(s.n_qubits(), code));
  }
  return m;
}

}  // namespace nuq
