#pragma once

#include <Eigen/Dense>
#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gmig {

using cplx = std::complex<double>;

/// Single-qubit Pauli axis. Values double as indices into multiplication
/// tables, so the order I, X, Y, Z is load-bearing.
enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);

/// Phase-free tensor product of single-qubit Paulis. Qubit q is character q
/// of the string form and the q-th (least significant first) bit of a basis
/// state index.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t qubits) : axes_(qubits, Axis::I) {}
  PauliWord(std::initializer_list<Axis> axes) : axes_(axes) {}

  // "XZYI": index in the string is the qubit index.
  static PauliWord from_string(const std::string& s);
  std::string str() const;

  std::size_t size() const { return axes_.size(); }
  Axis operator[](std::size_t q) const { return axes_[q]; }
  void set(std::size_t q, Axis a) { axes_[q] = a; }

  bool is_identity() const;
  int weight() const;   // number of non-I axes
  int y_count() const;

  auto operator<=>(const PauliWord&) const = default;

 private:
  std::vector<Axis> axes_;
};

/// Product of two words: a*b = phase * word, phase in {1, i, -1, -i}.
std::pair<cplx, PauliWord> multiply(const PauliWord& a, const PauliWord& b);

/// Weighted sum of Pauli words with real coefficients (Hermitian by
/// construction). Duplicate words are merged and zero terms dropped.
class PauliSum {
 public:
  struct Term {
    double coeff;
    PauliWord word;
  };

  PauliSum() = default;
  explicit PauliSum(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t qubit_count() const;

  /// Sum with the identity term removed (used for Hamiltonian-evolution
  /// ansatz blocks, where the identity only contributes a global phase).
  PauliSum without_identity() const;
  double identity_coeff() const;

 private:
  std::vector<Term> terms_;  // kept sorted by word
};

/// Pauli sum with complex coefficients; the working representation for
/// operator algebra (Jordan-Wigner, operator products). Collapses to a
/// PauliSum once coefficients are verified real.
class ComplexPauliSum {
 public:
  ComplexPauliSum() = default;
  explicit ComplexPauliSum(std::size_t qubits) : qubits_(qubits) {}

  static ComplexPauliSum identity(std::size_t qubits, cplx coeff = 1.0);

  void add(cplx coeff, const PauliWord& word);
  ComplexPauliSum& operator+=(const ComplexPauliSum& other);
  ComplexPauliSum& operator-=(const ComplexPauliSum& other);
  ComplexPauliSum& operator*=(cplx scalar);
  ComplexPauliSum operator*(const ComplexPauliSum& other) const;

  std::size_t qubit_count() const { return qubits_; }
  const std::map<PauliWord, cplx>& terms() const { return terms_; }

  /// Drops terms with |coeff| below tol.
  void prune(double tol = 1e-12);
  /// Requires every coefficient imaginary part below tol.
  PauliSum to_real(double tol = 1e-10) const;

 private:
  std::size_t qubits_ = 0;
  std::map<PauliWord, cplx> terms_;
};

/// Complex amplitude vector over 2^Q basis states, qubit 0 = LSB.
class StateVector {
 public:
  explicit StateVector(std::size_t qubits)
      : qubits_(qubits), amps_(Eigen::VectorXcd::Zero(std::size_t{1} << qubits)) {}
  StateVector(std::size_t qubits, Eigen::VectorXcd amps);

  /// Computational basis state |index>.
  static StateVector basis_state(std::size_t qubits, std::uint64_t index);

  std::size_t qubit_count() const { return qubits_; }
  std::size_t dim() const { return amps_.size(); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  std::size_t qubits_;
  Eigen::VectorXcd amps_;
};

/// P|psi>. Throws std::invalid_argument on length mismatch.
StateVector apply_pauli_word(const StateVector& state, const PauliWord& word);

/// exp(-i * angle * coeff * P)|psi>. Identity words contribute the global
/// phase exp(-i * angle * coeff). Throws on non-finite angle/coeff.
StateVector apply_exponential(const StateVector& state, double angle,
                              double coeff, const PauliWord& word);

/// In-place variant used by the hot paths.
void apply_exponential_inplace(StateVector& state, double angle, double coeff,
                               const PauliWord& word);

/// <psi|O|psi> for Hermitian O; asserts the imaginary residue is < 1e-10.
double expectation(const StateVector& state, const PauliSum& observable);

/// |<a|b>|^2 — the infinite-shot SWAP-test value.
double inner_product_sq(const StateVector& a, const StateVector& b);

cplx inner_product(const StateVector& a, const StateVector& b);

/// Dense 2^Q x 2^Q matrix of the sum. Requires Q <= 16.
Eigen::MatrixXcd dense_matrix(const PauliSum& observable);

}  // namespace gmig
