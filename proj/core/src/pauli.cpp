#include "gmig/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace gmig {

char axis_char(Axis a) {
  switch (a) {
    case Axis::I: return 'I';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

PauliWord PauliWord::from_string(const std::string& s) {
  PauliWord w(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) {
    switch (s[q]) {
      case 'I': w.set(q, Axis::I); break;
      case 'X': w.set(q, Axis::X); break;
      case 'Y': w.set(q, Axis::Y); break;
      case 'Z': w.set(q, Axis::Z); break;
      default: throw std::invalid_argument("bad Pauli character in " + s);
    }
  }
  return w;
}

std::string PauliWord::str() const {
  std::string s(axes_.size(), 'I');
  for (std::size_t q = 0; q < axes_.size(); ++q) s[q] = axis_char(axes_[q]);
  return s;
}

bool PauliWord::is_identity() const {
  return std::all_of(axes_.begin(), axes_.end(),
                     [](Axis a) { return a == Axis::I; });
}

int PauliWord::weight() const {
  return static_cast<int>(std::count_if(axes_.begin(), axes_.end(),
                                        [](Axis a) { return a != Axis::I; }));
}

int PauliWord::y_count() const {
  return static_cast<int>(
      std::count(axes_.begin(), axes_.end(), Axis::Y));
}

namespace {

// product[a][b] = (phase index, result axis); phase index k means i^k.
struct SingleProduct {
  int phase_pow;
  Axis axis;
};

constexpr SingleProduct kProduct[4][4] = {
    // I*          X*              Y*              Z*
    {{0, Axis::I}, {0, Axis::X}, {0, Axis::Y}, {0, Axis::Z}},   // I
    {{0, Axis::X}, {0, Axis::I}, {1, Axis::Z}, {3, Axis::Y}},   // X row: X*Y=iZ, X*Z=-iY
    {{0, Axis::Y}, {3, Axis::Z}, {0, Axis::I}, {1, Axis::X}},   // Y row: Y*X=-iZ, Y*Z=iX
    {{0, Axis::Z}, {1, Axis::Y}, {3, Axis::X}, {0, Axis::I}},   // Z row: Z*X=iY, Z*Y=-iX
};

constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

std::pair<cplx, PauliWord> multiply(const PauliWord& a, const PauliWord& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli word length mismatch");
  PauliWord out(a.size());
  int phase_pow = 0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    const auto& p = kProduct[static_cast<int>(a[q])][static_cast<int>(b[q])];
    phase_pow = (phase_pow + p.phase_pow) & 3;
    out.set(q, p.axis);
  }
  return {kPhase[phase_pow], out};
}

PauliSum::PauliSum(std::vector<Term> terms) {
  std::map<PauliWord, double> merged;
  for (auto& t : terms) merged[t.word] += t.coeff;
  for (auto& [word, coeff] : merged)
    if (coeff != 0.0) terms_.push_back({coeff, word});
}

std::size_t PauliSum::qubit_count() const {
  return terms_.empty() ? 0 : terms_.front().word.size();
}

PauliSum PauliSum::without_identity() const {
  std::vector<Term> kept;
  for (const auto& t : terms_)
    if (!t.word.is_identity()) kept.push_back(t);
  return PauliSum(std::move(kept));
}

double PauliSum::identity_coeff() const {
  for (const auto& t : terms_)
    if (t.word.is_identity()) return t.coeff;
  return 0.0;
}

ComplexPauliSum ComplexPauliSum::identity(std::size_t qubits, cplx coeff) {
  ComplexPauliSum s(qubits);
  s.add(coeff, PauliWord(qubits));
  return s;
}

void ComplexPauliSum::add(cplx coeff, const PauliWord& word) {
  if (word.size() != qubits_)
    throw std::invalid_argument("Pauli word length mismatch");
  terms_[word] += coeff;
}

ComplexPauliSum& ComplexPauliSum::operator+=(const ComplexPauliSum& other) {
  for (const auto& [w, c] : other.terms_) terms_[w] += c;
  return *this;
}

ComplexPauliSum& ComplexPauliSum::operator-=(const ComplexPauliSum& other) {
  for (const auto& [w, c] : other.terms_) terms_[w] -= c;
  return *this;
}

ComplexPauliSum& ComplexPauliSum::operator*=(cplx scalar) {
  for (auto& [w, c] : terms_) c *= scalar;
  return *this;
}

ComplexPauliSum ComplexPauliSum::operator*(const ComplexPauliSum& other) const {
  ComplexPauliSum out(qubits_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : other.terms_) {
      auto [phase, w] = multiply(wa, wb);
      out.terms_[w] += ca * cb * phase;
    }
  return out;
}

void ComplexPauliSum::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) < tol ? terms_.erase(it) : std::next(it);
}

PauliSum ComplexPauliSum::to_real(double tol) const {
  std::vector<PauliSum::Term> terms;
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.imag()) > tol)
      throw std::runtime_error("non-real coefficient in Hermitian sum: " +
                               w.str());
    if (std::abs(c.real()) > tol) terms.push_back({c.real(), w});
  }
  return PauliSum(std::move(terms));
}

StateVector::StateVector(std::size_t qubits, Eigen::VectorXcd amps)
    : qubits_(qubits), amps_(std::move(amps)) {
  if (amps_.size() != Eigen::Index(std::size_t{1} << qubits))
    throw std::invalid_argument("amplitude vector size != 2^Q");
}

StateVector StateVector::basis_state(std::size_t qubits, std::uint64_t index) {
  StateVector s(qubits);
  s.amps_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

namespace {

struct WordMasks {
  std::uint64_t flip = 0;   // X or Y axes
  std::uint64_t phase = 0;  // Y or Z axes: (-1)^popcount(i & phase)
  int n_y = 0;
};

WordMasks masks_of(const PauliWord& word) {
  WordMasks m;
  for (std::size_t q = 0; q < word.size(); ++q) {
    switch (word[q]) {
      case Axis::I: break;
      case Axis::X: m.flip |= std::uint64_t{1} << q; break;
      case Axis::Y:
        m.flip |= std::uint64_t{1} << q;
        m.phase |= std::uint64_t{1} << q;
        ++m.n_y;
        break;
      case Axis::Z: m.phase |= std::uint64_t{1} << q; break;
    }
  }
  return m;
}

void check_dims(const StateVector& state, const PauliWord& word) {
  if (word.size() != state.qubit_count())
    throw std::invalid_argument("Pauli word / state qubit count mismatch");
}

}  // namespace

StateVector apply_pauli_word(const StateVector& state, const PauliWord& word) {
  check_dims(state, word);
  const WordMasks m = masks_of(word);
  const cplx y_phase = kPhase[m.n_y & 3];  // i^{#Y}
  const auto& in = state.amplitudes();
  StateVector out(state.qubit_count());
  auto& o = out.amplitudes();
  const std::uint64_t dim = in.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    const double sign =
        (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
    o[static_cast<Eigen::Index>(i ^ m.flip)] =
        y_phase * sign * in[static_cast<Eigen::Index>(i)];
  }
  return out;
}

void apply_exponential_inplace(StateVector& state, double angle, double coeff,
                               const PauliWord& word) {
  check_dims(state, word);
  if (!std::isfinite(angle) || !std::isfinite(coeff))
    throw std::invalid_argument("non-finite exponential parameter");
  const double a = angle * coeff;
  auto& amps = state.amplitudes();
  if (word.is_identity()) {
    amps *= std::exp(cplx(0.0, -a));
    return;
  }
  const WordMasks m = masks_of(word);
  const cplx y_phase = kPhase[m.n_y & 3];
  const double c = std::cos(a);
  const cplx minus_i_sin(0.0, -std::sin(a));
  const std::uint64_t dim = amps.size();
  // exp(-iaP) = cos(a) I - i sin(a) P; visit each (i, i^flip) pair once.
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t j = i ^ m.flip;
    if (j < i) continue;
    const double sign_i = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
    if (i == j) {  // pure Z-type word, diagonal
      amps[static_cast<Eigen::Index>(i)] *= c + minus_i_sin * sign_i;
      continue;
    }
    const double sign_j = (std::popcount(j & m.phase) & 1) ? -1.0 : 1.0;
    const cplx ai = amps[static_cast<Eigen::Index>(i)];
    const cplx aj = amps[static_cast<Eigen::Index>(j)];
    // P maps |i> -> y_phase*sign_i |j> and |j> -> y_phase*sign_j |i>.
    amps[static_cast<Eigen::Index>(i)] = c * ai + minus_i_sin * y_phase * sign_j * aj;
    amps[static_cast<Eigen::Index>(j)] = c * aj + minus_i_sin * y_phase * sign_i * ai;
  }
}

StateVector apply_exponential(const StateVector& state, double angle,
                              double coeff, const PauliWord& word) {
  StateVector out = state;
  apply_exponential_inplace(out, angle, coeff, word);
  return out;
}

double expectation(const StateVector& state, const PauliSum& observable) {
  const auto& amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  cplx total = 0.0;
  for (const auto& term : observable.terms()) {
    check_dims(state, term.word);
    const WordMasks m = masks_of(term.word);
    const cplx y_phase = kPhase[m.n_y & 3];
    cplx acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
      acc += std::conj(amps[static_cast<Eigen::Index>(i ^ m.flip)]) * sign *
             amps[static_cast<Eigen::Index>(i)];
    }
    total += term.coeff * y_phase * acc;
  }
  if (std::abs(total.imag()) > 1e-10)
    throw std::runtime_error("expectation has imaginary residue " +
                             std::to_string(total.imag()));
  return total.real();
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("state dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

double inner_product_sq(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

Eigen::MatrixXcd dense_matrix(const PauliSum& observable) {
  const std::size_t q = observable.qubit_count();
  if (q > 16) throw std::invalid_argument("dense_matrix limited to Q <= 16");
  const std::uint64_t dim = std::uint64_t{1} << q;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : observable.terms()) {
    const WordMasks m = masks_of(term.word);
    const cplx y_phase = kPhase[m.n_y & 3];
    for (std::uint64_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & m.phase) & 1) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(i ^ m.flip), static_cast<Eigen::Index>(i)) +=
          term.coeff * y_phase * sign;
    }
  }
  return out;
}

}  // namespace gmig
