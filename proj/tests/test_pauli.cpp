#include <doctest.h>

#include <random>

#include "gmig/pauli.hpp"

using namespace gmig;

namespace {

StateVector random_state(std::size_t qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd amps(std::size_t{1} << qubits);
  for (Eigen::Index i = 0; i < amps.size(); ++i)
    amps[i] = cplx(normal(rng), normal(rng));
  amps.normalize();
  return StateVector(qubits, amps);
}

PauliWord random_word(std::size_t qubits, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axis(0, 3);
  PauliWord w(qubits);
  for (std::size_t q = 0; q < qubits; ++q)
    w.set(q, static_cast<Axis>(axis(rng)));
  return w;
}

}  // namespace

TEST_CASE("single-qubit Pauli actions on |0>") {
  const StateVector zero = StateVector::basis_state(1, 0);

  auto x = apply_pauli_word(zero, PauliWord::from_string("X"));
  CHECK(x.amplitudes()[0] == cplx(0, 0));
  CHECK(x.amplitudes()[1] == cplx(1, 0));

  auto z = apply_pauli_word(zero, PauliWord::from_string("Z"));
  CHECK(z.amplitudes()[0] == cplx(1, 0));

  auto y = apply_pauli_word(zero, PauliWord::from_string("Y"));
  CHECK(y.amplitudes()[1] == cplx(0, 1));
}

TEST_CASE("apply_pauli_word rejects length mismatch") {
  const StateVector zero = StateVector::basis_state(2, 0);
  CHECK_THROWS_AS(apply_pauli_word(zero, PauliWord::from_string("X")),
                  std::invalid_argument);
}

TEST_CASE("exponential special cases") {
  const StateVector zero = StateVector::basis_state(1, 0);

  SUBCASE("angle 0 leaves the state unchanged") {
    auto out = apply_exponential(zero, 0.0, 1.0, PauliWord::from_string("X"));
    CHECK((out.amplitudes() - zero.amplitudes()).norm() == doctest::Approx(0));
  }
  SUBCASE("angle*coeff = pi/2 on X maps |0> to -i|1>") {
    auto out = apply_exponential(zero, M_PI / 2, 1.0,
                                 PauliWord::from_string("X"));
    CHECK(std::abs(out.amplitudes()[1] - cplx(0, -1)) < 1e-14);
  }
  SUBCASE("Z eigenstate picks up phase e^{-i theta}") {
    const double theta = 0.37;
    auto out = apply_exponential(zero, theta, 1.0, PauliWord::from_string("Z"));
    CHECK(std::abs(out.amplitudes()[0] - std::exp(cplx(0, -theta))) < 1e-14);
  }
  SUBCASE("identity word is a global phase") {
    auto out = apply_exponential(zero, 0.5, 2.0, PauliWord::from_string("I"));
    CHECK(std::abs(out.amplitudes()[0] - std::exp(cplx(0, -1.0))) < 1e-14);
  }
  SUBCASE("non-finite inputs are rejected") {
    CHECK_THROWS_AS(apply_exponential(zero, std::nan(""), 1.0,
                                      PauliWord::from_string("X")),
                    std::invalid_argument);
  }
}

TEST_CASE("expectation trivial values") {
  const StateVector zero = StateVector::basis_state(1, 0);
  CHECK(expectation(zero, PauliSum({{1.0, PauliWord::from_string("Z")}})) ==
        doctest::Approx(1.0));

  StateVector plus(1, Eigen::Vector2cd(1 / std::sqrt(2), 1 / std::sqrt(2)));
  CHECK(expectation(plus, PauliSum({{1.0, PauliWord::from_string("X")}})) ==
        doctest::Approx(1.0));

  const StateVector one = StateVector::basis_state(1, 1);
  PauliSum half_iz({{0.5, PauliWord::from_string("I")},
                    {0.5, PauliWord::from_string("Z")}});
  CHECK(expectation(one, half_iz) == doctest::Approx(0.0));
}

TEST_CASE("inner_product_sq") {
  const StateVector zero = StateVector::basis_state(1, 0);
  const StateVector one = StateVector::basis_state(1, 1);
  StateVector plus(1, Eigen::Vector2cd(1 / std::sqrt(2), 1 / std::sqrt(2)));

  CHECK(inner_product_sq(zero, zero) == doctest::Approx(1.0));
  CHECK(inner_product_sq(zero, one) == doctest::Approx(0.0));
  CHECK(inner_product_sq(zero, plus) == doctest::Approx(0.5));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto a = random_state(3, rng);
    auto b = random_state(3, rng);
    CHECK(inner_product_sq(a, b) ==
          doctest::Approx(inner_product_sq(b, a)).epsilon(1e-12));
  }
}

TEST_CASE("dense_matrix") {
  auto z = dense_matrix(PauliSum({{1.0, PauliWord::from_string("Z")}}));
  CHECK(z(0, 0).real() == doctest::Approx(1));
  CHECK(z(1, 1).real() == doctest::Approx(-1));
  CHECK(std::abs(z(0, 1)) == doctest::Approx(0));

  auto half = dense_matrix(PauliSum({{0.5, PauliWord::from_string("I")}}));
  CHECK(half(0, 0).real() == doctest::Approx(0.5));
  CHECK(half(1, 1).real() == doctest::Approx(0.5));

  auto xx = dense_matrix(PauliSum({{1.0, PauliWord::from_string("XX")}}));
  for (int i = 0; i < 4; ++i) {
    CHECK(xx(3 - i, i).real() == doctest::Approx(1));
    CHECK(std::abs(xx(i, i)) == doctest::Approx(0));
  }
}

TEST_CASE("norm preserved under random exponential sequences") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector state = random_state(4, rng);
    for (int step = 0; step < 8; ++step)
      apply_exponential_inplace(state, angle(rng), 1.0, random_word(4, rng));
    CHECK(std::abs(state.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("exponentials with the same word compose additively") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StateVector psi = random_state(3, rng);
    const PauliWord w = random_word(3, rng);
    std::uniform_real_distribution<double> angle(-2.0, 2.0);
    const double t1 = angle(rng), t2 = angle(rng);
    auto split = apply_exponential(apply_exponential(psi, t1, 1.0, w), t2, 1.0, w);
    auto joint = apply_exponential(psi, t1 + t2, 1.0, w);
    CHECK((split.amplitudes() - joint.amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("expectation agrees with the dense-matrix route") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PauliSum::Term> terms;
    for (int t = 0; t < 6; ++t) terms.push_back({coeff(rng), random_word(4, rng)});
    const PauliSum obs(terms);
    const StateVector psi = random_state(4, rng);
    const Eigen::MatrixXcd m = dense_matrix(obs);
    const double via_matrix =
        (psi.amplitudes().adjoint() * m * psi.amplitudes())(0).real();
    CHECK(expectation(psi, obs) == doctest::Approx(via_matrix).epsilon(1e-10));
  }
}

TEST_CASE("dense_matrix is Hermitian for real-coefficient sums") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<PauliSum::Term> terms;
  for (int t = 0; t < 8; ++t) terms.push_back({coeff(rng), random_word(3, rng)});
  const Eigen::MatrixXcd m = dense_matrix(PauliSum(terms));
  CHECK((m - m.adjoint()).norm() < 1e-12);
}

TEST_CASE("PauliSum merges duplicate words") {
  PauliSum s({{0.5, PauliWord::from_string("XZ")},
              {0.25, PauliWord::from_string("XZ")},
              {1.0, PauliWord::from_string("II")}});
  CHECK(s.size() == 2);
  CHECK(s.identity_coeff() == doctest::Approx(1.0));
  CHECK(s.without_identity().size() == 1);
}

TEST_CASE("Pauli word multiplication phases") {
  auto [p1, w1] = multiply(PauliWord::from_string("X"), PauliWord::from_string("Y"));
  CHECK(p1 == cplx(0, 1));
  CHECK(w1.str() == "Z");
  auto [p2, w2] = multiply(PauliWord::from_string("Y"), PauliWord::from_string("X"));
  CHECK(p2 == cplx(0, -1));
  auto [p3, w3] = multiply(PauliWord::from_string("ZX"), PauliWord::from_string("ZY"));
  CHECK(w3.str() == "IZ");
  CHECK(p3 == cplx(0, 1) * cplx(1, 0));
}
