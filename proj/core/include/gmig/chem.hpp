#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gmig/pauli.hpp"

namespace gmig {

constexpr double kAngstromToBohr = 1.8897259886;

struct Atom {
  std::string element;
  double charge;
  Eigen::Vector3d position_angstrom;
};

struct Geometry {
  std::vector<Atom> atoms;

  /// H2 along z with the given bond length in Angstrom.
  static Geometry h2(double bond_length_angstrom);
};

/// Contracted s-shell: primitives are (exponent, coefficient) with primitive
/// normalization folded into the coefficient; the contraction itself is
/// normalized to unit self-overlap.
struct BasisShell {
  Eigen::Vector3d center_bohr;
  std::vector<std::pair<double, double>> primitives;
};

/// STO-3G s-shell for hydrogen centered at the given point (bohr).
BasisShell sto3g_hydrogen_shell(const Eigen::Vector3d& center_bohr);

struct MolecularIntegrals {
  Eigen::MatrixXd overlap;           // S
  Eigen::MatrixXd core_hamiltonian;  // kinetic + nuclear attraction
  // Chemist-notation (pq|rs), stored dense.
  std::vector<double> eri;
  std::size_t n_orbitals = 0;
  double nuclear_repulsion = 0.0;

  double eri_at(std::size_t p, std::size_t q, std::size_t r,
                std::size_t s) const {
    const std::size_t n = n_orbitals;
    return eri[((p * n + q) * n + r) * n + s];
  }
};

/// Boys function F0(t) = 0.5 sqrt(pi/t) erf(sqrt(t)), F0(0) = 1.
double boys_f0(double t);

/// AO integrals for an all-hydrogen geometry in atomic units.
MolecularIntegrals sto3g_integrals(const Geometry& geom);

struct RhfResult {
  Eigen::VectorXd orbital_energies;
  Eigen::MatrixXd mo_coefficients;  // columns are MOs
  double energy = 0.0;              // total, incl. nuclear repulsion
  int cycles = 0;
};

/// Restricted Hartree-Fock for a closed-shell 2-electron system.
RhfResult rhf(const MolecularIntegrals& ints);

struct QubitHamiltonian {
  PauliSum pauli_sum;
  std::size_t qubit_count = 0;
  double bond_length_angstrom = 0.0;
  std::string basis = "sto-3g";
};

/// Jordan-Wigner qubit Hamiltonian with interleaved spin-orbital order
/// (orb0 up, orb0 down, orb1 up, orb1 down) on qubits (0,1,2,3). Nuclear
/// repulsion is folded into the identity coefficient.
QubitHamiltonian qubit_hamiltonian(const MolecularIntegrals& ints,
                                   const Eigen::MatrixXd& mo_coefficients);

/// JSON text of the Hamiltonian as a list of {"coeff", "pauli"} entries.
std::string hamiltonian_to_json(const QubitHamiltonian& h);

struct FciLevel {
  double energy;
  StateVector state;
  double particle_number;  // <N>
  double sz;               // <S_z>
  double s_squared;        // <S^2>
};

struct FciSpectrum {
  std::vector<FciLevel> levels;  // ascending energy, full 2^Q spectrum
  // Indices into `levels` of the four target states
  // (ground, triplet Sz=0 component, first excited singlet, doubly excited),
  // all inside the N=2, Sz=0 sector.
  std::vector<std::size_t> targets;
};

/// Dense diagonalization with sector labels (N, S_z, S^2), eigenvectors
/// rotated inside degenerate blocks so the labels are sharp.
FciSpectrum fci_spectrum(const QubitHamiltonian& h);

/// JW particle-number, S_z and S^2 operators over n_spatial orbitals with
/// the interleaved spin ordering.
PauliSum number_operator(std::size_t n_spatial);
PauliSum sz_operator(std::size_t n_spatial);
PauliSum s_squared_operator(std::size_t n_spatial);

/// JW image of a single fermionic creation (dagger=true) or annihilation
/// operator on the given spin orbital.
ComplexPauliSum jw_ladder(std::size_t spin_orbital, bool dagger,
                          std::size_t n_qubits);

enum class TargetState { Ground = 0, Triplet = 1, Singlet = 2, Doubly = 3 };

const char* target_state_name(TargetState s);

}  // namespace gmig
