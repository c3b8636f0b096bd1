#include "gmig/chem.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gmig {

namespace {
constexpr double kPi = std::numbers::pi;
}

Geometry Geometry::h2(double r) {
  if (r <= 0.0) throw std::invalid_argument("bond length must be positive");
  return Geometry{{{"H", 1.0, {0.0, 0.0, 0.0}}, {"H", 1.0, {0.0, 0.0, r}}}};
}

BasisShell sto3g_hydrogen_shell(const Eigen::Vector3d& center_bohr) {
  // STO-3G hydrogen s-shell, zeta = 1.24 scaling of the standard fit.
  static constexpr double kExp[3] = {3.42525091, 0.62391373, 0.16885540};
  static constexpr double kCoef[3] = {0.15432897, 0.53532814, 0.44463454};
  BasisShell shell{center_bohr, {}};
  for (int i = 0; i < 3; ++i) {
    const double norm = std::pow(2.0 * kExp[i] / kPi, 0.75);
    shell.primitives.emplace_back(kExp[i], kCoef[i] * norm);
  }
  // Normalize the contraction to exact unit self-overlap.
  double self = 0.0;
  for (const auto& [a, ca] : shell.primitives)
    for (const auto& [b, cb] : shell.primitives)
      self += ca * cb * std::pow(kPi / (a + b), 1.5);
  for (auto& [a, c] : shell.primitives) c /= std::sqrt(self);
  return shell;
}

double boys_f0(double t) {
  if (t < 1e-12) return 1.0 - t / 3.0;
  return 0.5 * std::sqrt(kPi / t) * std::erf(std::sqrt(t));
}

namespace {

double prim_overlap(double a, const Eigen::Vector3d& ra, double b,
                    const Eigen::Vector3d& rb) {
  const double p = a + b;
  const double mu = a * b / p;
  return std::pow(kPi / p, 1.5) * std::exp(-mu * (ra - rb).squaredNorm());
}

double prim_kinetic(double a, const Eigen::Vector3d& ra, double b,
                    const Eigen::Vector3d& rb) {
  const double p = a + b;
  const double mu = a * b / p;
  const double r2 = (ra - rb).squaredNorm();
  return mu * (3.0 - 2.0 * mu * r2) * std::pow(kPi / p, 1.5) *
         std::exp(-mu * r2);
}

double prim_nuclear(double a, const Eigen::Vector3d& ra, double b,
                    const Eigen::Vector3d& rb, const Eigen::Vector3d& rc,
                    double charge) {
  const double p = a + b;
  const double mu = a * b / p;
  const Eigen::Vector3d rp = (a * ra + b * rb) / p;
  return -charge * (2.0 * kPi / p) *
         std::exp(-mu * (ra - rb).squaredNorm()) *
         boys_f0(p * (rp - rc).squaredNorm());
}

double prim_eri(double a, const Eigen::Vector3d& ra, double b,
                const Eigen::Vector3d& rb, double c, const Eigen::Vector3d& rc,
                double d, const Eigen::Vector3d& rd) {
  const double p = a + b;
  const double q = c + d;
  const Eigen::Vector3d rp = (a * ra + b * rb) / p;
  const Eigen::Vector3d rq = (c * rc + d * rd) / q;
  return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) *
         std::exp(-a * b / p * (ra - rb).squaredNorm() -
                  c * d / q * (rc - rd).squaredNorm()) *
         boys_f0(p * q / (p + q) * (rp - rq).squaredNorm());
}

template <typename F>
double contract2(const BasisShell& s1, const BasisShell& s2, F prim) {
  double acc = 0.0;
  for (const auto& [a, ca] : s1.primitives)
    for (const auto& [b, cb] : s2.primitives)
      acc += ca * cb * prim(a, s1.center_bohr, b, s2.center_bohr);
  return acc;
}

}  // namespace

MolecularIntegrals sto3g_integrals(const Geometry& geom) {
  const std::size_t n = geom.atoms.size();
  std::vector<BasisShell> shells;
  std::vector<Eigen::Vector3d> centers;
  for (const auto& atom : geom.atoms) {
    if (atom.element != "H")
      throw std::invalid_argument("only s-shell (hydrogen) atoms supported");
    centers.push_back(atom.position_angstrom * kAngstromToBohr);
    shells.push_back(sto3g_hydrogen_shell(centers.back()));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((centers[i] - centers[j]).norm() < 1e-10)
        throw std::invalid_argument("coincident nuclei");

  MolecularIntegrals ints;
  ints.n_orbitals = n;
  ints.overlap.resize(n, n);
  ints.core_hamiltonian.resize(n, n);
  ints.eri.assign(n * n * n * n, 0.0);

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      ints.overlap(p, q) = contract2(shells[p], shells[q], prim_overlap);
      double h = contract2(shells[p], shells[q], prim_kinetic);
      for (std::size_t c = 0; c < n; ++c) {
        const double z = geom.atoms[c].charge;
        const auto& rc = centers[c];
        h += contract2(shells[p], shells[q],
                       [&](double a, const Eigen::Vector3d& ra, double b,
                           const Eigen::Vector3d& rb) {
                         return prim_nuclear(a, ra, b, rb, rc, z);
                       });
      }
      ints.core_hamiltonian(p, q) = h;
    }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double v = 0.0;
          for (const auto& [a, ca] : shells[p].primitives)
            for (const auto& [b, cb] : shells[q].primitives)
              for (const auto& [c, cc] : shells[r].primitives)
                for (const auto& [d, cd] : shells[s].primitives)
                  v += ca * cb * cc * cd *
                       prim_eri(a, shells[p].center_bohr, b,
                                shells[q].center_bohr, c,
                                shells[r].center_bohr, d,
                                shells[s].center_bohr);
          ints.eri[((p * n + q) * n + r) * n + s] = v;
        }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      ints.nuclear_repulsion += geom.atoms[i].charge * geom.atoms[j].charge /
                                (centers[i] - centers[j]).norm();
  return ints;
}

RhfResult rhf(const MolecularIntegrals& ints) {
  const auto n = static_cast<Eigen::Index>(ints.n_orbitals);
  const Eigen::MatrixXd& h = ints.core_hamiltonian;
  Eigen::MatrixXd density = Eigen::MatrixXd::Zero(n, n);
  RhfResult res;
  double e_prev = 0.0;
  for (int cycle = 1; cycle <= 200; ++cycle) {
    Eigen::MatrixXd fock = h;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q)
        for (Eigen::Index r = 0; r < n; ++r)
          for (Eigen::Index s = 0; s < n; ++s)
            fock(p, q) += density(r, s) *
                          (ints.eri_at(p, q, r, s) -
                           0.5 * ints.eri_at(p, r, q, s));
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        fock, ints.overlap);
    const Eigen::MatrixXd c = solver.eigenvectors();
    // 2 electrons: doubly occupy the lowest MO.
    density = 2.0 * c.col(0) * c.col(0).transpose();
    const double e_elec = 0.5 * (density.array() * (h + fock).array()).sum();
    const double e_total = e_elec + ints.nuclear_repulsion;
    res.orbital_energies = solver.eigenvalues();
    res.mo_coefficients = c;
    res.energy = e_total;
    res.cycles = cycle;
    if (cycle > 1 && std::abs(e_total - e_prev) < 1e-10) return res;
    e_prev = e_total;
  }
  throw std::runtime_error("SCF did not converge in 200 cycles");
}

ComplexPauliSum jw_ladder(std::size_t p, bool dagger, std::size_t n_qubits) {
  PauliWord wx(n_qubits), wy(n_qubits);
  for (std::size_t q = 0; q < p; ++q) {
    wx.set(q, Axis::Z);
    wy.set(q, Axis::Z);
  }
  wx.set(p, Axis::X);
  wy.set(p, Axis::Y);
  ComplexPauliSum op(n_qubits);
  op.add(0.5, wx);
  op.add(dagger ? cplx(0.0, -0.5) : cplx(0.0, 0.5), wy);
  return op;
}

QubitHamiltonian qubit_hamiltonian(const MolecularIntegrals& ints,
                                   const Eigen::MatrixXd& mo_coefficients) {
  const std::size_t n = ints.n_orbitals;
  const Eigen::MatrixXd& c = mo_coefficients;
  const Eigen::MatrixXd h_mo =
      c.transpose() * ints.core_hamiltonian * c;
  // Naive AO->MO ERI transform; n is tiny.
  std::vector<double> eri_mo(n * n * n * n, 0.0);
  auto mo_at = [&](std::size_t p, std::size_t q, std::size_t r,
                   std::size_t s) -> double& {
    return eri_mo[((p * n + q) * n + r) * n + s];
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          double v = 0.0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              for (std::size_t g = 0; g < n; ++g)
                for (std::size_t d = 0; d < n; ++d)
                  v += c(a, p) * c(b, q) * c(g, r) * c(d, s) *
                       ints.eri_at(a, b, g, d);
          mo_at(p, q, r, s) = v;
        }

  const std::size_t n_qubits = 2 * n;
  ComplexPauliSum ham =
      ComplexPauliSum::identity(n_qubits, ints.nuclear_repulsion);
  // Spin orbital 2*P + sigma, sigma 0 = up, 1 = down.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (std::abs(h_mo(p, q)) < 1e-14) continue;
      for (std::size_t sp = 0; sp < 2; ++sp) {
        auto term = jw_ladder(2 * p + sp, true, n_qubits) *
                    jw_ladder(2 * q + sp, false, n_qubits);
        term *= h_mo(p, q);
        ham += term;
      }
    }
  // 1/2 sum <pq|rs> ap+ aq+ as ar with <pq|rs> = (pr|qs) delta-spin.
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = mo_at(p, r, q, s);
          if (std::abs(v) < 1e-14) continue;
          for (std::size_t sa = 0; sa < 2; ++sa)
            for (std::size_t sb = 0; sb < 2; ++sb) {
              auto term = jw_ladder(2 * p + sa, true, n_qubits) *
                          jw_ladder(2 * q + sb, true, n_qubits) *
                          jw_ladder(2 * s + sb, false, n_qubits) *
                          jw_ladder(2 * r + sa, false, n_qubits);
              term *= 0.5 * v;
              ham += term;
            }
        }
  ham.prune(1e-12);
  QubitHamiltonian out;
  out.pauli_sum = ham.to_real();
  out.qubit_count = n_qubits;
  return out;
}

std::string hamiltonian_to_json(const QubitHamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : h.pauli_sum.terms())
    terms.push_back({{"coeff", t.coeff}, {"pauli", t.word.str()}});
  nlohmann::json j{{"qubit_count", h.qubit_count},
                   {"basis", h.basis},
                   {"bond_length_angstrom", h.bond_length_angstrom},
                   {"terms", terms}};
  return j.dump(2);
}

PauliSum number_operator(std::size_t n_spatial) {
  const std::size_t n_qubits = 2 * n_spatial;
  std::vector<PauliSum::Term> terms;
  terms.push_back({0.5 * static_cast<double>(n_qubits), PauliWord(n_qubits)});
  for (std::size_t q = 0; q < n_qubits; ++q) {
    PauliWord w(n_qubits);
    w.set(q, Axis::Z);
    terms.push_back({-0.5, w});
  }
  return PauliSum(std::move(terms));
}

PauliSum sz_operator(std::size_t n_spatial) {
  const std::size_t n_qubits = 2 * n_spatial;
  std::vector<PauliSum::Term> terms;
  for (std::size_t orb = 0; orb < n_spatial; ++orb) {
    PauliWord up(n_qubits), down(n_qubits);
    up.set(2 * orb, Axis::Z);
    down.set(2 * orb + 1, Axis::Z);
    // n_up - n_down = (I-Z_up)/2 - (I-Z_down)/2 = (Z_down - Z_up)/2.
    terms.push_back({-0.25, up});
    terms.push_back({0.25, down});
  }
  return PauliSum(std::move(terms));
}

PauliSum s_squared_operator(std::size_t n_spatial) {
  const std::size_t n_qubits = 2 * n_spatial;
  ComplexPauliSum s_plus(n_qubits), sz(n_qubits);
  for (std::size_t orb = 0; orb < n_spatial; ++orb) {
    s_plus += jw_ladder(2 * orb, true, n_qubits) *
              jw_ladder(2 * orb + 1, false, n_qubits);
  }
  const PauliSum sz_real = sz_operator(n_spatial);
  for (const auto& t : sz_real.terms()) sz.add(t.coeff, t.word);
  ComplexPauliSum s_minus(n_qubits);
  for (std::size_t orb = 0; orb < n_spatial; ++orb) {
    s_minus += jw_ladder(2 * orb + 1, true, n_qubits) *
               jw_ladder(2 * orb, false, n_qubits);
  }
  // S^2 = S+S- + Sz^2 - Sz.
  ComplexPauliSum s2 = s_plus * s_minus;
  s2 += sz * sz;
  s2 -= sz;
  s2.prune(1e-12);
  return s2.to_real();
}

namespace {

// Rotate eigenvectors inside degenerate blocks so `op` is diagonal there;
// returns the per-vector eigenvalues of `op`.
Eigen::VectorXd sharpen_labels(Eigen::MatrixXcd& vectors,
                               const Eigen::VectorXd& energies,
                               const std::vector<Eigen::VectorXd*>& prior,
                               const Eigen::MatrixXcd& op) {
  const Eigen::Index n = vectors.cols();
  Eigen::VectorXd labels(n);
  Eigen::Index start = 0;
  auto same_block = [&](Eigen::Index a, Eigen::Index b) {
    if (std::abs(energies[a] - energies[b]) > 1e-8) return false;
    for (const auto* lab : prior)
      if (std::abs((*lab)[a] - (*lab)[b]) > 1e-6) return false;
    return true;
  };
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && same_block(start, end)) ++end;
    const Eigen::Index k = end - start;
    Eigen::MatrixXcd block = vectors.middleCols(start, k);
    Eigen::MatrixXcd m = block.adjoint() * op * block;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
    vectors.middleCols(start, k) = block * es.eigenvectors();
    labels.segment(start, k) = es.eigenvalues();
    start = end;
  }
  return labels;
}

}  // namespace

FciSpectrum fci_spectrum(const QubitHamiltonian& h) {
  if (h.qubit_count > 16)
    throw std::invalid_argument("fci_spectrum limited to Q <= 16");
  const Eigen::MatrixXcd hm = dense_matrix(h.pauli_sum);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hm);
  Eigen::MatrixXcd vectors = solver.eigenvectors();
  const Eigen::VectorXd energies = solver.eigenvalues();

  const std::size_t n_spatial = h.qubit_count / 2;
  const Eigen::MatrixXcd n_op = dense_matrix(number_operator(n_spatial));
  const Eigen::MatrixXcd sz_op_m = dense_matrix(sz_operator(n_spatial));
  const Eigen::MatrixXcd s2_op = dense_matrix(s_squared_operator(n_spatial));

  Eigen::VectorXd n_lab = sharpen_labels(vectors, energies, {}, n_op);
  Eigen::VectorXd sz_lab = sharpen_labels(vectors, energies, {&n_lab}, sz_op_m);
  Eigen::VectorXd s2_lab =
      sharpen_labels(vectors, energies, {&n_lab, &sz_lab}, s2_op);

  FciSpectrum spec;
  for (Eigen::Index i = 0; i < energies.size(); ++i) {
    spec.levels.push_back({energies[i],
                           StateVector(h.qubit_count, vectors.col(i)),
                           n_lab[i], sz_lab[i], s2_lab[i]});
  }
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    const auto& l = spec.levels[i];
    if (std::abs(l.particle_number - 2.0) < 1e-6 && std::abs(l.sz) < 1e-6)
      spec.targets.push_back(i);
  }
  if (h.qubit_count == 4 && spec.targets.size() != 4)
    throw std::runtime_error("ambiguous N=2, Sz=0 sector labeling");
  return spec;
}

const char* target_state_name(TargetState s) {
  switch (s) {
    case TargetState::Ground: return "ground";
    case TargetState::Triplet: return "triplet";
    case TargetState::Singlet: return "singlet";
    case TargetState::Doubly: return "doubly";
  }
  return "?";
}

}  // namespace gmig
