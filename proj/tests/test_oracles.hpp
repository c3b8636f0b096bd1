// Independent oracles used by the test and acceptance suites. Everything
// here deliberately avoids the library's Gaussian-product / Jordan-Wigner
// code paths: overlaps come from grid quadrature, the reference RHF energy
// from the symmetry-adapted 2x2 problem, and the CI reference from
// Slater-Condon rules in the determinant basis.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gmig/chem.hpp"

namespace oracle {

// Simpson's rule on [a, b] with an even number of panels.
template <typename F>
double simpson(F f, double a, double b, int panels = 4000) {
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i)
    acc += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return acc * h / 3.0;
}

/// <phi_A|phi_B> for two STO-3G hydrogen shells separated by r (bohr),
/// via per-dimension quadrature of each primitive-pair product.
inline double overlap_by_quadrature(double r_bohr) {
  const auto sa = gmig::sto3g_hydrogen_shell({0, 0, 0});
  const auto sb = gmig::sto3g_hydrogen_shell({0, 0, r_bohr});
  double total = 0.0;
  for (const auto& [a, ca] : sa.primitives)
    for (const auto& [b, cb] : sb.primitives) {
      const double lo = -12.0, hi = 12.0 + r_bohr;
      const double ix = simpson(
          [&](double x) { return std::exp(-(a + b) * x * x); }, lo, hi);
      const double iz = simpson(
          [&](double z) {
            return std::exp(-a * z * z - b * (z - r_bohr) * (z - r_bohr));
          },
          lo, hi);
      total += ca * cb * ix * ix * iz;
    }
  return total;
}

/// RHF energy for H2 from the symmetry-adapted occupied orbital
/// (phi_1 + phi_2)/sqrt(2(1+S12)) — no SCF iteration involved.
inline double rhf_energy_by_symmetry(const gmig::MolecularIntegrals& ints) {
  const double s12 = ints.overlap(0, 1);
  Eigen::Vector2d v(1.0, 1.0);
  v /= std::sqrt(2.0 * (1.0 + s12));
  const double h = v.transpose() * ints.core_hamiltonian * v;
  double j = 0.0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          j += v[p] * v[q] * v[r] * v[s] * ints.eri_at(p, q, r, s);
  return 2.0 * h + j + ints.nuclear_repulsion;
}

/// Ground-state energy of an isolated hydrogen atom in STO-3G: one electron
/// in the single basis function.
inline double isolated_h_atom_energy() {
  const gmig::Geometry geom{{{"H", 1.0, {0, 0, 0}}}};
  const auto ints = gmig::sto3g_integrals(geom);
  return ints.core_hamiltonian(0, 0);
}

struct DeterminantCi {
  std::vector<double> eigenvalues;  // all 6 two-electron levels, ascending
  std::vector<double> sz0_levels;   // the 4 Sz=0 levels, ascending
};

/// Full CI over the 6 two-electron determinants of H2/STO-3G built from
/// Slater-Condon rules on MO spin-orbital integrals. Spin orbitals are
/// 2*spatial + spin with spin 0 = up.
inline DeterminantCi determinant_ci(const gmig::MolecularIntegrals& ints,
                                    const Eigen::MatrixXd& c) {
  const int n = 2;  // spatial orbitals
  const Eigen::MatrixXd h_mo = c.transpose() * ints.core_hamiltonian * c;
  double eri_mo[2][2][2][2];
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double v = 0.0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
              for (int g = 0; g < n; ++g)
                for (int d = 0; d < n; ++d)
                  v += c(a, p) * c(b, q) * c(g, r) * c(d, s) *
                       ints.eri_at(a, b, g, d);
          eri_mo[p][q][r][s] = v;
        }

  auto h_so = [&](int p, int q) {
    return (p % 2 == q % 2) ? h_mo(p / 2, q / 2) : 0.0;
  };
  // Physicist <pq|rs> with spin deltas p~r, q~s.
  auto v_so = [&](int p, int q, int r, int s) {
    if (p % 2 != r % 2 || q % 2 != s % 2) return 0.0;
    return eri_mo[p / 2][r / 2][q / 2][s / 2];
  };
  auto v_anti = [&](int p, int q, int r, int s) {
    return v_so(p, q, r, s) - v_so(p, q, s, r);
  };

  // All 2-electron determinants {i < j} over 4 spin orbitals.
  std::vector<std::pair<int, int>> dets;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) dets.emplace_back(i, j);

  auto element = [&](std::pair<int, int> d1, std::pair<int, int> d2) {
    const auto [i, j] = d1;
    const auto [k, l] = d2;
    if (d1 == d2) {
      return h_so(i, i) + h_so(j, j) + v_anti(i, j, i, j) +
             ints.nuclear_repulsion;
    }
    // Count common orbitals.
    std::vector<int> only1, only2, common;
    for (int o : {i, j})
      (o == k || o == l ? common : only1).push_back(o);
    for (int o : {k, l})
      if (o != i && o != j) only2.push_back(o);
    if (only1.size() == 1) {
      // Single excitation p -> q with the common orbital m. With both
      // determinants stored in ascending order the permutation parity is
      // the parity of the common orbital's position change.
      const int p = only1[0], q = only2[0], m = common[0];
      const int pos1 = (p < m) ? 0 : 1;
      const int pos2 = (q < m) ? 0 : 1;
      const double sign = (pos1 == pos2) ? 1.0 : -1.0;
      return sign * (h_so(p, q) + v_anti(p, m, q, m));
    }
    // Double excitation (i j) -> (k l), both ascending: parity even.
    return v_anti(i, j, k, l);
  };

  Eigen::MatrixXd ci(6, 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) ci(a, b) = element(dets[a], dets[b]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ci);
  DeterminantCi out;
  for (int a = 0; a < 6; ++a) out.eigenvalues.push_back(es.eigenvalues()[a]);

  // Sz = 0 block: determinants with one up and one down spin orbital.
  std::vector<int> sz0;
  for (int a = 0; a < 6; ++a)
    if (dets[a].first % 2 != dets[a].second % 2) sz0.push_back(a);
  Eigen::MatrixXd block(sz0.size(), sz0.size());
  for (std::size_t a = 0; a < sz0.size(); ++a)
    for (std::size_t b = 0; b < sz0.size(); ++b)
      block(a, b) = ci(sz0[a], sz0[b]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bs(block);
  for (Eigen::Index a = 0; a < bs.eigenvalues().size(); ++a)
    out.sz0_levels.push_back(bs.eigenvalues()[a]);
  return out;
}

}  // namespace oracle
