#pragma once

#include "gsca/matrix.hpp"

#include <array>
#include <optional>

namespace gsca {

// Real 4x4 Majorana representation: {g_mu, g_nu} = 2 eta, eta = diag(-1,1,1,1),
// spatial gammas symmetric, g0 antisymmetric, C = g0, g5 = g0 g1 g2 g3.
struct GammaSet {
    std::array<Mat, 4> gamma;
    Mat C;
    Mat gamma5;
    std::array<int, 4> eta{-1, 1, 1, 1};

    Mat gamma_up(int mu) const { return gamma[mu].scaled(GaussianRational(eta[mu])); }
    // sigma_{mu nu} = (1/2)[g_mu, g_nu]; the normalization is fixed by the
    // Jacobi calibration of the builder (see su22n.cpp).
    Mat sigma(int mu, int nu) const;
    Mat sigma_up(int mu, int nu) const { return sigma(mu, nu).scaled(GaussianRational(eta[mu] * eta[nu])); }

    bool check_invariants() const;
};

// The pinned canonical representation (constants frozen from the search below).
const GammaSet& majorana_rep();

// Exhaustive search over signed tensor products of the real 2x2 basis
// {1, s1, eps, s3}; returns the lexicographically smallest solution. Used by
// tests to reproduce the frozen constants.
GammaSet search_majorana_rep();

// Symmetry report used as calibration input: which C-dressed matrices are
// symmetric in this representation.
struct CliffordSymmetries {
    bool gamma_c_symmetric;   // (g_mu C) symmetric for all mu
    bool sigma_c_symmetric;   // (sigma_{mu nu} C) symmetric for all mu<nu
    bool gamma5_c_symmetric;  // (g5 C) symmetric (it is not; it is antisymmetric)
    bool gamma5_c_antisymmetric;
};
CliffordSymmetries clifford_symmetries(const GammaSet& g);

} // namespace gsca
