#pragma once

#include <functional>

#include "slabtrans/quadrature.hpp"
#include "slabtrans/special_functions.hpp"

namespace slabtrans {

// Continuum eigenfunctions phi_nu of the conservative transport operator are
// distributions: a principal-value kernel (nu/2) P 1/(nu - mu) plus a
// lambda(nu) delta(nu - mu) term.  They are exposed only as regular-point
// values and as pairings against smooth weights; there is no pointwise value
// at mu == nu.

/// Regular part (nu/2) / (nu - mu) away from the pole.
/// Satisfies phi(-nu, mu) == phi(nu, -mu) exactly in arithmetic.
double phi_regular(double nu, double mu);

/// <phi_nu, w> over [0, 1] for nu in (0, 1):
///   (nu/2) PV integral w(mu)/(nu - mu) dmu + lambda(nu) w(nu).
/// Vanishes when w is the gamma weight (half-range orthogonality).
double pair_phi(double nu, const std::function<double(double)>& w,
                const Quadrature& q = {1e-9, 1e-9, 256, 31});

/// <phi_-nu, w> over [0, 1] for nu in (0, 1]:
///   (nu/2) integral w(mu)/(nu + mu) dmu.
/// No PV or delta contribution: -nu - mu never vanishes on [0, 1].
/// For w = gamma this equals (nu/2) X(-nu).
double pair_phi_neg(double nu, const std::function<double(double)>& w,
                    const Quadrature& q = {1e-9, 1e-9, 256, 31});

}  // namespace slabtrans
