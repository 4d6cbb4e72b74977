#pragma once

#include "gchar/charring/charring.hpp"
#include "gchar/exactmath/polynomial.hpp"
#include "gchar/report.hpp"

namespace gchar {

/// Radical of the ModEmptyAndG algebra: generators lie in J and span it as an
/// ideal, J is a nilpotent two-sided ideal, the quotient has the predicted
/// dimension and the psi(G,H) split it into blocks of size |G/H|.
Report verify_theorem_ja(const AbelianGroup& g);

/// The psi * eps family in the ModEmpty algebra: count, idempotency,
/// orthogonality, sum chi_{e} and primitivity modulo the radical.
Report verify_pci(const AbelianGroup& g);

/// For every subgroup H, ker(omega_H) equals the ideal (chi_H - 1).
Report verify_omega_kernel(const AbelianGroup& g);

/// The three-idempotent decomposition for the cyclic group of prime order p.
Report verify_cyclic_prime(unsigned p);

/// Minimal polynomial of x in the algebra modulo the radical, with `unit`
/// acting as 1 on the block where x lives.
Polynomial minimal_polynomial_mod(const FiniteAlgebra& alg, const QuotientMap& q, const SparseVector& unit,
                                  const SparseVector& x);

}  // namespace gchar
