#pragma once
#include <optional>
#include <vector>

#include "enriques/constructions.hpp"

namespace enriques {

// Mod-2 structure of the Hilbert-scheme lattice F + F (+ <-2(n-1)>) + U
// with the swap/negate involution, n odd. Coordinates follow the basis
// order of k3n_module(n); the U block is always the last two coordinates
// and the rank-1 middle coordinate exists only for n > 1.

std::size_t k3n_rank(long n);

/// The unique nonzero class of U mod 2 with quadratic refinement 1,
/// embedded in the full lattice (U-part e+f).
F2Vec epsilon(long n);

/// Basis of the fixed space of the mod-2 involution (dimension 13 for n > 1).
std::vector<F2Vec> invariant_mod2_subspace(long n);

/// Basis of the diagonal-F + delta + epsilon subspace, the image of the
/// mod-2 pullback from the quotient (dimension 12 for n > 1).
std::vector<F2Vec> image_pullback_mod2(long n);
bool in_image_pullback_mod2(long n, const F2Vec& v);

/// Kernel of the mod-2 pushforward restricted to U mod 2: exactly {0, e+f}.
bool in_kernel_pushforward_U2(const F2Vec& u2);

/// sigma(lambda) = -lambda and q(lambda) = 2 mod 4.
bool condition_anti_qmod4(long n, const LatticeVector& lambda);

/// (1+sigma)(lambda) = 0, lambda not in (1-sigma) of the full lattice,
/// and the U-part of lambda mod 2 lies in {0, epsilon}.
bool condition_kernel_not_coboundary(long n, const LatticeVector& lambda);

struct VanishingResult {
    bool vanishes = false;
    std::optional<LatticeVector> witness;
};

/// Whether the pulled-back Brauer class dies on the given sigma-stable
/// Picard sublattice: true iff some anti-invariant vector of the span has
/// square 2 mod 4, decided by epsilon-attainability of U-parts mod 2.
VanishingResult vanishing_criterion(long n, const std::vector<LatticeVector>& picard_generators);

}  // namespace enriques
