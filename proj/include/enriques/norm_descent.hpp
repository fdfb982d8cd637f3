#pragma once
#include <optional>

#include "enriques/cyclic_gmodule.hpp"

namespace enriques {

/// Orbit sum of the first k translates: sum of action^i c for i < k.
/// k = 0 gives the zero vector, k = order gives the full norm.
IntVec partial_norm(const CyclicGModule& M, const IntVec& c, unsigned k);

/// Whether the full norm of c vanishes.
bool norm_trivial(const CyclicGModule& M, const IntVec& c);

/// For c in the kernel of the norm: a vector m with (1-sigma) m = c when
/// one exists (the associated Brauer-Severi variety is a projectivized
/// bundle), nullopt otherwise. Witnesses are normalized modulo
/// Ker(1-sigma) for determinism.
std::optional<IntVec> descent_trivial(const CyclicGModule& M, const IntVec& c);

/// First Chern class of the rank-d bundle assembled from the partial
/// norms of c (c in the kernel of the norm).
IntVec bundle_class(const CyclicGModule& M, const IntVec& c);

/// Invariants of (Ker N meet span) / (1-sigma)(span) for a sigma-stable
/// span of Neron-Severi generators. With the full lattice this is H^1.
AbelianGroupInvariants brauer_pullback_kernel(const CyclicGModule& M,
                                              const std::vector<IntVec>& ns_generators);

}  // namespace enriques
