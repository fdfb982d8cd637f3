#pragma once
#include <optional>

#include "enriques/exact_linalg.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

/// A free Z-module of finite rank with an action of a cyclic group of
/// order d, given by the matrix of a generator g with g^d = identity
/// (the action may be non-faithful). When a lattice is attached the
/// generator must be an isometry of its Gram matrix.
struct CyclicGModule {
    std::size_t rank = 0;
    IntMatrix action;
    unsigned order = 1;
    std::optional<Lattice> lattice;

    CyclicGModule(IntMatrix generator, unsigned d, std::optional<Lattice> form = {});

    IntMatrix one_minus_sigma() const { return IntMatrix::identity(rank) - action; }
};

/// N = sum of action^i for i < order.
IntMatrix norm_endomorphism(const CyclicGModule& M);

/// Saturated basis of Ker(1 - sigma), as columns.
IntMatrix invariants_sublattice(const CyclicGModule& M);

/// Saturated basis of Ker N, as columns.
IntMatrix kernel_of_norm(const CyclicGModule& M);

/// Group cohomology H^p: the invariants' rank for p = 0, Ker N / Im(1-sigma)
/// for odd p, Ker(1-sigma) / Im N for even p >= 2.
AbelianGroupInvariants cohomology(const CyclicGModule& M, unsigned p);

}  // namespace enriques
