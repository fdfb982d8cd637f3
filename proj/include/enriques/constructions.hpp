#pragma once
#include <string>

#include "enriques/cyclic_gmodule.hpp"

namespace enriques {

enum class Family { En, Kn, Tn, Rn };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// One of the known Enriques families with its integer parameter:
/// En and Kn take n itself (odd; Kn needs n >= 3), Tn and Rn take m
/// with n = 3m-1 and n = 4m-1 respectively.
struct FamilySpec {
    Family family = Family::En;
    long param = 1;

    FamilySpec() = default;
    FamilySpec(Family f, long p);

    /// Dimension parameter n of the covering manifold.
    long n() const;
    /// Order of the covering group.
    unsigned index() const;
};

/// Second cohomology of a K3 surface with the Enriques involution:
/// rank 22, basis order F, F, U, the swap/negate action, gram attached.
CyclicGModule k3_enriques_module();

/// Degree-2 cohomology of the Hilbert scheme of n points with the induced
/// involution: F + F + <-2(n-1)> + U, (a,a',m,b) -> (a',a,m,-b). The
/// rank-1 summand is dropped for n = 1.
CyclicGModule k3n_module(long n);

/// Degree-2 cohomology of a product of two elliptic curves, rank 6, with
/// the order-d translation-twisted action (d in {2,3,4}); trivial on the
/// two rank-1 ends, the middle 4x4 block in the basis
/// (de1*de2, df1*de2, de1*df2, df1*df2). No form attached.
CyclicGModule abelian_surface_module(unsigned d);

/// Generalized Kummer cohomology shadow: abelian_surface_module(d) plus a
/// trivial summand for the exceptional class. Requires d | n+1.
CyclicGModule kummer_module(long n, unsigned d);

/// The covering module of the given family.
CyclicGModule family_module(const FamilySpec& spec);

}  // namespace enriques
