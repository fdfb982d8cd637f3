// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "enriques/brauer.hpp"
#include "enriques/mod2_criterion.hpp"
#include "enriques/norm_descent.hpp"
#include "test_util.hpp"

using namespace enriques;
using testutil::Rng;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok) {
    std::printf("%s  %2d. %s\n", ok ? "PASS" : "FAIL", num, what.c_str());
    if (!ok) ++failures;
}

bool criterion_1() {
    for (long n : {1L, 3L, 5L, 7L}) {
        BrauerResult r = brauer_group(FamilySpec(Family::En, n));
        if (r.group.torsion != IntVec{2} || r.group.free_rank != 0) return false;
        if (r.h1.torsion != IntVec{2, 2} || r.h1.free_rank != 0) return false;
        if (r.conditional) return false;
    }
    return true;
}

bool criterion_2() {
    for (long m : {1L, 3L}) {
        BrauerResult r = brauer_group(FamilySpec(Family::Tn, m));
        if (r.group.torsion != IntVec{3, 3} || r.conditional) return false;
    }
    BrauerResult r2 = brauer_group(FamilySpec(Family::Tn, 2));
    return r2.group.torsion == IntVec{3, 3} && r2.conditional;
}

bool criterion_3() {
    BrauerResult rn = brauer_group(FamilySpec(Family::Rn, 1));
    if (rn.group.torsion != IntVec{2, 2} || !rn.conditional) return false;
    BrauerResult kn = brauer_group(FamilySpec(Family::Kn, 3));
    if (kn.group.torsion != IntVec{2, 2, 2, 2} || !kn.conditional) return false;

    // Smith diagonals of the middle blocks of 1 - psi
    auto middle_diag = [](unsigned d, const IntVec& expect) {
        IntMatrix oms = abelian_surface_module(d).one_minus_sigma();
        IntMatrix block(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) block(i, j) = oms(1 + i, 1 + j);
        IntMatrix D = smith_normal_form(block).D;
        for (std::size_t i = 0; i < 4; ++i)
            if (D(i, i) != expect[i]) return false;
        return true;
    };
    return middle_diag(4, {1, 1, 2, 2}) && middle_diag(3, {1, 1, 3, 3});
}

bool criterion_4() {
    for (unsigned d = 2; d <= 6; ++d) {
        CyclicGModule m(IntMatrix::identity(1), d);
        if (!cohomology(m, 1).is_trivial() || !cohomology(m, 3).is_trivial()) return false;
        auto even = cohomology(m, 2);
        if (even.torsion != IntVec{Int(d)} || even.free_rank != 0) return false;
    }
    Rng rng(40404);
    for (int i = 0; i < 20; ++i) {
        CyclicGModule m = testutil::random_module(rng, 6, 4);
        for (unsigned p = 1; p <= 2; ++p)
            if (cohomology(m, p) != cohomology(m, p + 2)) return false;
    }
    return true;
}

bool criterion_5() {
    std::vector<CyclicGModule> modules = {
        k3_enriques_module(),      k3n_module(3),        k3n_module(5),
        abelian_surface_module(2), abelian_surface_module(3), abelian_surface_module(4),
        kummer_module(3, 2),       kummer_module(2, 3),  kummer_module(3, 4)};
    Rng rng(50505);
    for (int i = 0; i < 50; ++i) modules.push_back(testutil::random_module(rng, 5, 4));
    for (const CyclicGModule& m : modules) {
        IntMatrix n = norm_endomorphism(m);
        IntMatrix oms = m.one_minus_sigma();
        if (!(n * oms).is_zero() || !(oms * n).is_zero()) return false;
    }
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    for (int i = 0; i < 200; ++i) {
        IntMatrix a = testutil::random_matrix(rng, dim(rng), dim(rng), 9);
        HnfResult h = hermite_normal_form(a);
        if (h.U * a != h.H) return false;
        if (abs(det(h.U)) != 1) return false;
        SnfResult s = smith_normal_form(a);
        if (s.U * a * s.V != s.D) return false;
        if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1) return false;
    }
    return true;
}

bool criterion_6() {
    Rng rng(60606);
    int done = 0;
    while (done < 50) {
        CyclicGModule m = testutil::random_module(rng, 3, 4);
        auto oracle = testutil::brute_force_h1_order(m);
        if (!oracle) continue;
        auto h1 = cohomology(m, 1);
        if (h1.free_rank != 0) return false;
        if (h1.torsion_order() != static_cast<unsigned long>(*oracle)) return false;
        ++done;
    }
    return true;
}

bool criterion_7() {
    const long n = 3;
    const std::size_t r = k3n_rank(n);
    // directions: two F diagonals, delta, the two U coordinates
    std::vector<LatticeVector> dirs(5, LatticeVector(r, 0));
    dirs[0][0] = 1;
    dirs[0][10] = 1;
    dirs[1][1] = 1;
    dirs[1][11] = 1;
    dirs[2][20] = 1;
    dirs[3][r - 2] = 1;
    dirs[4][r - 1] = 1;
    long c[5];
    for (c[0] = -1; c[0] <= 1; ++c[0])
        for (c[1] = -1; c[1] <= 1; ++c[1])
            for (c[2] = -1; c[2] <= 1; ++c[2])
                for (c[3] = -1; c[3] <= 1; ++c[3])
                    for (c[4] = -1; c[4] <= 1; ++c[4]) {
                        LatticeVector lam(r, 0);
                        for (int k = 0; k < 5; ++k)
                            for (std::size_t i = 0; i < r; ++i) lam[i] += c[k] * dirs[k][i];
                        if (condition_anti_qmod4(n, lam) != condition_kernel_not_coboundary(n, lam))
                            return false;
                    }
    Rng rng(70707);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int iter = 0; iter < 1000; ++iter) {
        LatticeVector lam(r, 0);
        if (iter % 2) {
            for (auto& x : lam) x = dist(rng);
        } else {  // anti-invariant samples exercise the nontrivial branch
            for (std::size_t i = 0; i < 10; ++i) {
                lam[i] = dist(rng);
                lam[10 + i] = -lam[i];
            }
            lam[r - 2] = dist(rng);
            lam[r - 1] = dist(rng);
        }
        if (condition_anti_qmod4(n, lam) != condition_kernel_not_coboundary(n, lam)) return false;
    }
    return true;
}

bool criterion_8() {
    if (f2::rank(invariant_mod2_subspace(3)) != 13) return false;
    if (f2::rank(image_pullback_mod2(3)) != 12) return false;
    if (!in_image_pullback_mod2(3, epsilon(3))) return false;
    F2Vec e(23, 0);
    e[21] = 1;
    if (in_image_pullback_mod2(3, e)) return false;
    return in_kernel_pushforward_U2({0, 0}) && in_kernel_pushforward_U2({1, 1}) &&
           !in_kernel_pushforward_U2({1, 0}) && !in_kernel_pushforward_U2({0, 1});
}

bool criterion_9() {
    Rng rng(90909);
    for (int iter = 0; iter < 100; ++iter) {
        CyclicGModule m = testutil::random_module(rng, 5, 4);
        IntVec c = testutil::random_vector(rng, m.rank, 9);
        for (unsigned k = 0; k < m.order; ++k) {
            IntVec lhs = m.action.apply(partial_norm(m, c, k));
            for (std::size_t j = 0; j < m.rank; ++j) lhs[j] += c[j];
            if (lhs != partial_norm(m, c, k + 1)) return false;
        }
    }
    for (int iter = 0; iter < 100; ++iter) {
        CyclicGModule m = testutil::random_module(rng, 5, 4);
        IntVec v = testutil::random_vector(rng, m.rank, 9);
        IntVec c = m.one_minus_sigma().apply(v);
        auto w = descent_trivial(m, c);
        if (!w || m.one_minus_sigma().apply(*w) != c) return false;
    }
    CyclicGModule hs = k3n_module(3);
    IntVec ef(23, 0);
    ef[21] = 1;
    ef[22] = 1;
    if (descent_trivial(hs, ef).has_value()) return false;
    for (const auto& spec :
         {FamilySpec(Family::En, 1), FamilySpec(Family::En, 3), FamilySpec(Family::Kn, 3),
          FamilySpec(Family::Tn, 1), FamilySpec(Family::Rn, 1)}) {
        CyclicGModule m = family_module(spec);
        std::vector<IntVec> basis;
        for (std::size_t i = 0; i < m.rank; ++i) {
            IntVec v(m.rank, 0);
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        if (brauer_pullback_kernel(m, basis) != cohomology(m, 1)) return false;
    }
    return true;
}

std::string run_report(const std::string& format) {
    std::string cmd = std::string(ENRIQUES_CLI_PATH) + " report --format " + format;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "";
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
    pclose(pipe);
    return out;
}

bool criterion_10() {
    std::string a = run_report("md");
    std::string b = run_report("md");
    if (a.empty() || a != b) return false;
    if (run_report("json") != run_report("json")) return false;
    for (const char* needle : {"En", "Kn", "Tn", "Rn", "Z/2", "Z/3 + Z/3",
                               "Z/2 + Z/2 + Z/2 + Z/2", "Theorem 4.1", "Remark 4.3"})
        if (a.find(needle) == std::string::npos) return false;
    return true;
}

}  // namespace

int main() {
    report(1, "Br = Z/2 for the index-2 Hilbert-scheme family, H1 = (Z/2)^2", criterion_1());
    report(2, "Br = (Z/3)^2 for the index-3 family; m = 2 flagged conditional", criterion_2());
    report(3, "conditional (Z/2)^2 and (Z/2)^4 results; Smith diagonals of 1 - psi",
           criterion_3());
    report(4, "trivial coefficients for d in 2..6 and 2-periodicity", criterion_4());
    report(5, "algebraic identities and SNF/HNF reconstruction on random input", criterion_5());
    report(6, "H^1 matches brute-force coset enumeration on 50 random modules", criterion_6());
    report(7, "the two vanishing conditions agree (exhaustive box + 1000 random)",
           criterion_7());
    report(8, "mod-2 dimensions 13/12, epsilon membership, pushforward kernel", criterion_8());
    report(9, "telescoping, descent recognition/rejection, pullback kernel = H^1",
           criterion_9());
    report(10, "reproduction report deterministic with all four results cited", criterion_10());
    if (failures) {
        std::printf("%d acceptance criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
