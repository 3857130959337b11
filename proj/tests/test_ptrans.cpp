#include <gtest/gtest.h>

#include <cmath>

#include "negfont/catalog.hpp"
#include "negfont/ptrans.hpp"

using namespace negfont;

namespace {

// Pure-state Schmidt oracle: N = 2 sqrt(det rho_p), rho_p built by hand.
double schmidt_negativity(const PureState& s, int p) {
    const int n = s.n_qubits();
    const std::size_t m = qubit_mask(n, p);
    cplx r00 = 0, r11 = 0, r01 = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & m) continue;
        r00 += std::norm(s[i]);
        r11 += std::norm(s[i | m]);
        r01 += s[i] * std::conj(s[i | m]);
    }
    const double det = (r00 * r11).real() - std::norm(r01);
    return 2.0 * std::sqrt(std::max(det, 0.0));
}

PureState bell() { return normalize(catalog_state("Bell")); }

}  // namespace

TEST(Ptrans, DensityFromPure) {
    const DensityMatrix z = density_from_pure(make_state(2, {1.0, 0.0, 0.0, 0.0}));
    EXPECT_EQ(z.entries(0, 0), cplx(1.0));
    EXPECT_EQ(max_abs(z.entries) , 1.0);
    EXPECT_NEAR(std::abs(z.entries.trace() - 1.0), 0.0, 1e-15);

    const DensityMatrix g = density_from_pure(normalize(catalog_state("GHZ4")));
    int big = 0;
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            if (std::abs(g.entries(i, j)) > 1e-15) {
                ++big;
                EXPECT_NEAR(std::abs(g.entries(i, j)), 0.5, 1e-15);
                EXPECT_TRUE((i == 0 || i == 15) && (j == 0 || j == 15));
            }
    EXPECT_EQ(big, 4);
    EXPECT_NEAR(std::abs(density_from_pure(random_state(3, 1)).entries.trace() - 1.0), 0.0, 1e-12);
}

TEST(Ptrans, GlobalExamples) {
    const DensityMatrix z = density_from_pure(make_state(2, {1.0, 0.0, 0.0, 0.0}));
    EXPECT_EQ(global_pt(z, 1).entries, z.entries);

    const auto ev = hermitian_eigenvalues(global_pt(density_from_pure(bell()), 1));
    ASSERT_EQ(ev.size(), 4u);
    EXPECT_NEAR(ev[0], -0.5, 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev[static_cast<std::size_t>(k)], 0.5, 1e-12);

    EXPECT_THROW(global_pt(z, 3), Error);
}

TEST(Ptrans, InvolutionExact) {
    for (std::uint64_t t = 0; t < 500; ++t) {
        const int n = 2 + static_cast<int>(t % 3);
        const DensityMatrix rho = density_from_pure(random_state(n, t));
        const int p = 1 + static_cast<int>(t % static_cast<std::uint64_t>(n));
        DensityMatrix back{n, global_pt(DensityMatrix{n, global_pt(rho, p).entries}, p).entries};
        ASSERT_EQ(back.entries, rho.entries);
    }
}

TEST(Ptrans, HermiticityPreserved) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const int n = 3 + static_cast<int>(t % 2);
        const DensityMatrix rho = density_from_pure(random_state(n, 100 + t));
        for (int p = 1; p <= n; ++p) {
            ASSERT_LT(global_pt(rho, p).entries.hermiticity_defect(), 1e-12);
            for (int k = 2; k <= n; ++k) ASSERT_LT(kway_pt(rho, p, k).entries.hermiticity_defect(), 1e-12);
        }
    }
}

TEST(Ptrans, KWayExamples) {
    const DensityMatrix g = density_from_pure(normalize(catalog_state("GHZ4")));
    for (int p = 1; p <= 4; ++p) EXPECT_LE(max_abs(kway_pt(g, p, 4).entries - global_pt(g, p).entries), 1e-14);

    CMatrix diag(8);
    for (std::size_t i = 0; i < 8; ++i) diag(i, i) = 0.125 * static_cast<double>(i);
    const DensityMatrix d{3, diag};
    for (int k = 2; k <= 3; ++k) EXPECT_EQ(kway_pt(d, 2, k).entries, diag);

    const DensityMatrix b = density_from_pure(bell());
    EXPECT_EQ(kway_pt(b, 1, 2).entries, global_pt(b, 1).entries);

    EXPECT_THROW(kway_pt(g, 1, 5), Error);
    EXPECT_THROW(kway_pt(g, 1, 1), Error);
}

TEST(Ptrans, KWaySelectsByFlipCount) {
    // Hand check on a 3-qubit element: (000|rho|111) has flip count 3, so only K=3 moves it.
    const DensityMatrix rho = density_from_pure(random_state(3, 9));
    const CMatrix k2 = kway_pt(rho, 1, 2).entries, k3 = kway_pt(rho, 1, 3).entries;
    EXPECT_EQ(k3(0b000, 0b111), rho.entries(0b100, 0b011));
    EXPECT_EQ(k2(0b000, 0b111), rho.entries(0b000, 0b111));
    // (000|rho|110) has flip count 2 and qubit 1 differs: K=2 moves it, K=3 does not.
    EXPECT_EQ(k2(0b000, 0b110), rho.entries(0b100, 0b010));
    EXPECT_EQ(k3(0b000, 0b110), rho.entries(0b000, 0b110));
    // (000|rho|100): flip count 1, moved by K=2 only.
    EXPECT_EQ(k2(0b000, 0b100), rho.entries(0b100, 0b000));
    EXPECT_EQ(k3(0b000, 0b100), rho.entries(0b000, 0b100));
}

TEST(Ptrans, DecompositionResidual) {
    EXPECT_LT(decomposition_residual(normalize(catalog_state("GHZ4")), 1), 1e-14);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const int n = 3 + static_cast<int>(t % 2);
        const PureState s = random_state(n, 500 + t);
        for (int p = 1; p <= n; ++p) ASSERT_LT(decomposition_residual(s, p), 1e-12);
    }
}

TEST(Ptrans, EigenvalueExamples) {
    CMatrix id = CMatrix::identity(4);
    for (std::size_t i = 0; i < 4; ++i) id(i, i) = 0.25;
    for (double v : hermitian_eigenvalues(id)) EXPECT_NEAR(v, 0.25, 1e-15);

    const auto ev = hermitian_eigenvalues(density_from_pure(random_state(4, 3)));
    EXPECT_NEAR(ev.back(), 1.0, 1e-12);
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) EXPECT_NEAR(ev[i], 0.0, 1e-12);

    CMatrix bad(2);
    bad(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eigenvalues(bad), Error);
}

TEST(Ptrans, EigenReconstruction) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(t % 3);
        const DensityMatrix rho = density_from_pure(random_state(n, 900 + t));
        const CMatrix m = global_pt(rho, 1 + static_cast<int>(t % static_cast<std::uint64_t>(n))).entries;
        const EigenSystem es = hermitian_eigensystem(m);
        CMatrix lam(m.dim());
        double sum = 0;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            lam(i, i) = es.values[i];
            sum += es.values[i];
            if (i) ASSERT_LE(es.values[i - 1], es.values[i]);
        }
        ASSERT_LT(max_abs(m - es.vectors * lam * es.vectors.adjoint()), 1e-9);
        ASSERT_NEAR(sum, m.trace().real(), 1e-10);
        ASSERT_LT(max_abs(es.vectors.adjoint() * es.vectors - CMatrix::identity(m.dim())), 1e-10);
    }
}

TEST(Ptrans, NegativityExamples) {
    EXPECT_NEAR(negativity(bell(), 1, Transpose::global()), 1.0, 1e-12);
    const PureState zero = make_state(4, [] {
        std::vector<cplx> v(16);
        v[0] = 1.0;
        return v;
    }());
    for (int p = 1; p <= 4; ++p) EXPECT_NEAR(negativity(zero, p, Transpose::global()), 0.0, 1e-15);
    EXPECT_NEAR(negativity(normalize(catalog_state("GHZ3")), 1, Transpose::global()), 1.0, 1e-12);

    const NegativityReport r = negativity_report(bell(), 1, Transpose::global());
    ASSERT_EQ(r.negative_eigenvalues.size(), 1u);
    EXPECT_NEAR(r.negative_eigenvalues[0], -0.5, 1e-12);
}

TEST(Ptrans, NegativityMatchesSchmidtOracle) {
    for (std::uint64_t t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(t % 3);
        const int p = 1 + static_cast<int>((t / 3) % static_cast<std::uint64_t>(n));
        const PureState s = random_state(n, 4000 + t);
        ASSERT_NEAR(negativity(s, p, Transpose::global()), schmidt_negativity(s, p), 1e-9);
    }
}

TEST(Ptrans, OnlyFourWayCoherence) {
    // GHZ4 has only 4-way coherence, so its 4-way negativity equals the global one.
    const PureState g = normalize(catalog_state("GHZ4"));
    EXPECT_NEAR(negativity(g, 1, Transpose::kway(4)), negativity(g, 1, Transpose::global()), 1e-12);
}

TEST(Ptrans, ReducedSingleQubit) {
    const auto r = reduced_single_qubit(normalize(catalog_state("GHZ4")), 2);
    EXPECT_NEAR(r[0].real(), 0.5, 1e-15);
    EXPECT_NEAR(r[3].real(), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(r[1]), 0.0, 1e-15);
}
