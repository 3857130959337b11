#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "negfont/catalog.hpp"
#include "negfont/checks.hpp"
#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/ptrans.hpp"

using namespace negfont;

namespace {

// Cayley hyperdeterminant of a 2x2x2 array, written out in amplitudes.
cplx cayley(const PureState& s) {
    auto a = [&](int i) { return s[static_cast<std::size_t>(i)]; };
    const cplx d1 = a(0) * a(0) * a(7) * a(7) + a(1) * a(1) * a(6) * a(6) + a(2) * a(2) * a(5) * a(5) +
                    a(4) * a(4) * a(3) * a(3);
    const cplx d2 = a(0) * a(7) * a(3) * a(4) + a(0) * a(7) * a(5) * a(2) + a(0) * a(7) * a(6) * a(1) +
                    a(3) * a(4) * a(5) * a(2) + a(3) * a(4) * a(6) * a(1) + a(5) * a(2) * a(6) * a(1);
    const cplx d3 = a(0) * a(6) * a(5) * a(3) + a(7) * a(1) * a(2) * a(4);
    return d1 - 2.0 * d2 + 4.0 * d3;
}

// I4 as the signed sum over complementary index pairs.
cplx i4_direct(const PureState& s) {
    cplx acc = 0;
    for (std::size_t i = 0; i < 8; ++i) acc += (std::popcount(i) % 2 ? -1.0 : 1.0) * s[i] * s[15 - i];
    return acc;
}

// Discriminant of A x^4 + B x^3 + C x^2 + D x + E through the resolvent cubic of
// the monic quartic x^4 + p x^3 + q x^2 + r x + s: z^3 - q z^2 + (pr - 4s) z - (p^2 s - 4 q s + r^2).
cplx quartic_discriminant(cplx A, cplx B, cplx C, cplx D, cplx E) {
    const cplx p = B / A, q = C / A, r = D / A, s = E / A;
    const cplx b = -q, c = p * r - 4.0 * s, d = -(p * p * s - 4.0 * q * s + r * r);
    const cplx cubic = b * b * c * c - 4.0 * c * c * c - 4.0 * b * b * b * d - 27.0 * d * d + 18.0 * b * c * d;
    return std::pow(A, 6) * cubic;
}

PureState cat(const char* name) { return normalize(catalog_state(name)); }

PureState product_3_1(std::uint64_t seed) {
    const PureState tri = random_state(3, seed);
    const PureState two = random_state(2, seed + 1);
    // Single qubit taken from the first row of a random two-qubit state.
    std::vector<cplx> v(16);
    for (std::size_t i = 0; i < 8; ++i) {
        v[2 * i] = tri[i] * two[0];
        v[2 * i + 1] = tri[i] * two[1];
    }
    return normalize(make_state(4, v));
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Invariants, I2Pair) {
    EXPECT_NEAR(i2_pair(cat("Bell")), 0.5, 1e-15);
    EXPECT_EQ(i2_pair(make_state(2, {1.0, 0.0, 0.0, 0.0})), 0.0);
    EXPECT_NEAR(i2_pair(make_state(2, {0.5, 0.5, 0.5, 0.5})), 0.0, 1e-16);
    EXPECT_THROW(i2_pair(random_state(3, 1)), Error);
}

TEST(Invariants, ThreeQubitExamples) {
    const ThreeQubitReport g = three_qubit_report(cat("GHZ3"));
    EXPECT_NEAR(std::abs(g.i3 - 0.25), 0.0, 1e-15);
    EXPECT_NEAR(g.tau3, 1.0, 1e-12);

    const ThreeQubitReport w = three_qubit_report(cat("W3"));
    EXPECT_NEAR(std::abs(w.i3), 0.0, 1e-15);
    EXPECT_NEAR(w.tau3, 0.0, 1e-12);
    EXPECT_TRUE(w.i3_zero);
    EXPECT_NEAR(w.i2_w, 1.0, 1e-12);

    // |Psi^{A1A2}>|Psi^{A3}>
    for (std::uint64_t t = 0; t < 20; ++t) {
        const PureState pair = random_state(2, t);
        std::vector<cplx> v(8);
        const cplx u0{0.6, 0.1}, u1{-0.3, 0.7};
        for (std::size_t i = 0; i < 4; ++i) {
            v[2 * i] = pair[i] * u0;
            v[2 * i + 1] = pair[i] * u1;
        }
        const ThreeQubitReport r = three_qubit_report(normalize(make_state(3, v)));
        EXPECT_NEAR(std::abs(r.i3), 0.0, 1e-15);
        EXPECT_NEAR(r.i2_w, 0.0, 1e-12);
    }
    EXPECT_THROW(three_qubit_report(random_state(4, 1)), Error);
}

TEST(Invariants, ThreeQubitOracle) {
    for (std::uint64_t t = 0; t < 200; ++t) {
        const PureState s = random_state(3, 50 + t);
        const ThreeQubitReport r = three_qubit_report(s);
        ASSERT_NEAR(std::abs(r.i3 - cayley(s)), 0.0, 1e-14);
        ASSERT_NEAR(r.tau3, 4.0 * std::abs(r.i3), 1e-15);
        const double n2 = std::norm(r.d2_a1a2[1]) + std::norm(r.d2_a1a2[0]) +
                          2.0 * std::norm((r.d000 + r.d001) / 2.0);
        ASSERT_NEAR(r.n_pair_sq[2], n2, 1e-15);
    }
}

TEST(Invariants, ThreeQubitPairVariantsAgreeOnI3) {
    // I3 does not depend on which pair is chosen.
    for (std::uint64_t t = 0; t < 50; ++t) {
        const PureState s = random_state(3, 700 + t);
        const cplx base = three_qubit_report(s).i3;
        const std::vector<int> perms[] = {{2, 3, 1}, {1, 3, 2}, {3, 2, 1}};
        for (const auto& p : perms) ASSERT_NEAR(std::abs(three_qubit_report(permute_qubits(s, p)).i3 - base), 0.0, 1e-14);
    }
}

TEST(Invariants, DegenerateBranchInvariance) {
    // With I3 = 0, |D_0| + |D_1| is unchanged by unitaries on A3.
    const PureState w = cat("W3");
    const double base = three_qubit_report(w).w_sums[2];
    for (std::uint64_t t = 0; t < 100; ++t) {
        const PureState u = apply_local_unitary(w, random_special_unitary(t, 3));
        ASSERT_NEAR(three_qubit_report(u).w_sums[2], base, 1e-9);
    }
}

TEST(Invariants, NegativityRelation) {
    const NegativityRelation g = n_global_sq_relation(cat("GHZ3"));
    EXPECT_NEAR(g.lhs, 1.0, 1e-12);
    EXPECT_NEAR(g.rhs, 1.0, 1e-12);
    const NegativityRelation z = n_global_sq_relation(make_state(3, {1.0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_NEAR(z.lhs, 0.0, 1e-15);
    EXPECT_NEAR(z.rhs, 0.0, 1e-15);
    const SuiteResult r = check_negativity_relation(300, 3);
    EXPECT_TRUE(r.passed()) << r.max_residual;
}

TEST(Invariants, I4Examples) {
    EXPECT_NEAR(std::abs(i4(cat("GHZ4")) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i4(cat("C1"))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i4(cat("W4"))), 0.0, 1e-15);
    for (std::uint64_t t = 0; t < 100; ++t) {
        const PureState s = random_state(4, 60 + t);
        ASSERT_NEAR(std::abs(i4(s) - i4_direct(s)), 0.0, 1e-15);
    }
    EXPECT_THROW(i4(random_state(3, 1)), Error);
}

TEST(Invariants, ConditionalI3AndTP) {
    const cplx a{0.9, -0.2}, b{0.4, 0.5};
    const PureState psi = catalog_state("Psi_ab", {{"a", a}, {"b", b}});
    EXPECT_LT(rel(i3_conditional(psi, 0), a * a * b * b), 1e-13);
    EXPECT_LT(rel(i3_conditional(psi, 1), b * b * b * b), 1e-13);
    const TPInvariants tp = t_p_invariants(psi);
    EXPECT_LT(rel(tp.t, (a * a * a * a - 2.0 * a * b * b * b) / 6.0), 1e-13);
    EXPECT_LT(rel(tp.p0, 0.5 * a * a * a * b), 1e-13);
    EXPECT_LT(rel(tp.p1, -0.5 * a * a * b * b), 1e-13);
    EXPECT_LT(rel(i48(psi), std::pow(a * a * a * a + 4.0 * a * b * b * b, 2) / 12.0), 1e-13);

    const PureState brown = cat("BrownPhi");
    EXPECT_NEAR(std::abs(i3_conditional(brown, 0) - 1.0 / 32), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i3_conditional(brown, 1) - 1.0 / 32), 0.0, 1e-15);
    const TPInvariants btp = t_p_invariants(brown);
    EXPECT_NEAR(std::abs(btp.t - 1.0 / 32), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(btp.p0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(btp.p1), 0.0, 1e-15);

    const PureState hs = cat("HS");
    const TPInvariants htp = t_p_invariants(hs);
    EXPECT_NEAR(std::abs(htp.t), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(htp.p0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(htp.p1), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i3_conditional(hs, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i3_conditional(hs, 1)), 0.0, 1e-15);
}

TEST(Invariants, QuarticTransformationLaw) {
    // (I3)'_{(A4)1} = [x^4 I3_0 + 4 x^3 P0 + 6 x^2 T + 4 x P1 + I3_1] / (1 + |x|^2)^2
    for (std::uint64_t t = 0; t < 50; ++t) {
        const PureState s = random_state(4, 80 + t);
        std::mt19937_64 rng(t);
        std::normal_distribution<double> g;
        const cplx x{g(rng), g(rng)};
        const PureState u = apply_local_unitary(s, unitary_from_x(x, 4));
        const TPInvariants tp = t_p_invariants(s);
        const cplx want = (std::pow(x, 4) * i3_conditional(s, 0) + 4.0 * std::pow(x, 3) * tp.p0 +
                           6.0 * x * x * tp.t + 4.0 * x * tp.p1 + i3_conditional(s, 1)) /
                          std::pow(1.0 + std::norm(x), 2);
        ASSERT_LT(rel(i3_conditional(u, 1), want), 1e-10);
    }
}

TEST(Invariants, I48Examples) {
    EXPECT_NEAR(std::abs(i48(cat("GHZ4")) - 1.0 / 192), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(i48(cat("BrownPhi")) - 1.0 / 256), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(j12(cat("GHZ4")) + std::pow(1.0 / 24, 3)), 0.0, 1e-17);
    EXPECT_NEAR(std::abs(delta24(cat("GHZ4"))), 0.0, 1e-20);
}

TEST(Invariants, DeltaPsiAbQuoted) {
    const TripleInvariants t = triple_invariants(normalize(catalog_state("Psi_ab", {{"a", 1.0}, {"b", 1.0}})), 4);
    EXPECT_GT(std::abs(t.delta), 1e-9 * (std::pow(std::abs(t.i48), 3) + 27.0 * std::norm(t.j12)));
}

TEST(Invariants, DeltaPsiAbFromQuotedCoefficients) {
    // I3_0 = a^2 b^2, I3_1 = b^4, P0 = a^3 b / 2, P1 = -a^2 b^2 / 2, T = (a^4 - 2ab^3)/6
    // give I^3 - 27 J^2 = 0 identically (frozen from a symbolic expansion).
    for (const auto& [a, b] : std::vector<std::pair<cplx, cplx>>{{1.0, 1.0}, {1.0, 2.0}, {{0.3, 0.8}, {-1.1, 0.4}}}) {
        const cplx i0 = a * a * b * b, i1 = b * b * b * b, p0 = 0.5 * a * a * a * b, p1 = -0.5 * a * a * b * b;
        const cplx t = (a * a * a * a - 2.0 * a * b * b * b) / 6.0;
        const cplx I = 3.0 * t * t - 4.0 * p0 * p1 + i0 * i1;
        const cplx J = i1 * (t * i0 - p0 * p0) - p1 * (p1 * i0 - p0 * t) + t * (p1 * p0 - t * t);
        EXPECT_LE(std::abs(I * I * I - 27.0 * J * J), 1e-12 * std::pow(std::abs(I), 3));
        const PureState s = catalog_state("Psi_ab", {{"a", a}, {"b", b}});
        const TripleInvariants x = triple_invariants(s, 4);
        EXPECT_LE(std::abs(x.delta), 1e-12 * (std::pow(std::abs(x.i48), 3) + 27.0 * std::norm(x.j12)));
    }
}

TEST(Invariants, DeltaOnGab00Line) {
    for (double b : {0.5, 2.0, 3.0}) {
        const PureState s = catalog_state("G_abcd", {{"a", 1.3}, {"b", b}, {"c", 0.0}, {"d", 0.0}});
        const TripleInvariants t = triple_invariants(s, 4);
        EXPECT_LE(std::abs(t.delta), 1e-12 * (std::pow(std::abs(t.i48), 3) + 27 * std::norm(t.j12)));
    }
}

TEST(Invariants, J12OnProducts) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const PureState s = product_3_1(900 + 2 * t);
        ASSERT_LE(std::abs(j12(s)), 1e-15);
    }
}

TEST(Invariants, NTripleSq) {
    const PureState g = cat("GHZ4");
    EXPECT_NEAR(n_triple_sq(g, 4), 1.0 / 96, 1e-16);
    EXPECT_NEAR(n_triple_sq(g, 4), 2.0 * std::abs(i48(g)), 1e-16);
    const cplx a{1.1, 0.2}, b{0.3, -0.6};
    const PureState l = catalog_state("L_a2b2", {{"a", a}, {"b", b}});
    EXPECT_LT(std::abs(n_triple_sq(l, 4) - std::abs(std::pow(a * a - b * b, 4)) / 6.0) / n_triple_sq(l, 4), 1e-12);
}

TEST(Invariants, QuarticDiscriminantOracle) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const PureState s = random_state(4, 1200 + t);
        const TripleInvariants x = triple_invariants(s, 4);
        // a x^4 + 4b x^3 + 6c x^2 + 4d x + e with (a,b,c,d,e) = (I3_0, P0, T, P1, I3_1) has
        // discriminant 256 (I^3 - 27 J^2).
        const cplx disc = quartic_discriminant(x.i3_0, 4.0 * x.p0, 6.0 * x.t, 4.0 * x.p1, x.i3_1);
        ASSERT_LT(rel(256.0 * x.delta, disc), 1e-8) << t;
    }
}

TEST(Invariants, LocalUnitaryInvariance) {
    const SuiteResult r = check_invariance(500, 11);
    EXPECT_TRUE(r.passed()) << r.worst << " " << r.max_residual;

    // Modulus quantities under arbitrary (non-special) local unitaries.
    for (std::uint64_t t = 0; t < 200; ++t) {
        const PureState s = random_state(4, 2000 + t);
        PureState u = s;
        for (int q = 1; q <= 4; ++q) {
            const LocalUnitary su = random_special_unitary(derive_seed(t, static_cast<std::uint64_t>(q)), q);
            const cplx ph = std::polar(1.0, 0.37 * q + 0.1 * static_cast<double>(t));
            u = apply_local_unitary(u, make_local_unitary(ph * su.m[0], ph * su.m[1], ph * su.m[2], ph * su.m[3], q));
        }
        const FourQubitReport a = aggregate_invariants(s), b = aggregate_invariants(u);
        ASSERT_NEAR(a.tau48, b.tau48, 1e-9);
        ASSERT_NEAR(a.tau4, b.tau4, 1e-9);
        ASSERT_NEAR(a.n48, b.n48, 1e-9);
        ASSERT_NEAR(a.n44_sq, b.n44_sq, 1e-9);
        for (std::size_t l = 0; l < 4; ++l) ASSERT_NEAR(a.n_triple_sq[l], b.n_triple_sq[l], 1e-9);
    }
}

TEST(Invariants, PairSumsInvariantWhenW) {
    // On W-type states every 3- and 4-way font vanishes and the pair sums are invariants.
    const PureState w = cat("W4");
    const FourQubitReport base = aggregate_invariants(w);
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(base.pair_sums[k], 0.25, 1e-15);
    EXPECT_NEAR(base.i26, 27.0 / 64, 1e-15);
}

TEST(Invariants, Homogeneity) {
    const SuiteResult r = check_homogeneity(200, 5);
    EXPECT_TRUE(r.passed()) << r.worst << " " << r.max_residual;
    for (double lam : {0.5, 1.7, 3.0}) {
        const PureState s = random_state(4, 3);
        const PureState ls = scale(s, lam);
        const TripleInvariants x = triple_invariants(s, 4), y = triple_invariants(ls, 4);
        EXPECT_LT(rel(y.delta, x.delta * std::pow(lam, degree::delta)), 1e-9);
        EXPECT_LT(std::abs(y.n_sq - x.n_sq * std::pow(lam, degree::n_triple_sq)) / y.n_sq, 1e-9);
    }
}

TEST(Invariants, Vanishing) {
    for (std::uint64_t t = 0; t < 100; ++t) {
        const PureState a = product_3_1(3000 + 2 * t);
        ASSERT_LE(std::abs(i48(a)), 1e-9);
        const PureState b = tensor(random_state(2, 5000 + t), random_state(2, 6000 + t));
        ASSERT_LE(std::abs(i48(b)), 1e-9);
    }
    EXPECT_LE(std::abs(i48(cat("W4"))), 1e-15);
    const SuiteResult r = check_vanishing(100, 1);
    EXPECT_TRUE(r.passed()) << r.max_residual;
}

TEST(Invariants, Monotones) {
    for (const char* name : {"GHZ4", "C1", "C2", "C3"}) {
        EXPECT_NEAR(aggregate_invariants(cat(name)).tau48, 1.0, 1e-9) << name;
    }
    const FourQubitReport brown = aggregate_invariants(cat("BrownPhi"));
    EXPECT_NEAR(std::abs(brown.i48 - 1.0 / 256), 0.0, 1e-12);
    EXPECT_NEAR(brown.tau48, std::sqrt(0.75), 1e-10);

    const FourQubitReport hs = aggregate_invariants(cat("HS"));
    EXPECT_NEAR(hs.tau48, 0.0, 1e-9);
    EXPECT_NEAR(hs.i26, 1.0, 1e-9);
    const FourQubitReport w = aggregate_invariants(cat("W4"));
    EXPECT_NEAR(w.tau48, 0.0, 1e-9);
    EXPECT_NEAR(w.i26, 27.0 / 64, 1e-9);
}

TEST(Invariants, DickeTau48Quoted) {
    EXPECT_NEAR(aggregate_invariants(cat("Dicke42")).tau48, 5.0 / 9.0, 1e-9);
}

TEST(Invariants, DickeFromPrintedFormulas) {
    // Frozen by hand from the printed T definition: T = -1/72, P = I3 = 0, so tau48 = 4 sqrt(36/72^2) = 1/3.
    const PureState d = cat("Dicke42");
    const TPInvariants tp = t_p_invariants(d);
    EXPECT_NEAR(std::abs(tp.t + 1.0 / 72), 0.0, 1e-15);
    EXPECT_NEAR(aggregate_invariants(d).tau48, 1.0 / 3.0, 1e-12);
}

TEST(Invariants, ReportConsistency) {
    for (std::uint64_t t = 0; t < 50; ++t) {
        const PureState s = random_state(4, 7000 + t);
        const FourQubitReport r = aggregate_invariants(s);
        ASSERT_LT(rel(r.delta24, r.i48 * r.i48 * r.i48 - 27.0 * r.j12 * r.j12), 1e-12);
        ASSERT_NEAR(r.tau48, 4.0 * std::abs(std::sqrt(12.0 * r.i48)), 1e-14);
        ASSERT_NEAR(r.dres, r.n_triple_sq[3] - 2.0 * std::abs(r.i48), 1e-15);
        ASSERT_NEAR(r.tau4, 4.0 * std::abs(r.i4), 1e-15);
        ASSERT_GE(r.dres, -1e-15);
    }
}

TEST(Invariants, CrossTripleMeasured) {
    const FourQubitReport brown = aggregate_invariants(cat("BrownPhi"));
    for (const auto& t : brown.triples) EXPECT_NEAR(std::abs(t.i48 - 1.0 / 256), 0.0, 1e-14);
    EXPECT_LE(brown.cross_triple_i48_dev, 1e-14);

    const FourQubitReport d = aggregate_invariants(cat("Dicke42"));
    for (std::size_t l = 1; l < 4; ++l) EXPECT_NEAR(d.n_triple_sq[l], d.n_triple_sq[0], 1e-15);

    // On random states the deviation is reported, whatever it is.
    const FourQubitReport r = aggregate_invariants(random_state(4, 1));
    EXPECT_TRUE(std::isfinite(r.cross_triple_i48_dev));
    EXPECT_TRUE(std::isfinite(r.cross_triple_delta_dev));
}

TEST(Invariants, I26Variants) {
    const FourQubitReport hs = aggregate_invariants(cat("HS"));
    EXPECT_NEAR(hs.i26_sym, 1.0, 1e-12);
    const FourQubitReport w = aggregate_invariants(cat("W4"));
    EXPECT_NEAR(w.i26_sym, 27.0 / 64, 1e-12);
}

TEST(Invariants, ZeroTest) {
    EXPECT_TRUE(is_zero(cplx(1e-10), 8, 1.0));
    EXPECT_FALSE(is_zero(cplx(1e-8), 8, 1.0));
    // Degree-aware: the same polynomial on a scaled state keeps its verdict.
    EXPECT_TRUE(is_zero(cplx(1e-10 * std::pow(3.0, 8)), 8, 3.0));
}
