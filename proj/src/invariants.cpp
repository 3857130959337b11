#include "negfont/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "negfont/fonts.hpp"
#include "negfont/ptrans.hpp"

namespace negfont {

namespace {

void require(const PureState& s, int n, const char* what) {
    if (s.n_qubits() != n) {
        throw Error(ErrorCode::WrongArity, std::string(what) + " needs " + std::to_string(n) + " qubits, got " +
                                               std::to_string(s.n_qubits()));
    }
}

struct ThreeQubitCore {
    cplx d_spect0, d_spect1;  // D^{00}_{(A3)0}, D^{00}_{(A3)1}
    cplx d000, d001;
};

// Determinants of a three-qubit state for the pair A1A2, spectator A3.
ThreeQubitCore three_core(const PureState& s) {
    auto a = [&s](std::size_t i) { return s[i]; };
    return {
        a(0b000) * a(0b110) - a(0b010) * a(0b100),
        a(0b001) * a(0b111) - a(0b011) * a(0b101),
        a(0b000) * a(0b111) - a(0b011) * a(0b100),
        a(0b001) * a(0b110) - a(0b010) * a(0b101),
    };
}

double pair_n_sq(const ThreeQubitCore& c) {
    return std::norm(c.d_spect1) + std::norm(c.d_spect0) + 2.0 * std::norm(0.5 * (c.d000 + c.d001));
}

// Order that lists the pair first and the spectator last.
std::array<int, 3> spectator_last(int spectator) {
    switch (spectator) {
        case 1: return {2, 3, 1};
        case 2: return {1, 3, 2};
        default: return {1, 2, 3};
    }
}

std::array<int, 4> singled_last(int singled) {
    std::array<int, 4> order{};
    int k = 0;
    for (int q = 1; q <= 4; ++q)
        if (q != singled) order[static_cast<std::size_t>(k++)] = q;
    order[3] = singled;
    return order;
}

cplx det3(const std::array<std::array<cplx, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

bool is_zero(cplx v, int deg, double norm, double tol) { return is_zero(std::abs(v), deg, norm, tol); }

bool is_zero(double v, int deg, double norm, double tol) { return std::abs(v) <= tol * std::pow(norm, deg); }

double i2_pair(const PureState& s) {
    require(s, 2, "i2_pair");
    return std::abs(s[0b00] * s[0b11] - s[0b01] * s[0b10]);
}

ThreeQubitReport three_qubit_report(const PureState& s, double tol) {
    require(s, 3, "three_qubit_report");
    ThreeQubitReport r;
    const ThreeQubitCore base = three_core(s);
    r.d2_a1a2 = {base.d_spect0, base.d_spect1};
    r.d000 = base.d000;
    r.d001 = base.d001;
    // Printed D^{010} is the non-canonical row pattern of D^{001}.
    r.d010 = s[0b010] * s[0b101] - s[0b001] * s[0b110];

    for (int m = 1; m <= 3; ++m) {
        const auto order = spectator_last(m);
        const PureState ps = permute_qubits(s, order);
        const ThreeQubitCore c = three_core(ps);
        const auto idx = static_cast<std::size_t>(m - 1);
        r.n_pair_sq[idx] = pair_n_sq(c);
        r.w_sums[idx] = std::abs(c.d_spect0) + std::abs(c.d_spect1);
        if (m == 2) r.d2_a1a3 = {c.d_spect0, c.d_spect1};
        if (m == 1) r.d2_a2a3 = {c.d_spect0, c.d_spect1};
    }
    r.n_global_sq = 4.0 * r.n_pair_sq[2] + 4.0 * r.n_pair_sq[1];

    const cplx sum3 = base.d000 + base.d001;
    r.i3 = sum3 * sum3 - 4.0 * base.d_spect0 * base.d_spect1;
    r.tau3 = 4.0 * std::abs(r.i3);
    r.i3_zero = is_zero(r.i3, degree::i3, s.norm(), tol);

    const auto& w = r.w_sums;
    r.i2_w = 3.0 * (w[0] * w[1] + w[0] * w[2] + w[1] * w[2]);
    return r;
}

NegativityRelation n_global_sq_relation(const PureState& s) {
    require(s, 3, "n_global_sq_relation");
    const double ng = negativity(s, 1, Transpose::global());
    return {ng * ng, three_qubit_report(s).n_global_sq};
}

cplx i4(const PureState& s) {
    require(s, 4, "i4");
    return d4(s, 0, 0) + d4(s, 1, 1) - d4(s, 1, 0) - d4(s, 0, 1);
}

cplx i3_conditional(const PureState& s, int i4bit) {
    require(s, 4, "i3_conditional");
    const cplx sum3 = d3c(s, Triple::A1A2A3, 0, i4bit) + d3c(s, Triple::A1A2A3, 1, i4bit);
    return sum3 * sum3 - 4.0 * d2(s, 0, i4bit) * d2(s, 1, i4bit);
}

TPInvariants t_p_invariants(const PureState& s) {
    require(s, 4, "t_p_invariants");
    const cplx four = d4(s, 0, 0) + d4(s, 1, 1) + d4(s, 1, 0) + d4(s, 0, 1);
    // D^{000} + D^{001} for the triple A1A2A4 at A3 = 0, 1 and for A1A2A3 at A4 = 0, 1.
    const cplx c3_0 = d3c(s, Triple::A1A2A4, 0, 0) + d3c(s, Triple::A1A2A4, 1, 0);
    const cplx c3_1 = d3c(s, Triple::A1A2A4, 0, 1) + d3c(s, Triple::A1A2A4, 1, 1);
    const cplx c4_0 = d3c(s, Triple::A1A2A3, 0, 0) + d3c(s, Triple::A1A2A3, 1, 0);
    const cplx c4_1 = d3c(s, Triple::A1A2A3, 0, 1) + d3c(s, Triple::A1A2A3, 1, 1);

    TPInvariants r;
    r.t = four * four / 6.0 - (2.0 / 3.0) * c3_0 * c3_1 + c4_0 * c4_1 / 3.0 -
          (2.0 / 3.0) * (d2(s, 0, 0) * d2(s, 1, 1) + d2(s, 0, 1) * d2(s, 1, 0));
    r.p0 = 0.5 * c4_0 * four - (d2(s, 1, 0) * c3_0 + d2(s, 0, 0) * c3_1);
    r.p1 = 0.5 * c4_1 * four - (d2(s, 1, 1) * c3_0 + d2(s, 0, 1) * c3_1);
    return r;
}

TripleInvariants triple_invariants(const PureState& s, int singled) {
    require(s, 4, "triple_invariants");
    if (singled < 1 || singled > 4) throw Error(ErrorCode::QubitOutOfRange, "singled qubit must be 1..4");
    const PureState ps = singled == 4 ? s : permute_qubits(s, singled_last(singled));

    TripleInvariants r;
    r.singled = singled;
    r.i3_0 = i3_conditional(ps, 0);
    r.i3_1 = i3_conditional(ps, 1);
    const TPInvariants tp = t_p_invariants(ps);
    r.t = tp.t;
    r.p0 = tp.p0;
    r.p1 = tp.p1;
    r.i48 = 3.0 * r.t * r.t - 4.0 * r.p0 * r.p1 + r.i3_0 * r.i3_1;
    r.j12 = det3({{{r.i3_1, r.p1, r.t}, {r.p1, r.t, r.p0}, {r.t, r.p0, r.i3_0}}});
    r.delta = r.i48 * r.i48 * r.i48 - 27.0 * r.j12 * r.j12;
    r.n_sq = std::norm(r.i3_0) + std::norm(r.i3_1) + 6.0 * std::norm(r.t) + 4.0 * std::norm(r.p0) +
             4.0 * std::norm(r.p1);
    return r;
}

cplx i48(const PureState& s) { return triple_invariants(s).i48; }
cplx j12(const PureState& s) { return triple_invariants(s).j12; }
cplx delta24(const PureState& s) { return triple_invariants(s).delta; }
double n_triple_sq(const PureState& s, int singled) { return triple_invariants(s, singled).n_sq; }

double pair_sum(const PureState& s, int p, int q) {
    require(s, 4, "pair_sum");
    if (p < 1 || q < 1 || p > 4 || q > 4 || p == q) throw Error(ErrorCode::QubitOutOfRange, "bad qubit pair");
    const std::size_t mp = qubit_mask(4, p), mq = qubit_mask(4, q);
    double acc = 0.0;
    for (std::size_t t = 0; t < 16; ++t) {
        if (t & (mp | mq)) continue;  // t enumerates the spectator bits
        acc += std::abs(s[t] * s[t | mp | mq] - s[t | mq] * s[t | mp]);
    }
    return acc;
}

double i2_w_four(const PureState& s, int p, int q, int r) { return 3.0 * pair_sum(s, p, q) * pair_sum(s, p, r); }

double i26_literal(const PureState& s) {
    require(s, 4, "i26_literal");
    const double i12 = pair_sum(s, 1, 2), i13 = pair_sum(s, 1, 3), i14 = pair_sum(s, 1, 4);
    const double i23 = pair_sum(s, 2, 3), i24 = pair_sum(s, 2, 4), i34 = pair_sum(s, 3, 4);
    const double w123 = 3.0 * i12 * i13;
    const double w124 = 3.0 * i12 * i14;
    const double w134 = 3.0 * i13 * i14;
    return 1.5 * w123 * (i14 + i24 + i34) + 1.5 * w124 * (i23 + i34) + 1.5 * w134 * i24;
}

double i26_symmetrized(const PureState& s) {
    require(s, 4, "i26_symmetrized");
    std::array<int, 4> perm{1, 2, 3, 4};
    double acc = 0.0;
    int count = 0;
    do {
        acc += i26_literal(permute_qubits(s, perm));
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc / count;
}

FourQubitReport aggregate_invariants(const PureState& s, int triple) {
    require(s, 4, "aggregate_invariants");
    if (triple < 1 || triple > 4) throw Error(ErrorCode::QubitOutOfRange, "triple selector must be 1..4");
    FourQubitReport r;
    r.triple = triple;
    r.i4 = i4(s);
    r.tau4 = 4.0 * std::abs(r.i4);
    for (int l = 1; l <= 4; ++l) {
        r.triples[static_cast<std::size_t>(l - 1)] = triple_invariants(s, l);
        r.n_triple_sq[static_cast<std::size_t>(l - 1)] = r.triples[static_cast<std::size_t>(l - 1)].n_sq;
    }
    const TripleInvariants& head = r.triples[static_cast<std::size_t>(triple - 1)];
    r.i3_cond = {head.i3_0, head.i3_1};
    r.t_inv = head.t;
    r.p_inv = {head.p0, head.p1};
    r.i48 = head.i48;
    r.j12 = head.j12;
    r.delta24 = head.delta;
    for (const TripleInvariants& t : r.triples) {
        r.cross_triple_i48_dev = std::max(r.cross_triple_i48_dev, std::abs(t.i48 - head.i48));
        r.cross_triple_delta_dev = std::max(r.cross_triple_delta_dev, std::abs(t.delta - head.delta));
    }

    const auto& nsq = r.n_triple_sq;
    r.n44_sq = 16.0 * (nsq[3] + nsq[2] + nsq[1]);
    const double n1 = std::sqrt(nsq[0]), n2 = std::sqrt(nsq[1]), n3 = std::sqrt(nsq[2]), n4 = std::sqrt(nsq[3]);
    r.n48 = 16.0 * n1 * n2 + 16.0 * (n1 + n2) * n3 + 16.0 * (n1 + n2 + n3) * n4;

    for (std::size_t k = 0; k < kPairs.size(); ++k) r.pair_sums[k] = pair_sum(s, kPairs[k][0], kPairs[k][1]);
    r.i26 = i26_literal(s);
    r.i26_sym = i26_symmetrized(s);
    r.dres = head.n_sq - 2.0 * std::abs(head.i48);
    r.tau48 = 4.0 * std::abs(std::sqrt(12.0 * r.i48));
    return r;
}

}  // namespace negfont
