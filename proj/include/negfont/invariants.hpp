#pragma once

#include <array>

#include "negfont/state.hpp"

namespace negfont {

/// Homogeneity degrees in the amplitudes.
namespace degree {
inline constexpr int i2 = 2;
inline constexpr int i3 = 4;
inline constexpr int i4 = 2;
inline constexpr int tp = 4;  // T, P and the conditional I3
inline constexpr int i48 = 8;
inline constexpr int n_triple_sq = 8;
inline constexpr int j12 = 12;
inline constexpr int delta = 24;
}  // namespace degree

/// |v| <= tol * ||psi||^deg
bool is_zero(cplx v, int deg, double norm, double tol = 1e-9);
bool is_zero(double v, int deg, double norm, double tol = 1e-9);

/// |a00 a11 - a01 a10|
double i2_pair(const PureState& s);

struct ThreeQubitReport {
    // Pair A1A2 with spectator A3: D^{00}_{(A3)0}, D^{00}_{(A3)1}.
    std::array<cplx, 2> d2_a1a2{};
    // Pair A1A3 with spectator A2: D^{00}_{(A2)0}, D^{00}_{(A2)1}.
    std::array<cplx, 2> d2_a1a3{};
    // Pair A2A3 with spectator A1.
    std::array<cplx, 2> d2_a2a3{};
    cplx d000{}, d001{}, d010{};
    /// (N_{Am}^{AiAj})^2 indexed by the spectator m-1.
    std::array<double, 3> n_pair_sq{};
    /// 4 (N_{A3}^{A1A2})^2 + 4 (N_{A2}^{A1A3})^2
    double n_global_sq = 0.0;
    cplx i3{};
    double tau3 = 0.0;
    /// |D^{00}_{(Am)0}| + |D^{00}_{(Am)1}| indexed by the spectator m-1.
    std::array<double, 3> w_sums{};
    double i2_w = 0.0;
    /// Whether I3 vanished (degree-aware), i.e. w_sums are themselves invariants.
    bool i3_zero = false;
};

ThreeQubitReport three_qubit_report(const PureState& s, double tol = 1e-9);

struct NegativityRelation {
    double lhs = 0.0;  // (N_G^{A1})^2 from the spectrum of the partial transpose
    double rhs = 0.0;  // 4 (N_{A3}^{A1A2})^2 + 4 (N_{A2}^{A1A3})^2
};

/// Requires a normalised three-qubit state.
NegativityRelation n_global_sq_relation(const PureState& s);

/// D^{0000} + D^{0011} - D^{0010} - D^{0001}
cplx i4(const PureState& s);

/// (I3^{A1A2A3})_{(A4)i4}
cplx i3_conditional(const PureState& s, int i4bit);

struct TPInvariants {
    cplx t{};
    cplx p0{};
    cplx p1{};
};

/// Coefficients of the quartic that governs (I3)_{(A4)1} under a unitary on A4.
TPInvariants t_p_invariants(const PureState& s);

/// Everything built from the five three-qubit invariants of one triple.
struct TripleInvariants {
    int singled = 4;  // the qubit playing the role of A4
    cplx i3_0{}, i3_1{};
    cplx t{}, p0{}, p1{};
    cplx i48{};
    cplx j12{};
    cplx delta{};
    double n_sq = 0.0;  // (N_{Al}^{AiAjAk})^2
};

/// Moves `singled` to position 4 (other qubits keep their order) and evaluates.
TripleInvariants triple_invariants(const PureState& s, int singled = 4);

cplx i48(const PureState& s);
cplx j12(const PureState& s);
cplx delta24(const PureState& s);
double n_triple_sq(const PureState& s, int singled);

/// I^{ApAq}_{ArAs} = sum_{ir,is} |D^{00}_{(Ar)ir (As)is}| for the pair (p, q).
double pair_sum(const PureState& s, int p, int q);

/// (I2^{ApAqAr})_{As} = 3 I^{ApAq}_{ArAs} I^{ApAr}_{AqAs}
double i2_w_four(const PureState& s, int p, int q, int r);

/// The degree-(2,6) W-type invariant exactly as printed. The factor written
/// I^{A3A4}_{A1A3} does not fit the index pattern; it is read as the pair
/// A3A4 (the superscript), i.e. I^{A3A4}_{A1A2}.
double i26_literal(const PureState& s);

/// Average of i26_literal over all 24 relabellings of the qubits.
double i26_symmetrized(const PureState& s);

struct FourQubitReport {
    int triple = 4;
    cplx i4{};
    double tau4 = 0.0;
    std::array<cplx, 2> i3_cond{};
    cplx t_inv{};
    std::array<cplx, 2> p_inv{};
    cplx i48{};
    cplx j12{};
    cplx delta24{};
    /// (N_{Al}^{AiAjAk})^2 for l = 1..4 (index l-1).
    std::array<double, 4> n_triple_sq{};
    double n44_sq = 0.0;
    double n48 = 0.0;
    /// Pairs (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
    std::array<double, 6> pair_sums{};
    double i26 = 0.0;
    double i26_sym = 0.0;
    double dres = 0.0;
    double tau48 = 0.0;
    /// All four singled-qubit variants (index l-1).
    std::array<TripleInvariants, 4> triples{};
    /// max over l of |I48(l) - I48(triple)| and the same for Delta.
    double cross_triple_i48_dev = 0.0;
    double cross_triple_delta_dev = 0.0;
};

inline constexpr std::array<std::array<int, 2>, 6> kPairs{{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

FourQubitReport aggregate_invariants(const PureState& s, int triple = 4);

}  // namespace negfont
