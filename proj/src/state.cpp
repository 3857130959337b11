#include "negfont/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace negfont {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::QubitOutOfRange: return "QubitOutOfRange";
        case ErrorCode::NonUnitary: return "NonUnitary";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::UnknownState: return "UnknownState";
        case ErrorCode::MissingParameter: return "MissingParameter";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::WrongArity: return "WrongArity";
        case ErrorCode::UnknownFamily: return "UnknownFamily";
        case ErrorCode::BadGrid: return "BadGrid";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnsupportedArity: return "UnsupportedArity";
    }
    return "Unknown";
}

std::size_t basis_index(std::span<const int> bits) {
    std::size_t index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw Error(ErrorCode::DimensionMismatch, "basis bit must be 0 or 1");
        index = (index << 1) | static_cast<std::size_t>(b);
    }
    return index;
}

std::vector<int> basis_bits(std::size_t index, int n) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) bits[static_cast<std::size_t>(q - 1)] = qubit_bit(index, n, q);
    return bits;
}

PureState::PureState(int n_qubits, std::vector<cplx> amps) : n_(n_qubits), amps_(std::move(amps)) {
    if (n_ < kMinQubits || n_ > kMaxQubits) {
        throw Error(ErrorCode::DimensionMismatch,
                    "qubit count " + std::to_string(n_) + " outside [2, 6]");
    }
    if (amps_.size() != (std::size_t{1} << n_)) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(1U << n_) +
                                                      " amplitudes, got " + std::to_string(amps_.size()));
    }
    bool any_nonzero = false;
    for (const cplx& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is NaN or infinite");
        }
        if (std::abs(a) > 1e-300) any_nonzero = true;
    }
    if (!any_nonzero) throw Error(ErrorCode::ZeroVector, "all amplitudes vanish");
}

cplx PureState::amp(std::span<const int> bits) const {
    if (static_cast<int>(bits.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "bit string length");
    return amps_[basis_index(bits)];
}

double PureState::norm_squared() const noexcept {
    double acc = 0.0;
    for (const cplx& a : amps_) acc += std::norm(a);
    return acc;
}

double PureState::norm() const noexcept { return std::sqrt(norm_squared()); }

PureState make_state(int n, std::vector<cplx> amps) { return PureState(n, std::move(amps)); }

PureState normalize(const PureState& s) {
    if (s.normalized_) return s;
    const double nrm = s.norm();
    if (!(nrm > 1e-300)) throw Error(ErrorCode::ZeroVector, "cannot normalise a zero vector");
    std::vector<cplx> out(s.amps_.begin(), s.amps_.end());
    for (cplx& a : out) a /= nrm;
    PureState r(s.n_, std::move(out));
    r.normalized_ = true;
    return r;
}

PureState scale(const PureState& s, cplx factor) {
    std::vector<cplx> out(s.amps().begin(), s.amps().end());
    for (cplx& a : out) a *= factor;
    return PureState(s.n_qubits(), std::move(out));
}

double LocalUnitary::unitarity_defect() const {
    // (U^dagger U)_{ij} = sum_k conj(U_ki) U_kj
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            cplx acc = std::conj(m[i]) * m[j] + std::conj(m[2 + i]) * m[2 + j];
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

LocalUnitary make_local_unitary(cplx u00, cplx u01, cplx u10, cplx u11, int qubit) {
    LocalUnitary u{{u00, u01, u10, u11}, qubit};
    if (u.unitarity_defect() > 1e-10) throw Error(ErrorCode::NonUnitary, "matrix is not unitary");
    return u;
}

LocalUnitary unitary_from_x(cplx x, int qubit) {
    const double f = 1.0 / std::sqrt(1.0 + std::norm(x));
    return LocalUnitary{{f, -std::conj(x) * f, x * f, f}, qubit};
}

LocalUnitary euler_unitary(double alpha, double beta, double gamma, int qubit) {
    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);
    const cplx ep = std::polar(1.0, -0.5 * (alpha + gamma));
    const cplx em = std::polar(1.0, -0.5 * (alpha - gamma));
    // Rz(a) Ry(b) Rz(g), Rz(t) = diag(e^{-it/2}, e^{it/2})
    return LocalUnitary{{ep * c, -em * s, std::conj(em) * s, std::conj(ep) * c}, qubit};
}

PureState apply_single_qubit(const PureState& s, const std::array<cplx, 4>& m, int qubit) {
    const int n = s.n_qubits();
    if (qubit < 1 || qubit > n) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(qubit) + " not in 1.." + std::to_string(n));
    }
    const std::size_t mask = qubit_mask(n, qubit);
    std::vector<cplx> out(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const cplx a0 = s[i];
        const cplx a1 = s[i | mask];
        out[i] = m[0] * a0 + m[1] * a1;
        out[i | mask] = m[2] * a0 + m[3] * a1;
    }
    return PureState(n, std::move(out));
}

PureState apply_local_unitary(const PureState& s, const LocalUnitary& u) {
    if (u.qubit < 1 || u.qubit > s.n_qubits()) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(u.qubit));
    }
    if (u.unitarity_defect() > 1e-10) throw Error(ErrorCode::NonUnitary, "matrix is not unitary");
    return apply_single_qubit(s, u.m, u.qubit);
}

static void check_permutation(std::span<const int> perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw Error(ErrorCode::InvalidPermutation, "wrong length");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
            throw Error(ErrorCode::InvalidPermutation, "not a bijection on 1..n");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    check_permutation(perm, n);
    std::vector<int> inv(perm.size());
    for (int k = 1; k <= n; ++k) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)] - 1)] = k;
    return inv;
}

PureState permute_qubits(const PureState& s, std::span<const int> perm) {
    const int n = s.n_qubits();
    check_permutation(perm, n);
    std::vector<cplx> out(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        std::size_t src = 0;
        for (int k = 1; k <= n; ++k) {
            if (qubit_bit(j, n, k)) src |= qubit_mask(n, perm[static_cast<std::size_t>(k - 1)]);
        }
        out[j] = s[src];
    }
    PureState r(n, std::move(out));
    r.normalized_ = s.normalized_;
    return r;
}

cplx inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "inner product of unequal registers");
    cplx acc{};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finaliser over a mix of both words
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

PureState random_state(int n, std::uint64_t seed) {
    if (n < kMinQubits || n > kMaxQubits) throw Error(ErrorCode::DimensionMismatch, "qubit count outside [2, 6]");
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    for (cplx& a : amps) {
        const double re = g(rng);
        a = cplx(re, g(rng));
    }
    return normalize(PureState(n, std::move(amps)));
}

LocalUnitary random_special_unitary(std::uint64_t seed, int qubit) {
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::normal_distribution<double> g(0.0, 1.0);
    double v[4];
    for (double& x : v) x = g(rng);
    cplx alpha(v[0], v[1]);
    cplx beta(v[2], v[3]);
    const double nrm = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= nrm;
    beta /= nrm;
    return LocalUnitary{{alpha, -std::conj(beta), beta, std::conj(alpha)}, qubit};
}

}  // namespace negfont
