#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "negfont/errors.hpp"

namespace negfont {

using cplx = std::complex<double>;

inline constexpr int kMinQubits = 2;
inline constexpr int kMaxQubits = 6;

// Basis convention: amplitude a_{i1 i2 ... iN} is stored at
// sum_k i_k * 2^(N-k), i.e. qubit 1 is the most significant bit.

/// Bit mask selecting `qubit` (1-based) inside a basis index of an n-qubit register.
constexpr std::size_t qubit_mask(int n, int qubit) { return std::size_t{1} << (n - qubit); }

constexpr int qubit_bit(std::size_t index, int n, int qubit) {
    return static_cast<int>((index >> (n - qubit)) & 1U);
}

std::size_t basis_index(std::span<const int> bits);
std::vector<int> basis_bits(std::size_t index, int n);

class PureState {
public:
    /// Validating constructor; see make_state.
    PureState(int n_qubits, std::vector<cplx> amps);

    int n_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    bool normalized() const noexcept { return normalized_; }

    std::span<const cplx> amps() const noexcept { return amps_; }
    cplx amp(std::size_t index) const { return amps_.at(index); }
    cplx operator[](std::size_t index) const noexcept { return amps_[index]; }
    /// Amplitude addressed by its bit string (i1, ..., iN).
    cplx amp(std::span<const int> bits) const;

    double norm_squared() const noexcept;
    double norm() const noexcept;

private:
    friend PureState normalize(const PureState& s);
    friend PureState permute_qubits(const PureState& s, std::span<const int> perm);
    int n_;
    std::vector<cplx> amps_;
    bool normalized_ = false;
};

PureState make_state(int n, std::vector<cplx> amps);
PureState normalize(const PureState& s);
/// Multiplies every amplitude by `factor`; the result is not flagged normalized.
PureState scale(const PureState& s, cplx factor);

/// 2x2 matrix [[u00, u01], [u10, u11]] acting on a single qubit.
struct LocalUnitary {
    std::array<cplx, 4> m{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};
    int qubit = 1;

    cplx u00() const { return m[0]; }
    cplx u01() const { return m[1]; }
    cplx u10() const { return m[2]; }
    cplx u11() const { return m[3]; }
    cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
    /// max |(U^dagger U - 1)_{ij}|
    double unitarity_defect() const;
};

LocalUnitary make_local_unitary(cplx u00, cplx u01, cplx u10, cplx u11, int qubit);

/// U = (1/sqrt(1+|x|^2)) [[1, -x*], [x, 1]]; unit determinant for every x.
LocalUnitary unitary_from_x(cplx x, int qubit);

/// ZYZ Euler form Rz(alpha) Ry(beta) Rz(gamma); determinant one.
LocalUnitary euler_unitary(double alpha, double beta, double gamma, int qubit);

/// Throws QubitOutOfRange or NonUnitary (defect > 1e-10).
PureState apply_local_unitary(const PureState& s, const LocalUnitary& u);

/// Applies an arbitrary 2x2 matrix without the unitarity check (used for SLOCC
/// style experiments and by the minimiser's inner loop).
PureState apply_single_qubit(const PureState& s, const std::array<cplx, 4>& m, int qubit);

/// `perm` is a 1-based bijection on 1..n. Output amplitude at bits (j_1..j_n)
/// equals the input amplitude whose qubit perm[k-1] carries bit j_k; in other
/// words output qubit k is input qubit perm[k-1].
PureState permute_qubits(const PureState& s, std::span<const int> perm);
std::vector<int> inverse_permutation(std::span<const int> perm);

/// Complex inner product <a|b>.
cplx inner(const PureState& a, const PureState& b);

/// Deterministic 64-bit seed for stream (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Independent standard complex Gaussians, then normalised.
PureState random_state(int n, std::uint64_t seed);

/// Haar-distributed SU(2): [[alpha, -beta*], [beta, alpha*]] with
/// |alpha|^2 + |beta|^2 = 1.
LocalUnitary random_special_unitary(std::uint64_t seed, int qubit);

}  // namespace negfont
