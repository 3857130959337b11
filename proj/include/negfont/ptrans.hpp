#pragma once

#include <cstddef>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

/// Dense row-major complex square matrix. Dimensions here never exceed 64.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    std::size_t dim() const noexcept { return dim_; }
    cplx& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

    static CMatrix identity(std::size_t dim);
    CMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// max_{ij} |M_ij - M*_ji|
    double hermiticity_defect() const;

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& m);

struct DensityMatrix {
    int n_qubits = 0;
    CMatrix entries;
};

/// Which transpose produced a TransposedMatrix. `k` is only meaningful for KWay.
struct Transpose {
    enum class Kind { Global, KWay };
    Kind kind = Kind::Global;
    int k = 0;

    static Transpose global() { return {Kind::Global, 0}; }
    static Transpose kway(int k) { return {Kind::KWay, k}; }
};

struct TransposedMatrix {
    int n_qubits = 0;
    CMatrix entries;
    Transpose kind;
    int qubit = 1;
};

/// (i|rho|j) = a_i conj(a_j)
DensityMatrix density_from_pure(const PureState& s);

/// Number of qubit positions in which basis labels i and j differ.
int flip_count(std::size_t i, std::size_t j);

/// Swaps the local index of qubit p between row and column labels for every element.
TransposedMatrix global_pt(const DensityMatrix& rho, int p);

/// Selective transpose: an element is exchanged with its partner only if qubit p
/// differs between row and column and the flip count equals K (K > 2) or lies
/// in {1, 2} (K = 2). Everything else is copied.
TransposedMatrix kway_pt(const DensityMatrix& rho, int p, int k);

/// max |rho_G^{T_p} - sum_{K=2}^{n} rho_K^{T_p} + (n-2) rho|
double decomposition_residual(const PureState& s, int p);

struct EigenSystem {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // column j is the eigenvector of values[j]
};

/// Cyclic complex Jacobi. Throws NotHermitian when the input deviates by more than 1e-10.
EigenSystem hermitian_eigensystem(const CMatrix& m);
std::vector<double> hermitian_eigenvalues(const CMatrix& m);
inline std::vector<double> hermitian_eigenvalues(const DensityMatrix& m) { return hermitian_eigenvalues(m.entries); }
inline std::vector<double> hermitian_eigenvalues(const TransposedMatrix& m) { return hermitian_eigenvalues(m.entries); }

struct NegativityReport {
    double value = 0.0;                     // sum |lambda| - 1
    std::vector<double> negative_eigenvalues;
};

NegativityReport negativity_report(const PureState& s, int p, Transpose kind);
inline double negativity(const PureState& s, int p, Transpose kind) { return negativity_report(s, p, kind).value; }

/// 2x2 reduced density matrix of a single qubit.
std::array<cplx, 4> reduced_single_qubit(const PureState& s, int qubit);

}  // namespace negfont
