#include "negfont/ptrans.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace negfont {

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMatrix::trace() const {
    cplx acc{};
    for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
    return acc;
}

double CMatrix::frobenius_norm() const {
    double acc = 0.0;
    for (const cplx& v : data_) acc += std::norm(v);
    return std::sqrt(acc);
}

double CMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

double max_abs(const CMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) worst = std::max(worst, std::abs(m(i, j)));
    return worst;
}

DensityMatrix density_from_pure(const PureState& s) {
    DensityMatrix rho{s.n_qubits(), CMatrix(s.dim())};
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) rho.entries(i, j) = s[i] * std::conj(s[j]);
    return rho;
}

int flip_count(std::size_t i, std::size_t j) { return std::popcount(i ^ j); }

namespace {

void check_qubit(int n, int p) {
    if (p < 1 || p > n) {
        throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(p) + " not in 1.." + std::to_string(n));
    }
}

template <class Select>
CMatrix selective_transpose(const DensityMatrix& rho, int p, Select select) {
    const std::size_t mask = qubit_mask(rho.n_qubits, p);
    const std::size_t dim = rho.entries.dim();
    CMatrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const bool p_differs = ((i ^ j) & mask) != 0;
            if (p_differs && select(flip_count(i, j))) {
                out(i, j) = rho.entries(i ^ mask, j ^ mask);
            } else {
                out(i, j) = rho.entries(i, j);
            }
        }
    }
    return out;
}

}  // namespace

TransposedMatrix global_pt(const DensityMatrix& rho, int p) {
    check_qubit(rho.n_qubits, p);
    return {rho.n_qubits, selective_transpose(rho, p, [](int) { return true; }), Transpose::global(), p};
}

TransposedMatrix kway_pt(const DensityMatrix& rho, int p, int k) {
    check_qubit(rho.n_qubits, p);
    if (k < 2 || k > rho.n_qubits) {
        throw Error(ErrorCode::BadK, "K=" + std::to_string(k) + " outside [2, " + std::to_string(rho.n_qubits) + "]");
    }
    CMatrix m = (k == 2) ? selective_transpose(rho, p, [](int f) { return f == 1 || f == 2; })
                         : selective_transpose(rho, p, [k](int f) { return f == k; });
    return {rho.n_qubits, std::move(m), Transpose::kway(k), p};
}

double decomposition_residual(const PureState& s, int p) {
    const DensityMatrix rho = density_from_pure(s);
    const int n = s.n_qubits();
    CMatrix acc = global_pt(rho, p).entries;
    for (int k = 2; k <= n; ++k) acc = acc - kway_pt(rho, p, k).entries;
    const double w = static_cast<double>(n - 2);
    for (std::size_t i = 0; i < acc.dim(); ++i)
        for (std::size_t j = 0; j < acc.dim(); ++j) acc(i, j) += w * rho.entries(i, j);
    return max_abs(acc);
}

EigenSystem hermitian_eigensystem(const CMatrix& input) {
    const std::size_t n = input.dim();
    const double fro = input.frobenius_norm();
    if (input.hermiticity_defect() > 1e-10 * std::max(1.0, fro)) {
        throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian");
    }
    CMatrix a = input;
    // Symmetrise exactly so the rotations below see a Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    CMatrix q = CMatrix::identity(n);
    const double threshold = 1e-14 * std::max(fro, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off = std::max(off, std::abs(a(i, j)));
        if (off < threshold) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const cplx g = a(p, r);
                const double mag = std::abs(g);
                if (mag < 1e-300) continue;
                // Remove the phase of a_pr, then a real Jacobi rotation.
                const cplx phase = g / mag;
                const double app = a(p, p).real();
                const double arr = a(r, r).real();
                const double theta = (arr - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // V restricted to (p, r): [[c, s], [-s conj(phase), c conj(phase)]]
                const cplx vpp = c, vpr = s;
                const cplx vrp = -s * std::conj(phase), vrr = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {  // A <- A V
                    const cplx akp = a(k, p), akr = a(k, r);
                    a(k, p) = akp * vpp + akr * vrp;
                    a(k, r) = akp * vpr + akr * vrr;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- V^dagger A
                    const cplx apk = a(p, k), ark = a(r, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vrp) * ark;
                    a(r, k) = std::conj(vpr) * apk + std::conj(vrr) * ark;
                }
                a(p, r) = 0.0;
                a(r, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(r, r) = a(r, r).real();
                for (std::size_t k = 0; k < n; ++k) {  // Q <- Q V
                    const cplx qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = qkp * vpp + qkr * vrp;
                    q(k, r) = qkp * vpr + qkr * vrr;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenSystem out{std::vector<double>(n), CMatrix(n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = q(k, order[j]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) { return hermitian_eigensystem(m).values; }

NegativityReport negativity_report(const PureState& s, int p, Transpose kind) {
    const DensityMatrix rho = density_from_pure(s);
    const TransposedMatrix t = kind.kind == Transpose::Kind::Global ? global_pt(rho, p) : kway_pt(rho, p, kind.k);
    NegativityReport r;
    double trace_norm = 0.0;
    for (double lam : hermitian_eigenvalues(t)) {
        trace_norm += std::abs(lam);
        if (lam < 0.0) r.negative_eigenvalues.push_back(lam);
    }
    r.value = trace_norm - 1.0;
    return r;
}

std::array<cplx, 4> reduced_single_qubit(const PureState& s, int qubit) {
    check_qubit(s.n_qubits(), qubit);
    const std::size_t mask = qubit_mask(s.n_qubits(), qubit);
    std::array<cplx, 4> r{};
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (i & mask) continue;
        const cplx a0 = s[i], a1 = s[i | mask];
        r[0] += a0 * std::conj(a0);
        r[1] += a0 * std::conj(a1);
        r[2] += a1 * std::conj(a0);
        r[3] += a1 * std::conj(a1);
    }
    return r;
}

}  // namespace negfont
