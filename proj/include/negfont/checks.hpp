#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "negfont/catalog.hpp"
#include "negfont/state.hpp"

namespace negfont {

struct SuiteResult {
    std::string name;
    int trials = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    std::string worst;  // which quantity produced max_residual
    bool passed() const { return max_residual <= threshold; }
};

/// Random SU(2) on every qubit; relative drift of I3 (n=3), I4, I48, J, Delta (n=4).
SuiteResult check_invariance(int trials, std::uint64_t seed);
/// Residual of rho^T = sum_K rho_K^T - (N-2) rho for random n in {3,4} and random p.
SuiteResult check_decomposition(int trials, std::uint64_t seed);
/// (N_G^{A1})^2 against the pair-font sum on random three-qubit states.
SuiteResult check_negativity_relation(int trials, std::uint64_t seed);
/// I48 on random triple(x)single and pair(x)pair products, qubits shuffled.
SuiteResult check_vanishing(int trials, std::uint64_t seed);
/// x(c psi) = c^deg x(psi) for I3, I4, T, P, I48, J.
SuiteResult check_homogeneity(int trials, std::uint64_t seed);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

/// |a> (x) |b>, qubits of a first.
PureState tensor(const PureState& a, const PureState& b);

// Family sweeps against closed forms.

inline const std::vector<std::string> kSweepQuantities{"i48", "n_triple_sq", "dres", "delta"};

struct SweepRow {
    ParamMap params;
    std::map<std::string, cplx> numeric;
    std::map<std::string, cplx> expected;
    std::map<std::string, double> abs_dev;
    std::map<std::string, double> rel_dev;
    double max_rel_dev = 0.0;
};

using Grid = std::vector<std::pair<std::string, std::vector<cplx>>>;

/// Parameter names of a family in catalog order.
std::vector<std::string> family_parameters(const std::string& family);

/// Deterministic grid with at least `min_points` points, complex values included.
Grid default_grid(const std::string& family, int min_points = 81);

/// Raw (unnormalised) family states; deviations are relative to max(|expected|, ||psi||^deg).
std::vector<SweepRow> sweep_family(const std::string& family, const Grid& grid);

void write_sweep_csv(std::ostream& out, const std::string& family, const std::vector<SweepRow>& rows);

}  // namespace negfont
