#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negfont/catalog.hpp"
#include "negfont/state.hpp"

namespace negfont {

enum class MajorClass { I, II, III, IV, V, VI, VII, Unentangled, Unresolved };

std::string to_string(MajorClass c);

struct ClassSignature {
    bool i48_zero = false;
    bool dres_zero = false;
    bool delta_zero = false;
    int n2 = 0;
    int n3 = 0;
    int n4 = 0;
};

/// Zero tests for the classification triple.
///
/// I48 uses the absolute degree-8 test. D_{A4} = (N_{A4})^2 - 2|I48| and
/// Delta = I48^3 - 27 J^2 are differences of like-sized terms, so they are
/// compared against the size of those terms: |D| <= tol (N_{A4})^2 and
/// |Delta| <= tol (|I48|^3 + 27 |J|^2). When the terms themselves pass their
/// own absolute degree test the difference counts as zero.
ClassSignature invariant_signature(const PureState& s, double tol = 1e-9);

/// Decision table. Row III accepts both D readings; when D != 0 the three-way
/// font count separates I (n3 >= 1) from III (n3 = 0). V and VI are separated by n2.
/// Returns the class and, for row III, which reading matched.
MajorClass decide(const ClassSignature& sig, std::string* variant = nullptr);

struct MinimizeStep {
    int restart = -1;  // -1 is the input representation
    int count = 0;
    double l1 = 0.0;
};

struct MinimizeResult {
    PureState state;
    std::vector<MinimizeStep> trace;  // accepted improvements only, objective non-increasing
    std::array<double, 12> angles{};  // Euler angles of the winning local unitaries
    bool improved = false;
};

struct MinimizeOptions {
    int restarts = 32;
    int iters = 400;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    int qubit = 1;  // transposed qubit whose fonts are counted
};

/// Best-effort search for the local-unitary representative with the fewest
/// non-vanishing fonts (tie-break: sum of moduli). Each restart runs a
/// Nelder-Mead descent on the sum of font moduli over 12 Euler angles, then a
/// damped Gauss-Newton polish that drives the near-zero fonts to zero.
MinimizeResult font_minimize(const PureState& s, const MinimizeOptions& opts = {});

struct ClassReport {
    MajorClass major_class = MajorClass::Unresolved;
    ClassSignature signature;
    bool minimized_state_used = false;
    std::string variant;
    std::string notes;
    double tolerance = 1e-9;
    std::optional<MinimizeResult> minimization;
};

struct ClassifyOptions {
    double tol = 1e-9;
    bool use_font_min = false;
    int restarts = 32;
    int iters = 400;
    std::uint64_t seed = 0;
};

/// Normalises internally; throws WrongArity unless n = 4.
ClassReport classify(const PureState& s, const ClassifyOptions& opts = {});

/// Closed-form expectations for the parametric families. Keys: i48, n_triple_sq,
/// dres, delta, and where known t, i3_0, i3_1, p0, p1.
std::map<std::string, cplx> family_expected(const std::string& family, const ParamMap& params);
const std::vector<std::string>& known_families();

}  // namespace negfont
