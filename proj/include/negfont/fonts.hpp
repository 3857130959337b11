#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

/// A K-way negativity font for transposed qubit `p`.
///
/// All masks are basis-index bit masks in the register's convention. The flip
/// set S1 contains p; the remaining qubits are spectators with fixed bits. The
/// row pattern fixes the bits of S1 \ {p} in the first row of the 2x2 font
///
///     [ a(p=0, s, t)   a(p=0, s~, t) ]
///     [ a(p=1, s, t)   a(p=1, s~, t) ]       (columns swapped: see font_det)
///
/// where s~ is the complement of s on S1 \ {p}. Flipping s negates the
/// determinant, so the canonical representative has the lowest-numbered qubit
/// of S1 \ {p} carrying bit 0.
struct FontSpec {
    int n = 0;
    int p = 1;
    std::size_t flip_mask = 0;       // S1, includes p
    std::size_t spectator_bits = 0;  // bit values on S2 (subset of ~flip_mask)
    std::size_t row_pattern = 0;     // bit values on S1 \ {p}

    int order() const;  // K = |S1|
    std::vector<int> flip_set() const;
    std::vector<int> spectators() const;
    bool canonical() const;
    /// Conventional symbol, e.g. "D^{000}_{(A4)1}" or "D^{0011}".
    std::string label() const;

    friend bool operator==(const FontSpec&, const FontSpec&) = default;
};

struct FontDet {
    FontSpec spec;
    cplx value;
};

/// Canonical fonts ordered by K, then flip set, then spectator bits, then row pattern.
/// For n = 4 this yields 12 two-way, 12 three-way and 4 four-way fonts per qubit.
std::vector<FontSpec> enumerate_fonts(int n, int p);

/// a(p=0,s,t) a(p=1,s~,t) - a(p=0,s~,t) a(p=1,s,t). Accepts non-canonical row
/// patterns (the sign flips accordingly). Throws SpecMismatch.
cplx font_det(const PureState& s, const FontSpec& spec);

std::vector<FontDet> all_font_dets(const PureState& s, int p);

/// Number of canonical order-K fonts with |det| > tol * ||amps||^2.
int count_nonzero_fonts(const PureState& s, int p, int k, double tol = 1e-9);

// Named four-qubit determinants, transposed qubit A1.

/// D^{00}_{(A3)i3 (A4)i4}: two-way font of the pair A1A2.
cplx d2(const PureState& s, int i3, int i4);

enum class Triple {
    A1A2A3,  // spectator A4
    A1A2A4,  // spectator A3
};

/// The printed three-way determinant D^{0 i2 0}_{(A4)i4} (triple A1A2A3) or
/// D^{0 i2 0}_{(A3)i3} (triple A1A2A4). i2 = 1 gives the non-canonical pattern,
/// so d3(.., 1, t) = -D^{001}_{(.)t}.
cplx d3(const PureState& s, Triple triple, int i2, int spectator_bit);

/// Canonical D^{00s}_{(.)t}: the sum D^{000} + D^{001} used throughout the
/// three-qubit invariants is d3c(.., 0, t) + d3c(.., 1, t).
cplx d3c(const PureState& s, Triple triple, int s_last, int spectator_bit);

/// D^{00 i3 i4}: the four independent four-way determinants.
cplx d4(const PureState& s, int i3, int i4);

}  // namespace negfont
