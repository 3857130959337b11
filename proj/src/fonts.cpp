#include "negfont/fonts.hpp"

#include <bit>
#include <cmath>

namespace negfont {

namespace {

// Qubits of `mask` in increasing qubit number (most significant bit first).
std::vector<int> qubits_in(std::size_t mask, int n) {
    std::vector<int> out;
    for (int q = 1; q <= n; ++q)
        if (mask & qubit_mask(n, q)) out.push_back(q);
    return out;
}

// Spreads the low bits of `value` over the positions set in `mask`, lowest
// qubit number (= highest bit) taking the most significant bit of value.
std::size_t deposit(std::size_t value, const std::vector<int>& qubits, int n) {
    std::size_t out = 0;
    const std::size_t m = qubits.size();
    for (std::size_t k = 0; k < m; ++k) {
        if ((value >> (m - 1 - k)) & 1U) out |= qubit_mask(n, qubits[k]);
    }
    return out;
}

void require_four(const PureState& s) {
    if (s.n_qubits() != 4) throw Error(ErrorCode::WrongArity, "named determinants need a four-qubit state");
}

}  // namespace

int FontSpec::order() const { return std::popcount(flip_mask); }

std::vector<int> FontSpec::flip_set() const { return qubits_in(flip_mask, n); }

std::vector<int> FontSpec::spectators() const {
    const std::size_t all = (std::size_t{1} << n) - 1;
    return qubits_in(all & ~flip_mask, n);
}

bool FontSpec::canonical() const {
    const std::size_t rest = flip_mask & ~qubit_mask(n, p);
    if (rest == 0) return false;
    const int first = qubits_in(rest, n).front();
    return (row_pattern & qubit_mask(n, first)) == 0;
}

std::string FontSpec::label() const {
    std::string sup;
    for (int q : flip_set()) sup += (q == p) ? '0' : static_cast<char>('0' + qubit_bit(row_pattern, n, q));
    std::string out = "D^{" + sup + "}";
    const auto spect = spectators();
    if (!spect.empty()) {
        out += "_{";
        for (int q : spect) {
            out += "(A" + std::to_string(q) + ")" + std::to_string(qubit_bit(spectator_bits, n, q));
        }
        out += "}";
    }
    return out;
}

std::vector<FontSpec> enumerate_fonts(int n, int p) {
    if (n < kMinQubits || n > kMaxQubits) throw Error(ErrorCode::DimensionMismatch, "qubit count outside [2, 6]");
    if (p < 1 || p > n) throw Error(ErrorCode::QubitOutOfRange, "qubit " + std::to_string(p));
    const std::size_t pmask = qubit_mask(n, p);
    const std::size_t all = (std::size_t{1} << n) - 1;
    std::vector<FontSpec> out;
    for (int k = 2; k <= n; ++k) {
        // Flip sets in increasing numeric order of their mask taken from the
        // most-significant side, i.e. lexicographic in qubit numbers.
        std::vector<std::size_t> sets;
        for (std::size_t m = all; m > 0; --m) {
            if ((m & pmask) && std::popcount(m) == k) sets.push_back(m);
        }
        for (std::size_t flip : sets) {
            const auto spect = qubits_in(all & ~flip, n);
            const auto rest = qubits_in(flip & ~pmask, n);
            for (std::size_t t = 0; t < (std::size_t{1} << spect.size()); ++t) {
                // First qubit of rest is pinned to 0.
                for (std::size_t r = 0; r < (std::size_t{1} << (rest.size() - 1)); ++r) {
                    out.push_back({n, p, flip, deposit(t, spect, n), deposit(r, rest, n)});
                }
            }
        }
    }
    return out;
}

cplx font_det(const PureState& s, const FontSpec& spec) {
    const int n = s.n_qubits();
    if (spec.n != n || spec.p < 1 || spec.p > n) throw Error(ErrorCode::SpecMismatch, "font spec does not fit state");
    const std::size_t pmask = qubit_mask(n, spec.p);
    const std::size_t rest = spec.flip_mask & ~pmask;
    if (!(spec.flip_mask & pmask) || rest == 0 || (spec.spectator_bits & spec.flip_mask) ||
        (spec.row_pattern & ~rest)) {
        throw Error(ErrorCode::SpecMismatch, "inconsistent font masks");
    }
    const std::size_t base = spec.spectator_bits | spec.row_pattern;
    const std::size_t bar = spec.spectator_bits | (rest & ~spec.row_pattern);
    return s[base] * s[bar | pmask] - s[bar] * s[base | pmask];
}

std::vector<FontDet> all_font_dets(const PureState& s, int p) {
    std::vector<FontDet> out;
    for (const FontSpec& f : enumerate_fonts(s.n_qubits(), p)) out.push_back({f, font_det(s, f)});
    return out;
}

int count_nonzero_fonts(const PureState& s, int p, int k, double tol) {
    const double threshold = tol * s.norm_squared();
    int count = 0;
    for (const FontSpec& f : enumerate_fonts(s.n_qubits(), p)) {
        if (f.order() == k && std::abs(font_det(s, f)) > threshold) ++count;
    }
    return count;
}

// Indices below are written as 4-bit literals a_{i1 i2 i3 i4}.

cplx d2(const PureState& s, int i3, int i4) {
    require_four(s);
    const std::size_t t = static_cast<std::size_t>(i3 << 1 | i4);
    return s[0b0000 | t] * s[0b1100 | t] - s[0b0100 | t] * s[0b1000 | t];
}

cplx d3(const PureState& s, Triple triple, int i2, int spectator_bit) {
    require_four(s);
    const std::size_t b2 = static_cast<std::size_t>(i2) << 2, n2 = static_cast<std::size_t>(1 - i2) << 2;
    if (triple == Triple::A1A2A3) {
        const std::size_t t = static_cast<std::size_t>(spectator_bit);
        // [[a_{0 i2 0 t}, a_{0 ~i2 1 t}], [a_{1 i2 0 t}, a_{1 ~i2 1 t}]]
        return s[b2 | t] * s[0b1010 | n2 | t] - s[0b0010 | n2 | t] * s[0b1000 | b2 | t];
    }
    const std::size_t t = static_cast<std::size_t>(spectator_bit) << 1;
    // [[a_{0 i2 t 0}, a_{0 ~i2 t 1}], [a_{1 i2 t 0}, a_{1 ~i2 t 1}]]
    return s[b2 | t] * s[0b1001 | n2 | t] - s[0b0001 | n2 | t] * s[0b1000 | b2 | t];
}

cplx d3c(const PureState& s, Triple triple, int s_last, int spectator_bit) {
    require_four(s);
    FontSpec f;
    f.n = 4;
    f.p = 1;
    if (triple == Triple::A1A2A3) {
        f.flip_mask = 0b1110;
        f.spectator_bits = static_cast<std::size_t>(spectator_bit);
        f.row_pattern = static_cast<std::size_t>(s_last) << 1;
    } else {
        f.flip_mask = 0b1101;
        f.spectator_bits = static_cast<std::size_t>(spectator_bit) << 1;
        f.row_pattern = static_cast<std::size_t>(s_last);
    }
    return font_det(s, f);
}

cplx d4(const PureState& s, int i3, int i4) {
    require_four(s);
    const FontSpec f{4, 1, 0b1111, 0, static_cast<std::size_t>(i3 << 1 | i4)};
    return font_det(s, f);
}

}  // namespace negfont
