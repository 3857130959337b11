#include "negfont/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/ptrans.hpp"

namespace negfont {

std::string to_string(MajorClass c) {
    switch (c) {
        case MajorClass::I: return "I";
        case MajorClass::II: return "II";
        case MajorClass::III: return "III";
        case MajorClass::IV: return "IV";
        case MajorClass::V: return "V";
        case MajorClass::VI: return "VI";
        case MajorClass::VII: return "VII";
        case MajorClass::Unentangled: return "unentangled";
        case MajorClass::Unresolved: return "unresolved";
    }
    return "unresolved";
}

ClassSignature invariant_signature(const PureState& s, double tol) {
    const double nrm = s.norm();
    const TripleInvariants t = triple_invariants(s, 4);
    ClassSignature sig;
    sig.i48_zero = is_zero(t.i48, degree::i48, nrm, tol);

    const double dres = t.n_sq - 2.0 * std::abs(t.i48);
    sig.dres_zero = is_zero(t.n_sq, degree::n_triple_sq, nrm, tol) || std::abs(dres) <= tol * t.n_sq;

    const double delta_terms = std::pow(std::abs(t.i48), 3) + 27.0 * std::norm(t.j12);
    sig.delta_zero = (sig.i48_zero && is_zero(t.j12, degree::j12, nrm, tol)) ||
                     std::abs(t.delta) <= tol * delta_terms;

    sig.n2 = count_nonzero_fonts(s, 1, 2, tol);
    sig.n3 = count_nonzero_fonts(s, 1, 3, tol);
    sig.n4 = count_nonzero_fonts(s, 1, 4, tol);
    return sig;
}

MajorClass decide(const ClassSignature& sig, std::string* variant) {
    auto note = [variant](const char* v) {
        if (variant) *variant = v;
    };
    note("");
    const bool i48 = !sig.i48_zero, d = !sig.dres_zero, delta = !sig.delta_zero;
    if (i48) {
        if (delta) {
            if (!d) {
                note("III: D_A4 = 0");
                return MajorClass::III;
            }
            if (sig.n3 == 0) {
                note("III: D_A4 != 0, no three-way fonts");
                return MajorClass::III;
            }
            return MajorClass::I;
        }
        return d ? MajorClass::II : MajorClass::IV;
    }
    if (delta) return MajorClass::Unresolved;  // J != 0 while I48 = 0 matches no row
    if (d) return sig.n2 >= 1 ? MajorClass::V : MajorClass::VI;
    return MajorClass::VII;
}

namespace {

using Angles = std::array<double, 12>;

PureState rotate(const PureState& s, const Angles& x) {
    PureState out = s;
    for (int q = 1; q <= 4; ++q) {
        const auto k = static_cast<std::size_t>(3 * (q - 1));
        out = apply_single_qubit(out, euler_unitary(x[k], x[k + 1], x[k + 2], q).m, q);
    }
    return out;
}

struct Objective {
    int count = 0;
    double l1 = 0.0;

    bool better_than(const Objective& o) const {
        if (count != o.count) return count < o.count;
        return l1 < o.l1 - 1e-15;
    }
};

Objective evaluate(const PureState& s, const std::vector<FontSpec>& fonts, double tol) {
    const double threshold = tol * s.norm_squared();
    Objective o;
    for (const FontSpec& f : fonts) {
        const double m = std::abs(font_det(s, f));
        o.l1 += m;
        if (m > threshold) ++o.count;
    }
    return o;
}

double l1_of(const PureState& s, const Angles& x, const std::vector<FontSpec>& fonts) {
    const PureState r = rotate(s, x);
    double acc = 0.0;
    for (const FontSpec& f : fonts) acc += std::abs(font_det(r, f));
    return acc;
}

// Plain Nelder-Mead with the usual coefficients.
Angles nelder_mead(const std::function<double(const Angles&)>& f, const Angles& start, double step, int iters) {
    constexpr std::size_t n = 12;
    std::vector<Angles> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> val(n + 1);
    for (std::size_t i = 0; i <= n; ++i) val[i] = f(simplex[i]);
    std::vector<std::size_t> order(n + 1);

    auto point = [](const Angles& c, const Angles& w, double t) {
        Angles r{};
        for (std::size_t i = 0; i < n; ++i) r[i] = c[i] + t * (w[i] - c[i]);
        return r;
    };

    for (int it = 0; it < iters; ++it) {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&val](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (val[worst] - val[best] < 1e-15) break;

        Angles centroid{};
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
        }
        const Angles refl = point(centroid, simplex[worst], -1.0);
        const double fr = f(refl);
        if (fr < val[best]) {
            const Angles exp = point(centroid, simplex[worst], -2.0);
            const double fe = f(exp);
            if (fe < fr) {
                simplex[worst] = exp;
                val[worst] = fe;
            } else {
                simplex[worst] = refl;
                val[worst] = fr;
            }
        } else if (fr < val[second]) {
            simplex[worst] = refl;
            val[worst] = fr;
        } else {
            const bool outside = fr < val[worst];
            const Angles con = point(centroid, outside ? refl : simplex[worst], 0.5);
            const double fc = f(con);
            if (fc < std::min(fr, val[worst])) {
                simplex[worst] = con;
                val[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    simplex[i] = point(simplex[best], simplex[i], 0.5);
                    val[i] = f(simplex[i]);
                }
            }
        }
    }
    const auto best = static_cast<std::size_t>(std::min_element(val.begin(), val.end()) - val.begin());
    return simplex[best];
}

// Solves (A + mu I) x = b for a small symmetric positive semi-definite A.
bool solve_damped(std::array<std::array<double, 12>, 12> a, std::array<double, 12> b, double mu,
                  std::array<double, 12>& x) {
    constexpr std::size_t n = 12;
    for (std::size_t i = 0; i < n; ++i) a[i][i] += mu;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
        if (std::abs(a[piv][c]) < 1e-300) return false;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t r = c + 1; r < n; ++r) {
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
        x[i] = acc / a[i][i];
    }
    return true;
}

// Levenberg-Marquardt on the real and imaginary parts of the selected fonts,
// with a forward-difference Jacobian.
Angles polish(const PureState& s, Angles x, const std::vector<FontSpec>& targets) {
    if (targets.empty()) return x;
    const std::size_t m = 2 * targets.size();
    auto residual = [&](const Angles& y) {
        const PureState r = rotate(s, y);
        std::vector<double> out(m);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const cplx d = font_det(r, targets[i]);
            out[2 * i] = d.real();
            out[2 * i + 1] = d.imag();
        }
        return out;
    };
    auto sq = [](const std::vector<double>& v) {
        double acc = 0.0;
        for (double e : v) acc += e * e;
        return acc;
    };
    std::vector<double> res = residual(x);
    double cost = sq(res);
    double mu = 1e-6;
    for (int it = 0; it < 60 && cost > 1e-34; ++it) {
        std::vector<std::array<double, 12>> jac(m);
        const double h = 1e-7;
        for (std::size_t k = 0; k < 12; ++k) {
            Angles y = x;
            y[k] += h;
            const std::vector<double> r2 = residual(y);
            for (std::size_t i = 0; i < m; ++i) jac[i][k] = (r2[i] - res[i]) / h;
        }
        std::array<std::array<double, 12>, 12> jtj{};
        std::array<double, 12> jtr{};
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < 12; ++a) {
                jtr[a] -= jac[i][a] * res[i];
                for (std::size_t b = 0; b < 12; ++b) jtj[a][b] += jac[i][a] * jac[i][b];
            }
        bool accepted = false;
        for (int tries = 0; tries < 12 && !accepted; ++tries) {
            std::array<double, 12> step{};
            if (solve_damped(jtj, jtr, mu, step)) {
                Angles y = x;
                for (std::size_t k = 0; k < 12; ++k) y[k] += step[k];
                std::vector<double> r2 = residual(y);
                const double c2 = sq(r2);
                if (c2 < cost) {
                    x = y;
                    res = std::move(r2);
                    cost = c2;
                    mu = std::max(mu * 0.1, 1e-15);
                    accepted = true;
                    continue;
                }
            }
            mu *= 10.0;
        }
        if (!accepted) break;
    }
    return x;
}

}  // namespace

MinimizeResult font_minimize(const PureState& input, const MinimizeOptions& opts) {
    if (input.n_qubits() != 4) throw Error(ErrorCode::WrongArity, "font_minimize needs a four-qubit state");
    const PureState s = normalize(input);
    const std::vector<FontSpec> fonts = enumerate_fonts(4, opts.qubit);

    MinimizeResult result{s, {}, {}, false};
    Objective best = evaluate(s, fonts, opts.tol);
    result.trace.push_back({-1, best.count, best.l1});

    // At least one font survives unless qubit `opts.qubit` is unentangled: the
    // squared moduli of all its fonts sum to det of its reduced state.
    const auto rho1 = reduced_single_qubit(s, opts.qubit);
    const double det1 = (rho1[0] * rho1[3] - rho1[1] * rho1[2]).real();
    const int floor_count = det1 > opts.tol ? 1 : 0;

    for (int restart = 0; restart < opts.restarts && best.count > floor_count; ++restart) {
        std::mt19937_64 rng(derive_seed(opts.seed, static_cast<std::uint64_t>(restart) + 1000));
        std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
        Angles x{};
        for (double& v : x) v = angle(rng);

        auto f = [&](const Angles& y) { return l1_of(s, y, fonts); };
        // Two descents: a coarse one and a restart from its result with a smaller simplex.
        x = nelder_mead(f, x, 0.5, opts.iters * 4);
        x = nelder_mead(f, x, 0.05, opts.iters * 4);

        const PureState trial = rotate(s, x);
        double largest = 0.0;
        std::vector<double> mags;
        for (const FontSpec& fs : fonts) {
            mags.push_back(std::abs(font_det(trial, fs)));
            largest = std::max(largest, mags.back());
        }
        std::vector<FontSpec> small;
        for (std::size_t i = 0; i < fonts.size(); ++i)
            if (mags[i] < 1e-3 * largest) small.push_back(fonts[i]);
        x = polish(s, x, small);

        const PureState candidate = rotate(s, x);
        const Objective o = evaluate(candidate, fonts, opts.tol);
        if (o.better_than(best)) {
            best = o;
            result.state = normalize(candidate);
            result.angles = x;
            result.improved = true;
            result.trace.push_back({restart, o.count, o.l1});
        }
    }

    // Local-unitary equivalence guard.
    const FourQubitReport before = aggregate_invariants(s);
    const FourQubitReport after = aggregate_invariants(result.state);
    const double drift = std::max({std::abs(std::abs(before.i48) - std::abs(after.i48)),
                                   std::abs(std::abs(before.i4) - std::abs(after.i4)),
                                   std::abs(before.n_triple_sq[3] - after.n_triple_sq[3])});
    if (drift > 1e-8) {
        throw std::logic_error("font_minimize changed an invariant modulus by " + std::to_string(drift));
    }
    return result;
}

ClassReport classify(const PureState& input, const ClassifyOptions& opts) {
    if (input.n_qubits() != 4) throw Error(ErrorCode::WrongArity, "classification needs a four-qubit state");
    const PureState s = normalize(input);
    ClassReport r;
    r.tolerance = opts.tol;

    bool fully_product = true;
    for (int q = 1; q <= 4; ++q) {
        const auto rho = reduced_single_qubit(s, q);
        if ((rho[0] * rho[3] - rho[1] * rho[2]).real() > opts.tol) fully_product = false;
    }

    r.signature = invariant_signature(s, opts.tol);
    if (opts.use_font_min) {
        MinimizeOptions mo;
        mo.restarts = opts.restarts;
        mo.iters = opts.iters;
        mo.seed = opts.seed;
        mo.tol = opts.tol;
        MinimizeResult m = font_minimize(s, mo);
        r.signature.n2 = count_nonzero_fonts(m.state, 1, 2, opts.tol);
        r.signature.n3 = count_nonzero_fonts(m.state, 1, 3, opts.tol);
        r.signature.n4 = count_nonzero_fonts(m.state, 1, 4, opts.tol);
        r.minimized_state_used = true;
        r.minimization = std::move(m);
    }

    std::ostringstream notes;
    if (fully_product) {
        r.major_class = MajorClass::Unentangled;
        notes << "every single-qubit reduced state is pure; outside classes I-VII";
    } else {
        r.major_class = decide(r.signature, &r.variant);
        if (!r.variant.empty()) notes << r.variant;
        const bool counts_matter = r.major_class == MajorClass::I || r.major_class == MajorClass::III ||
                                   r.major_class == MajorClass::V || r.major_class == MajorClass::VI;
        if (counts_matter && !r.minimized_state_used) {
            if (notes.tellp() > 0) notes << "; ";
            notes << "font counts taken from the input representation (not minimised)";
        }
        if (r.major_class == MajorClass::Unresolved) {
            if (notes.tellp() > 0) notes << "; ";
            notes << "I48 = 0 with Delta != 0 matches no row";
        }
    }
    r.notes = notes.str();
    return r;
}

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> names{"G_abcd", "L_abc2", "L_a2b2", "L_a2_0_3p1t", "Psi_ab"};
    return names;
}

namespace {

cplx need(const ParamMap& p, const std::string& family, const char* key) {
    auto it = p.find(key);
    if (it == p.end()) throw Error(ErrorCode::MissingParameter, family + " requires parameter '" + key + "'");
    return it->second;
}

// I48, J, Delta and (N)^2 from the five quartic coefficients.
std::map<std::string, cplx> from_coefficients(cplx i3_0, cplx i3_1, cplx t, cplx p0, cplx p1) {
    const cplx i48 = 3.0 * t * t - 4.0 * p0 * p1 + i3_0 * i3_1;
    const cplx j = i3_1 * t * i3_0 - i3_1 * p0 * p0 - p1 * p1 * i3_0 + 2.0 * p0 * p1 * t - t * t * t;
    const double nsq = std::norm(i3_0) + std::norm(i3_1) + 6.0 * std::norm(t) + 4.0 * std::norm(p0) +
                       4.0 * std::norm(p1);
    return {{"i3_0", i3_0}, {"i3_1", i3_1}, {"t", t},          {"p0", p0},
            {"p1", p1},     {"i48", i48},   {"n_triple_sq", nsq}, {"dres", nsq - 2.0 * std::abs(i48)},
            {"delta", i48 * i48 * i48 - 27.0 * j * j}};
}

}  // namespace

std::map<std::string, cplx> family_expected(const std::string& family, const ParamMap& params) {
    if (family == "G_abcd") {
        const cplx a = need(params, family, "a"), b = need(params, family, "b");
        const cplx c = need(params, family, "c"), d = need(params, family, "d");
        const cplx A = (a * a - b * b) * (d * d - c * c);
        const cplx B = 0.25 * (a * a - d * d) * (b * b - c * c);
        auto out = from_coefficients(B, B, (A - 2.0 * B) / 6.0, 0.0, 0.0);
        // Table entries, written out.
        out["i48"] = (A - 2.0 * B) * (A - 2.0 * B) / 12.0 + B * B;
        out["n_triple_sq"] = std::norm(A - 2.0 * B) / 6.0 + 2.0 * std::norm(B);
        out["A"] = A;
        out["B"] = B;
        return out;
    }
    if (family == "L_abc2") {
        const cplx a = need(params, family, "a"), b = need(params, family, "b"), c = need(params, family, "c");
        const cplx t = (a * a - c * c) * (b * b - c * c) / 6.0;
        auto out = from_coefficients(c * (a * a - b * b), 0.0, t, 0.0, 0.0);
        out["i48"] = (a * a - c * c) * (a * a - c * c) * (b * b - c * c) * (b * b - c * c) / 12.0;
        out["n_triple_sq"] = std::norm((a * a - c * c) * (b * b - c * c)) / 6.0 + std::norm(c * (a * a - b * b));
        out["dres"] = std::norm(c * (a * a - b * b));
        out["delta"] = 0.0;
        return out;
    }
    if (family == "L_a2b2") {
        const cplx a = need(params, family, "a"), b = need(params, family, "b");
        const cplx u = a * a - b * b;
        return {{"i48", u * u * u * u / 12.0},
                {"n_triple_sq", std::abs(u * u * u * u) / 6.0},
                {"dres", 0.0},
                {"delta", 0.0}};
    }
    if (family == "L_a2_0_3p1t") {
        const cplx a = need(params, family, "a");
        const cplx a8 = std::pow(a, 8);
        return {{"i48", a8 / 12.0}, {"n_triple_sq", std::abs(a8) / 6.0}, {"dres", 0.0}, {"delta", 0.0}};
    }
    if (family == "Psi_ab") {
        const cplx a = need(params, family, "a"), b = need(params, family, "b");
        auto out = from_coefficients(a * a * b * b, b * b * b * b, (a * a * a * a - 2.0 * a * b * b * b) / 6.0,
                                     0.5 * a * a * a * b, -0.5 * a * a * b * b);
        const cplx q = a * a * a * a + 4.0 * a * b * b * b;
        out["i48"] = q * q / 12.0;
        return out;
    }
    throw Error(ErrorCode::UnknownFamily, "no closed form for family '" + family + "'");
}

}  // namespace negfont
