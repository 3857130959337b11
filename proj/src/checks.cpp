#include "negfont/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "negfont/classify.hpp"
#include "negfont/invariants.hpp"
#include "negfont/io.hpp"
#include "negfont/ptrans.hpp"

namespace negfont {

namespace {

PureState scramble(const PureState& s, std::uint64_t seed) {
    PureState out = s;
    for (int q = 1; q <= s.n_qubits(); ++q) {
        out = apply_local_unitary(out, random_special_unitary(derive_seed(seed, static_cast<std::uint64_t>(q)), q));
    }
    return out;
}

double rel(cplx a, cplx b, double scale) { return std::abs(a - b) / std::max(scale, 1e-300); }

void track(SuiteResult& r, double v, const std::string& what) {
    if (v > r.max_residual || r.worst.empty()) {
        r.max_residual = std::max(r.max_residual, v);
        r.worst = what;
    }
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

PureState triple_single(const PureState& tri, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    const cplx one[2]{{g(rng), g(rng)}, {g(rng), g(rng)}};
    std::vector<cplx> v(16);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 2; ++j) v[2 * i + j] = tri[i] * one[j];
    return normalize(make_state(4, std::move(v)));
}

}  // namespace

PureState tensor(const PureState& a, const PureState& b) {
    const int n = a.n_qubits() + b.n_qubits();
    std::vector<cplx> v(std::size_t{1} << n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) v[i * b.dim() + j] = a[i] * b[j];
    return make_state(n, std::move(v));
}

SuiteResult check_invariance(int trials, std::uint64_t seed) {
    SuiteResult r{"invariance", trials, 0.0, 1e-9, {}};
    for (int t = 0; t < trials; ++t) {
        const auto st = static_cast<std::uint64_t>(t);
        const PureState s3 = random_state(3, derive_seed(seed, 3 * st));
        const PureState u3 = scramble(s3, derive_seed(seed, 3 * st + 1));
        const cplx a3 = three_qubit_report(s3).i3, b3 = three_qubit_report(u3).i3;
        track(r, rel(a3, b3, std::abs(a3)), "I3");

        const PureState s4 = random_state(4, derive_seed(seed, 3 * st + 2));
        const PureState u4 = scramble(s4, derive_seed(seed, 3 * st + 2 + (1ULL << 40)));
        const TripleInvariants x = triple_invariants(s4, 4), y = triple_invariants(u4, 4);
        track(r, rel(i4(s4), i4(u4), std::abs(i4(s4))), "I4");
        track(r, rel(x.i48, y.i48, std::abs(x.i48)), "I48");
        track(r, rel(x.j12, y.j12, std::abs(x.j12)), "J");
        track(r, rel(x.delta, y.delta, std::pow(std::abs(x.i48), 3) + 27.0 * std::norm(x.j12)), "Delta");
        track(r, std::abs(x.n_sq - y.n_sq) / x.n_sq, "N^2");
    }
    return r;
}

SuiteResult check_decomposition(int trials, std::uint64_t seed) {
    SuiteResult r{"decomposition", trials, 0.0, 1e-12, {}};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const int n = 3 + static_cast<int>(rng() % 2);
        const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        const PureState s = random_state(n, rng());
        track(r, decomposition_residual(s, p), "n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
    return r;
}

SuiteResult check_negativity_relation(int trials, std::uint64_t seed) {
    SuiteResult r{"negativity-relation", trials, 0.0, 1e-9, {}};
    for (int t = 0; t < trials; ++t) {
        const PureState s = random_state(3, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const NegativityRelation rel = n_global_sq_relation(s);
        track(r, std::abs(rel.lhs - rel.rhs), "|lhs-rhs|");
    }
    return r;
}

SuiteResult check_vanishing(int trials, std::uint64_t seed) {
    SuiteResult r{"vanishing", trials, 0.0, 1e-9, {}};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const bool pairs = (t % 2) == 1;
        PureState s = pairs ? tensor(random_state(2, rng()), random_state(2, rng()))
                            : triple_single(random_state(3, rng()), rng);
        s = permute_qubits(s, random_permutation(4, rng));
        s = scramble(s, rng());
        track(r, std::abs(i48(s)), pairs ? "pair x pair" : "triple x single");
    }
    return r;
}

SuiteResult check_homogeneity(int trials, std::uint64_t seed) {
    SuiteResult r{"homogeneity", trials, 0.0, 1e-9, {}};
    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::uniform_real_distribution<double> u(0.5, 2.0), ph(0.0, 6.283185307179586);
        const cplx c = std::polar(u(rng), ph(rng));
        const PureState s = random_state(4, rng());
        const PureState cs = scale(s, c);
        const TripleInvariants x = triple_invariants(s, 4), y = triple_invariants(cs, 4);
        auto check = [&](cplx a, cplx b, int deg, const char* what) {
            const cplx want = a * std::pow(c, deg);
            track(r, rel(b, want, std::abs(want)), what);
        };
        check(i4(s), i4(cs), degree::i4, "I4");
        check(x.i3_0, y.i3_0, degree::tp, "I3_0");
        check(x.t, y.t, degree::tp, "T");
        check(x.p0, y.p0, degree::tp, "P0");
        check(x.i48, y.i48, degree::i48, "I48");
        check(x.j12, y.j12, degree::j12, "J");
        const PureState s3 = random_state(3, rng());
        check(three_qubit_report(s3).i3, three_qubit_report(scale(s3, c)).i3, degree::i3, "I3 (n=3)");
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"invariance", "decomposition", "negativity-relation", "vanishing",
                                                "homogeneity"};
    return names;
}

SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error(ErrorCode::BadGrid, "trials must be >= 1");
    if (name == "invariance") return check_invariance(trials, seed);
    if (name == "decomposition") return check_decomposition(trials, seed);
    if (name == "negativity-relation") return check_negativity_relation(trials, seed);
    if (name == "vanishing") return check_vanishing(trials, seed);
    if (name == "homogeneity") return check_homogeneity(trials, seed);
    throw Error(ErrorCode::UnknownFamily, "unknown suite '" + name + "'");
}

std::vector<std::string> family_parameters(const std::string& family) {
    for (const CatalogInfo& e : catalog_entries()) {
        if (e.name == family) return e.params;
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + family + "'");
}

Grid default_grid(const std::string& family, int min_points) {
    const auto names = family_parameters(family);
    if (names.empty()) throw Error(ErrorCode::BadGrid, family + " has no parameters");
    const auto k = static_cast<double>(names.size());
    const int m = std::max(2, static_cast<int>(std::ceil(std::pow(static_cast<double>(min_points), 1.0 / k) - 1e-9)));
    Grid g;
    for (std::size_t p = 0; p < names.size(); ++p) {
        std::vector<cplx> vals;
        for (int i = 0; i < m; ++i) {
            const double radius = 0.3 + 1.4 * i / (m - 1);
            // Alternate real and complex points; the phase walk differs per parameter.
            const double phase = (i % 2 == 0) ? 0.0 : 2.399963 * (i + 1) + 0.7 * static_cast<double>(p);
            vals.push_back(std::polar(radius * (1.0 + 0.17 * static_cast<double>(p)), phase));
        }
        g.emplace_back(names[p], std::move(vals));
    }
    return g;
}

std::vector<SweepRow> sweep_family(const std::string& family, const Grid& grid) {
    const auto& known = known_families();
    if (std::find(known.begin(), known.end(), family) == known.end()) {
        throw Error(ErrorCode::UnknownFamily, "no closed form for family '" + family + "'");
    }
    if (grid.empty()) throw Error(ErrorCode::BadGrid, "empty grid");
    for (const auto& [name, vals] : grid) {
        if (vals.empty()) throw Error(ErrorCode::BadGrid, "no values for parameter '" + name + "'");
    }
    const std::map<std::string, int> deg{{"i48", degree::i48},
                                         {"n_triple_sq", degree::n_triple_sq},
                                         {"dres", degree::n_triple_sq},
                                         {"delta", degree::delta}};
    std::vector<SweepRow> rows;
    std::vector<std::size_t> idx(grid.size(), 0);
    while (true) {
        SweepRow row;
        for (std::size_t k = 0; k < grid.size(); ++k) row.params[grid[k].first] = grid[k].second[idx[k]];
        const PureState s = catalog_state(family, row.params);
        const TripleInvariants t = triple_invariants(s, 4);
        row.numeric = {{"i48", t.i48},
                       {"n_triple_sq", t.n_sq},
                       {"dres", t.n_sq - 2.0 * std::abs(t.i48)},
                       {"delta", t.delta}};
        const auto exp = family_expected(family, row.params);
        const double nrm = s.norm();
        for (const std::string& q : kSweepQuantities) {
            row.expected[q] = exp.at(q);
            row.abs_dev[q] = std::abs(row.numeric[q] - row.expected[q]);
            row.rel_dev[q] = row.abs_dev[q] / std::max(std::abs(row.expected[q]), std::pow(nrm, deg.at(q)));
            row.max_rel_dev = std::max(row.max_rel_dev, row.rel_dev[q]);
        }
        rows.push_back(std::move(row));

        std::size_t k = grid.size();
        while (k > 0) {
            --k;
            if (++idx[k] < grid[k].second.size()) break;
            idx[k] = 0;
            if (k == 0) return rows;
        }
    }
}

void write_sweep_csv(std::ostream& out, const std::string& family, const std::vector<SweepRow>& rows) {
    out << "family";
    if (!rows.empty()) {
        for (const auto& [name, v] : rows.front().params) out << ',' << name << "_re," << name << "_im";
    }
    for (const std::string& q : kSweepQuantities) {
        out << ',' << q << "_re," << q << "_im," << q << "_expected_re," << q << "_expected_im," << q << "_abs_dev,"
            << q << "_rel_dev";
    }
    out << ",max_rel_dev\n";
    for (const SweepRow& r : rows) {
        out << family;
        for (const auto& [name, v] : r.params) out << ',' << format_real(v.real()) << ',' << format_real(v.imag());
        for (const std::string& q : kSweepQuantities) {
            const cplx n = r.numeric.at(q), e = r.expected.at(q);
            out << ',' << format_real(n.real()) << ',' << format_real(n.imag()) << ',' << format_real(e.real()) << ','
                << format_real(e.imag()) << ',' << format_real(r.abs_dev.at(q)) << ','
                << format_real(r.rel_dev.at(q));
        }
        out << ',' << format_real(r.max_rel_dev) << '\n';
    }
}

}  // namespace negfont
