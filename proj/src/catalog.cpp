#include "negfont/catalog.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string_view>
#include <utility>

namespace negfont {
namespace {

using Terms = std::vector<std::pair<std::string_view, cplx>>;

PureState from_terms(int n, const Terms& terms) {
    std::vector<cplx> amps(std::size_t{1} << n);
    for (const auto& [label, value] : terms) {
        std::size_t idx = 0;
        for (char ch : label) idx = (idx << 1) | static_cast<std::size_t>(ch == '1');
        amps[idx] += value;
    }
    return PureState(n, std::move(amps));
}

cplx param(const ParamMap& params, const std::string& state, const char* key) {
    auto it = params.find(key);
    if (it == params.end()) {
        throw Error(ErrorCode::MissingParameter, state + " requires parameter '" + key + "'");
    }
    return it->second;
}

using Builder = std::function<PureState(const ParamMap&)>;

struct Entry {
    CatalogInfo info;
    Builder build;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        const double r2 = 1.0 / std::sqrt(2.0);
        const double r3 = 1.0 / std::sqrt(3.0);
        const double r6 = 1.0 / std::sqrt(6.0);
        const double r8 = 1.0 / std::sqrt(8.0);
        const cplx w1 = std::polar(r6, 2.0 * std::numbers::pi / 3.0);
        const cplx w2 = std::polar(r6, 4.0 * std::numbers::pi / 3.0);

        std::vector<Entry> e;
        auto fixed = [&e](std::string name, int n, std::string desc, Terms terms) {
            e.push_back({{std::move(name), n, {}, std::move(desc)},
                         [n, terms = std::move(terms)](const ParamMap&) { return from_terms(n, terms); }});
        };
        fixed("Bell", 2, "(|00> + |11>)/sqrt2", {{"00", r2}, {"11", r2}});
        fixed("GHZ3", 3, "(|000> + |111>)/sqrt2", {{"000", r2}, {"111", r2}});
        fixed("W3", 3, "(|001> + |010> + |100>)/sqrt3", {{"001", r3}, {"010", r3}, {"100", r3}});
        fixed("GHZ4", 4, "(|0000> + |1111>)/sqrt2", {{"0000", r2}, {"1111", r2}});
        fixed("W4", 4, "(|0000> + |1100> + |1010> + |1001>)/2",
              {{"0000", 0.5}, {"1100", 0.5}, {"1010", 0.5}, {"1001", 0.5}});
        fixed("C1", 4, "(|0000> + |1100> + |0011> - |1111>)/2",
              {{"0000", 0.5}, {"1100", 0.5}, {"0011", 0.5}, {"1111", -0.5}});
        fixed("C2", 4, "(|0000> + |0110> + |1001> - |1111>)/2",
              {{"0000", 0.5}, {"0110", 0.5}, {"1001", 0.5}, {"1111", -0.5}});
        fixed("C3", 4, "(|0000> + |1010> + |0101> - |1111>)/2",
              {{"0000", 0.5}, {"1010", 0.5}, {"0101", 0.5}, {"1111", -0.5}});
        fixed("Dicke42", 4, "two-excitation Dicke state, all six terms 1/sqrt6",
              {{"0011", r6}, {"1100", r6}, {"0101", r6}, {"1010", r6}, {"1001", r6}, {"0110", r6}});
        fixed("HS", 4, "Higuchi-Sudbery state, phases 1, e^{i2pi/3}, e^{i4pi/3}",
              {{"0011", r6}, {"1100", r6}, {"1010", w1}, {"0101", w1}, {"1001", w2}, {"0110", w2}});
        fixed("BrownPhi", 4, "(|0000> + |1101>)/2 + (|1011> + |0011> + |0110> - |1110>)/sqrt8",
              {{"0000", 0.5}, {"1101", 0.5}, {"1011", r8}, {"0011", r8}, {"0110", r8}, {"1110", -r8}});

        e.push_back({{"Psi_ab", 4, {"a", "b"}, "a(|0000> + |1111>) + b(|1101> + |1110> + |0011>)"},
                     [](const ParamMap& p) {
                         const cplx a = param(p, "Psi_ab", "a");
                         const cplx b = param(p, "Psi_ab", "b");
                         return from_terms(4, {{"0000", a}, {"1111", a}, {"1101", b}, {"1110", b}, {"0011", b}});
                     }});
        e.push_back({{"Psi_a", 4, {"a"}, "a(|0000> + |1111>) + |1110>"}, [](const ParamMap& p) {
                         const cplx a = param(p, "Psi_a", "a");
                         return from_terms(4, {{"0000", a}, {"1111", a}, {"1110", 1.0}});
                     }});
        e.push_back({{"G_abcd", 4, {"a", "b", "c", "d"}, "Verstraete family G_abcd"}, [](const ParamMap& p) {
                         const cplx a = param(p, "G_abcd", "a");
                         const cplx b = param(p, "G_abcd", "b");
                         const cplx c = param(p, "G_abcd", "c");
                         const cplx d = param(p, "G_abcd", "d");
                         const cplx ad_p = 0.5 * (a + d), ad_m = 0.5 * (a - d);
                         const cplx bc_p = 0.5 * (b + c), bc_m = 0.5 * (b - c);
                         return from_terms(4, {{"0000", ad_p}, {"1111", ad_p}, {"1100", ad_m}, {"0011", ad_m},
                                               {"1010", bc_p}, {"0101", bc_p}, {"0110", bc_m}, {"1001", bc_m}});
                     }});
        e.push_back({{"L_abc2", 4, {"a", "b", "c"}, "Verstraete family L_abc2"}, [](const ParamMap& p) {
                         const cplx a = param(p, "L_abc2", "a");
                         const cplx b = param(p, "L_abc2", "b");
                         const cplx c = param(p, "L_abc2", "c");
                         const cplx ab_p = 0.5 * (a + b), ab_m = 0.5 * (a - b);
                         return from_terms(4, {{"0000", ab_p}, {"1111", ab_p}, {"1100", ab_m}, {"0011", ab_m},
                                               {"1010", c}, {"0101", c}, {"0110", 1.0}});
                     }});
        e.push_back({{"L_a2b2", 4, {"a", "b"}, "Verstraete family L_a2b2"}, [](const ParamMap& p) {
                         const cplx a = param(p, "L_a2b2", "a");
                         const cplx b = param(p, "L_a2b2", "b");
                         return from_terms(4, {{"0000", a}, {"1111", a}, {"0101", b}, {"1010", b},
                                               {"0110", 1.0}, {"0011", 1.0}});
                     }});
        e.push_back({{"L_a2_0_3p1t", 4, {"a"}, "Verstraete family L_{a2 0_{3+1~}}"}, [](const ParamMap& p) {
                         const cplx a = param(p, "L_a2_0_3p1t", "a");
                         return from_terms(4, {{"0000", a}, {"1111", a}, {"0101", 1.0}, {"0110", 1.0},
                                               {"0011", 1.0}});
                     }});
        return e;
    }();
    return entries;
}

}  // namespace

const std::vector<CatalogInfo>& catalog_entries() {
    static const std::vector<CatalogInfo> infos = [] {
        std::vector<CatalogInfo> out;
        for (const Entry& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

PureState catalog_state(const std::string& name, const ParamMap& params) {
    for (const Entry& e : registry()) {
        if (e.info.name == name) return e.build(params);
    }
    throw Error(ErrorCode::UnknownState, "no catalog entry named '" + name + "'");
}

}  // namespace negfont
