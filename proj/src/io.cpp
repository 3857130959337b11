#include "negfont/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace negfont {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& tok, int line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        parse_fail(line, "not a number: '" + tok + "'");
    }
    if (used != tok.size()) parse_fail(line, "not a number: '" + tok + "'");
    if (!std::isfinite(v)) parse_fail(line, "non-finite value");
    return v;
}

}  // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PureState parse_state(std::istream& in) {
    std::string raw;
    int line = 0;
    int n = 0;
    std::map<std::size_t, cplx> amps;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        std::istringstream ss(text);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);

        if (n == 0) {
            if (tok.size() != 2 || tok[0] != "n") parse_fail(line, "expected header 'n <qubits>'");
            const double v = parse_real(tok[1], line);
            if (v != std::floor(v) || v < kMinQubits || v > kMaxQubits) parse_fail(line, "qubit count outside [2, 6]");
            n = static_cast<int>(v);
            continue;
        }
        if (tok.size() != 3) parse_fail(line, "expected '<bitstring> <re> <im>'");
        const std::string& bits = tok[0];
        if (static_cast<int>(bits.size()) != n) parse_fail(line, "bitstring length differs from n");
        std::size_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') parse_fail(line, "malformed bitstring '" + bits + "'");
            index = (index << 1) | static_cast<std::size_t>(c - '0');
        }
        if (amps.count(index)) parse_fail(line, "duplicate index " + bits);
        amps[index] = {parse_real(tok[1], line), parse_real(tok[2], line)};
    }
    if (n == 0) parse_fail(line, "missing header 'n <qubits>'");
    std::vector<cplx> v(std::size_t{1} << n);
    for (const auto& [i, a] : amps) v[i] = a;
    try {
        return make_state(n, std::move(v));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ZeroVector) parse_fail(line, "no nonzero amplitude");
        throw;
    }
}

PureState read_state_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parse_state(f);
}

void write_state(std::ostream& out, const PureState& s) {
    const int n = s.n_qubits();
    out << "n " << n << '\n';
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (s[i] == cplx{}) continue;
        std::string bits(static_cast<std::size_t>(n), '0');
        for (int q = 1; q <= n; ++q)
            if (i & qubit_mask(n, q)) bits[static_cast<std::size_t>(q - 1)] = '1';
        out << bits << ' ' << format_real(s[i].real()) << ' ' << format_real(s[i].imag()) << '\n';
    }
}

void write_state_file(const std::string& path, const PureState& s) {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
    write_state(f, s);
}

nlohmann::ordered_json complex_json(cplx v) {
    return {{"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)}};
}

nlohmann::ordered_json to_json(const ThreeQubitReport& r) {
    using nlohmann::ordered_json;
    auto pair = [](const std::array<cplx, 2>& d) { return ordered_json::array({complex_json(d[0]), complex_json(d[1])}); };
    ordered_json j;
    j["d2_a1a2"] = pair(r.d2_a1a2);
    j["d2_a1a3"] = pair(r.d2_a1a3);
    j["d2_a2a3"] = pair(r.d2_a2a3);
    j["d000"] = complex_json(r.d000);
    j["d001"] = complex_json(r.d001);
    j["d010"] = complex_json(r.d010);
    j["n_pair_sq"] = r.n_pair_sq;
    j["n_global_sq"] = r.n_global_sq;
    j["i3"] = complex_json(r.i3);
    j["tau3"] = r.tau3;
    j["w_sums"] = r.w_sums;
    j["i2_w"] = r.i2_w;
    j["i3_zero"] = r.i3_zero;
    return j;
}

namespace {

nlohmann::ordered_json triple_json(const TripleInvariants& t) {
    return {{"singled", t.singled},     {"i3_0", complex_json(t.i3_0)}, {"i3_1", complex_json(t.i3_1)},
            {"t", complex_json(t.t)},   {"p0", complex_json(t.p0)},     {"p1", complex_json(t.p1)},
            {"i48", complex_json(t.i48)}, {"j12", complex_json(t.j12)}, {"delta", complex_json(t.delta)},
            {"n_sq", t.n_sq}};
}

}  // namespace

nlohmann::ordered_json to_json(const FourQubitReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["triple"] = r.triple;
    j["i4"] = complex_json(r.i4);
    j["tau4"] = r.tau4;
    j["i3_cond"] = ordered_json::array({complex_json(r.i3_cond[0]), complex_json(r.i3_cond[1])});
    j["t"] = complex_json(r.t_inv);
    j["p"] = ordered_json::array({complex_json(r.p_inv[0]), complex_json(r.p_inv[1])});
    j["i48"] = complex_json(r.i48);
    j["j12"] = complex_json(r.j12);
    j["delta24"] = complex_json(r.delta24);
    j["n_triple_sq"] = r.n_triple_sq;
    j["n44_sq"] = r.n44_sq;
    j["n48"] = r.n48;
    ordered_json pairs = ordered_json::object();
    for (std::size_t k = 0; k < kPairs.size(); ++k) {
        pairs[std::to_string(kPairs[k][0]) + std::to_string(kPairs[k][1])] = r.pair_sums[k];
    }
    j["pair_sums"] = pairs;
    j["i26"] = r.i26;
    j["i26_sym"] = r.i26_sym;
    j["dres"] = r.dres;
    j["tau48"] = r.tau48;
    ordered_json triples = ordered_json::array();
    for (const auto& t : r.triples) triples.push_back(triple_json(t));
    j["triples"] = triples;
    j["cross_triple_i48_dev"] = r.cross_triple_i48_dev;
    j["cross_triple_delta_dev"] = r.cross_triple_delta_dev;
    return j;
}

nlohmann::ordered_json to_json(const ClassReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["major_class"] = to_string(r.major_class);
    j["signature"] = {{"i48_zero", r.signature.i48_zero}, {"dres_zero", r.signature.dres_zero},
                      {"delta_zero", r.signature.delta_zero}, {"n2", r.signature.n2},
                      {"n3", r.signature.n3}, {"n4", r.signature.n4}};
    j["minimized_state_used"] = r.minimized_state_used;
    j["variant"] = r.variant;
    j["notes"] = r.notes;
    j["tolerance"] = r.tolerance;
    if (r.minimization) {
        ordered_json trace = ordered_json::array();
        for (const auto& st : r.minimization->trace) {
            trace.push_back({{"restart", st.restart}, {"count", st.count}, {"l1", st.l1}});
        }
        j["minimization"] = {{"improved", r.minimization->improved}, {"trace", trace}};
    }
    return j;
}

}  // namespace negfont
