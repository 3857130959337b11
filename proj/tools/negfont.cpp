#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "negfont/catalog.hpp"
#include "negfont/checks.hpp"
#include "negfont/classify.hpp"
#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/io.hpp"
#include "negfont/ptrans.hpp"

using namespace negfont;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kViolation = 3, kArity = 4 };

struct Options {
    std::string in;
    std::string out;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int trials = 100;
    int triple = 4;
    bool no_normalize = false;
    bool font_min = false;
    bool list = false;
    int qubit = 1;
    int k = 0;
    std::string name;
    std::vector<std::string> params;
    std::vector<std::string> grid;
    int restarts = 32;
    int iters = 400;
};

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
    auto real = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
        return v;
    };
    try {
        if (s.back() != 'i' && s.back() != 'j') return {real(s), 0.0};
        const std::string body = s.substr(0, s.size() - 1);
        // Split at the last sign that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) return {0.0, real(body)};
        return {real(body.substr(0, split)), real(body.substr(split))};
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
    } catch (const std::out_of_range&) {
        throw Error(ErrorCode::ParseError, "number out of range '" + text + "'");
    }
}

ParamMap parse_params(const std::vector<std::string>& items) {
    ParamMap m;
    for (const std::string& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected name=value, got '" + it + "'");
        m[it.substr(0, eq)] = parse_complex(it.substr(eq + 1));
    }
    return m;
}

Grid parse_grid(const std::vector<std::string>& items) {
    Grid g;
    for (const std::string& it : items) {
        const auto eq = it.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::BadGrid, "expected name=v1,v2,..., got '" + it + "'");
        std::vector<cplx> vals;
        std::stringstream ss(it.substr(eq + 1));
        for (std::string v; std::getline(ss, v, ',');) {
            if (!v.empty()) vals.push_back(parse_complex(v));
        }
        if (vals.empty()) throw Error(ErrorCode::BadGrid, "no values for '" + it.substr(0, eq) + "'");
        g.emplace_back(it.substr(0, eq), std::move(vals));
    }
    return g;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
    f << text;
}

PureState load(const Options& o) {
    if (o.in.empty()) throw Error(ErrorCode::ParseError, "--in is required");
    const PureState raw = read_state_file(o.in);
    return o.no_normalize ? raw : normalize(raw);
}

ordered_json header(const Options& o, const std::string& command) {
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["input"] = {{"path", o.in}, {"normalized", !o.no_normalize}};
    j["tolerance"] = o.tol;
    return j;
}

int cmd_invariants(const Options& o) {
    const PureState s = load(o);
    ordered_json j = header(o, "invariants");
    j["input"]["n"] = s.n_qubits();
    switch (s.n_qubits()) {
        case 2:
            j["invariants"] = {{"i2", i2_pair(s)}, {"negativity", negativity(s, 1, Transpose::global())}};
            break;
        case 3:
            j["invariants"] = to_json(three_qubit_report(s, o.tol));
            break;
        case 4:
            if (o.triple < 1 || o.triple > 4) throw Error(ErrorCode::QubitOutOfRange, "--triple must be 1..4");
            j["invariants"] = to_json(aggregate_invariants(s, o.triple));
            break;
        default:
            throw Error(ErrorCode::UnsupportedArity, "invariants supports n = 2, 3, 4");
    }
    emit(o, j.dump(2) + "\n");
    return kOk;
}

int cmd_classify(const Options& o) {
    const PureState s = load(o);
    if (s.n_qubits() != 4) throw Error(ErrorCode::UnsupportedArity, "classify needs n = 4");
    ClassifyOptions co;
    co.tol = o.tol;
    co.use_font_min = o.font_min;
    co.seed = o.seed;
    co.restarts = o.restarts;
    co.iters = o.iters;
    ordered_json j = header(o, "classify");
    j["input"]["n"] = 4;
    j["seed"] = o.seed;
    j["class"] = to_json(classify(s, co));
    emit(o, j.dump(2) + "\n");
    return kOk;
}

int cmd_negativity(const Options& o) {
    const PureState s = load(o);
    const Transpose kind = o.k == 0 ? Transpose::global() : Transpose::kway(o.k);
    const NegativityReport r = negativity_report(s, o.qubit, kind);
    ordered_json j = header(o, "negativity");
    j["input"]["n"] = s.n_qubits();
    j["qubit"] = o.qubit;
    j["transpose"] = o.k == 0 ? std::string("global") : std::to_string(o.k) + "-way";
    j["negativity"] = r.value;
    j["negative_eigenvalues"] = r.negative_eigenvalues;
    emit(o, j.dump(2) + "\n");
    return kOk;
}

int cmd_fonts(const Options& o) {
    const PureState s = load(o);
    ordered_json j = header(o, "fonts");
    j["input"]["n"] = s.n_qubits();
    j["qubit"] = o.qubit;
    ordered_json list = ordered_json::array();
    for (const FontDet& f : all_font_dets(s, o.qubit)) {
        list.push_back({{"label", f.spec.label()}, {"order", f.spec.order()}, {"det", complex_json(f.value)}});
    }
    j["fonts"] = list;
    ordered_json counts;
    for (int k = 2; k <= s.n_qubits(); ++k) counts[std::to_string(k)] = count_nonzero_fonts(s, o.qubit, k, o.tol);
    j["counts"] = counts;
    emit(o, j.dump(2) + "\n");
    return kOk;
}

int cmd_catalog(const Options& o) {
    if (o.list) {
        std::ostringstream ss;
        for (const CatalogInfo& e : catalog_entries()) {
            ss << e.name << "\tn=" << e.n_qubits << "\tparams=" << e.params.size();
            for (const auto& p : e.params) ss << ' ' << p;
            ss << "\t" << e.description << '\n';
        }
        emit(o, ss.str());
        return kOk;
    }
    if (o.name.empty()) throw Error(ErrorCode::ParseError, "catalog needs a state name (or --list)");
    PureState s = catalog_state(o.name, parse_params(o.params));
    if (!o.no_normalize) s = normalize(s);
    std::ostringstream ss;
    write_state(ss, s);
    emit(o, ss.str());
    return kOk;
}

int cmd_sweep(const Options& o) {
    if (o.name.empty()) throw Error(ErrorCode::ParseError, "sweep needs a family name");
    const Grid grid = o.grid.empty() ? default_grid(o.name) : parse_grid(o.grid);
    const std::vector<SweepRow> rows = sweep_family(o.name, grid);
    std::ostringstream ss;
    write_sweep_csv(ss, o.name, rows);
    emit(o, ss.str());
    double worst = 0.0;
    for (const SweepRow& r : rows) worst = std::max(worst, r.max_rel_dev);
    std::cerr << o.name << ": " << rows.size() << " points, max relative deviation " << format_real(worst) << '\n';
    return worst > 1e-7 ? kViolation : kOk;
}

int cmd_check(const Options& o) {
    std::vector<std::string> suites;
    if (o.name.empty() || o.name == "all") {
        suites = suite_names();
    } else {
        suites = {o.name};
    }
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["command"] = "check";
    j["seed"] = o.seed;
    j["trials"] = o.trials;
    ordered_json list = ordered_json::array();
    bool ok = true;
    for (const std::string& name : suites) {
        const SuiteResult r = run_suite(name, o.trials, o.seed);
        list.push_back({{"suite", r.name},
                        {"trials", r.trials},
                        {"max_residual", r.max_residual},
                        {"threshold", r.threshold},
                        {"worst", r.worst},
                        {"passed", r.passed()}});
        ok = ok && r.passed();
    }
    j["suites"] = list;
    emit(o, j.dump(2) + "\n");
    return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Negativity fonts and polynomial invariants of multiqubit pure states"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* c, bool needs_in) {
        auto* opt = c->add_option("--in", o.in, "state file");
        if (needs_in) opt->required();
        c->add_option("--out", o.out, "output path (default stdout)");
        c->add_option("--tol", o.tol, "zero tolerance")->capture_default_str();
        c->add_flag("--no-normalize", o.no_normalize, "use raw coefficients");
    };

    auto* inv = app.add_subcommand("invariants", "invariant report for n = 2, 3, 4");
    common(inv, true);
    inv->add_option("--triple", o.triple, "qubit singled out for the four-qubit invariants")->capture_default_str();

    auto* cls = app.add_subcommand("classify", "major class of a four-qubit state");
    common(cls, true);
    cls->add_flag("--font-min", o.font_min, "count fonts on a minimised local-unitary representative");
    cls->add_option("--seed", o.seed, "seed for the minimiser")->capture_default_str();
    cls->add_option("--restarts", o.restarts)->capture_default_str();
    cls->add_option("--iters", o.iters)->capture_default_str();

    auto* neg = app.add_subcommand("negativity", "negativity of a partial transpose");
    common(neg, true);
    neg->add_option("--qubit", o.qubit, "transposed qubit")->capture_default_str();
    neg->add_option("--k", o.k, "K-way transpose (0 = global)")->capture_default_str();

    auto* fon = app.add_subcommand("fonts", "all canonical font determinants for one qubit");
    common(fon, true);
    fon->add_option("--qubit", o.qubit, "transposed qubit")->capture_default_str();

    auto* cat = app.add_subcommand("catalog", "write a named state");
    cat->add_option("name", o.name, "state name");
    cat->add_option("params", o.params, "parameters as name=value, e.g. a=1+2i");
    cat->add_option("--out", o.out, "output path (default stdout)");
    cat->add_flag("--no-normalize", o.no_normalize, "write raw coefficients");
    cat->add_flag("--list", o.list, "list known states");

    auto* swp = app.add_subcommand("sweep", "compare a family with its closed forms over a grid");
    swp->add_option("family", o.name, "family name")->required();
    swp->add_option("--grid", o.grid, "name=v1,v2,... (repeatable)");
    swp->add_option("--out", o.out, "CSV path (default stdout)");

    auto* chk = app.add_subcommand("check", "property suites on random states");
    chk->add_option("suite", o.name, "invariance|decomposition|negativity-relation|vanishing|homogeneity|all");
    chk->add_option("--trials", o.trials)->capture_default_str();
    chk->add_option("--seed", o.seed)->capture_default_str();
    chk->add_option("--out", o.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*inv) return cmd_invariants(o);
        if (*cls) return cmd_classify(o);
        if (*neg) return cmd_negativity(o);
        if (*fon) return cmd_fonts(o);
        if (*cat) return cmd_catalog(o);
        if (*swp) return cmd_sweep(o);
        if (*chk) return cmd_check(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::UnsupportedArity || e.code() == ErrorCode::WrongArity) return kArity;
        return kUsage;
    }
    return kUsage;
}
