#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skein/asymptotics.hpp"
#include "skein/bracket.hpp"
#include "skein/error.hpp"
#include "skein/khovanov.hpp"
#include "skein/spin.hpp"

using namespace skein;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string input;
    std::string template_path;
    std::string n = "1";
    std::string k;
    std::string format = "text";
    std::string root = "dimension";
    unsigned digits = 40;
    int cap = 16;
    int threads = 1;
    int exact_up_to = 6;
    bool reduced = false;
    bool octahedron = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    const auto dots = s.find("..");
    try {
        if (dots != std::string::npos) {
            const int a = std::stoi(s.substr(0, dots)), b = std::stoi(s.substr(dots + 2));
            if (b < a) throw UsageError("empty range " + s);
            for (int i = a; i <= b; ++i) out.push_back(i);
            return out;
        }
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    } catch (const std::logic_error&) {
        throw UsageError("expected an integer list or range, got '" + s + "'");
    }
    return out;
}

int single_int(const std::string& s, const char* what) {
    const auto v = parse_ints(s);
    if (v.size() != 1) throw UsageError(std::string(what) + " takes a single integer");
    return v[0];
}

TwistTemplate load_template(const std::string& path) {
    if (path.empty()) throw UsageError("no input file");
    return parse_template(read_file(path));
}

Diagram load_diagram(const std::string& path, const std::string& k) {
    const TwistTemplate t = load_template(path);
    const std::vector<int> ks = parse_ints(k);
    if (static_cast<int>(ks.size()) != t.t())
        throw UsageError("the diagram has " + std::to_string(t.t()) + " twist slots but --k gives " + std::to_string(ks.size()));
    return twist_fill(t, ks);
}

ordered_json coeff_json(const Int& c) {
    if (c.fits_slong_p()) return c.get_si();
    return c.get_str();
}

ordered_json terms_json(const LaurentPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({e, coeff_json(c)});
    return a;
}

void put_rational(ordered_json& j, const RationalFunc& f) {
    j["terms"] = terms_json(f.num());
    if (!f.den().is_one()) j["denominator"] = terms_json(f.den());
    j["text"] = f.str();
}

std::string real_str(const Real& x, int sig = 16) { return x.str(sig); }

void emit(const Config& c, const std::string& text, const ordered_json& j) {
    if (c.format == "json") {
        std::cout << j.dump() << "\n";
        return;
    }
    if (!text.empty()) std::cout << text << "\n";
    std::cout << j.dump() << "\n";
}

int cmd_bracket(const Config& c) {
    const Diagram d = load_diagram(c.input, c.k);
    const int n = single_int(c.n, "--n");
    if (n < 1) throw UsageError("--n must be positive");
    const RationalFunc f = n == 1 ? RationalFunc(bracket(d)) : bracket(colored_diagram(d, n));
    ordered_json j;
    put_rational(j, f);
    j["writhe"] = writhe(d);
    j["n"] = n;
    j["reduced"] = false;
    emit(c, f.str(), j);
    return 0;
}

int cmd_jones(const Config& c, bool many) {
    const Diagram d = load_diagram(c.input, c.k);
    const std::vector<int> ns = parse_ints(c.n);
    if (ns.empty()) throw UsageError("--n is empty");
    if (!many && ns.size() != 1) throw UsageError("jones takes a single --n; use colored-jones for ranges");
    ordered_json results = ordered_json::array();
    std::string text;
    for (int n : ns) {
        if (n < 1) throw UsageError("--n must be positive");
        const RationalFunc f = colored_jones(d, n, c.reduced);
        ordered_json j;
        put_rational(j, f);
        j["writhe"] = writhe(d);
        j["n"] = n;
        j["reduced"] = c.reduced;
        if (!text.empty()) text += "\n";
        text += many ? std::to_string(n) + ": " + f.str() : f.str();
        results.push_back(std::move(j));
    }
    if (!many) {
        emit(c, text, results[0]);
        return 0;
    }
    emit(c, text, ordered_json{{"results", results}});
    return 0;
}

ordered_json groups_json(const BigradedGroups& g) {
    ordered_json entries = ordered_json::array();
    for (const auto& [ij, grp] : g.entries) {
        ordered_json t = ordered_json::array();
        for (const auto& x : grp.torsion) t.push_back(coeff_json(x));
        entries.push_back({{"i", ij.first}, {"j", ij.second}, {"rank", grp.rank}, {"torsion", t}});
    }
    return entries;
}

int cmd_kh(const Config& c) {
    const Diagram d = load_diagram(c.input, c.k);
    const BigradedGroups g = homology(ckh(d, c.cap));
    ordered_json j{{"entries", groups_json(g)}};
    if (c.format == "text") {
        std::cout << g.str() << "\n";
        return 0;
    }
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_stabilize(const Config& c) {
    const TwistTemplate t = load_template(c.template_path.empty() ? c.input : c.template_path);
    if (t.t() < 1) throw UsageError("the template has no twist slots");
    const std::vector<int> ks = parse_ints(c.k.empty() ? std::string("2..8") : c.k);
    if (ks.size() < 2) throw UsageError("stabilize needs at least two values of k");
    std::vector<BigradedGroups> seq;
    for (int k : ks) {
        std::cerr << "kh k=" << k << "\n";
        seq.push_back(homology(ckh(twist_fill(t, std::vector<int>(static_cast<std::size_t>(t.t()), k)), c.cap)));
    }
    const std::vector<int> m = stable_range(seq);
    std::cout << "k,m,shift_i,shift_j\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& first = seq[i].entries.begin()->first;
        std::cout << ks[i] << "," << (m[i] == kStable ? std::string("stable") : std::to_string(m[i])) << "," << -first.first << ","
                  << -first.second << "\n";
    }
    return 0;
}

ordered_json trace_json(const ReductionTrace& tr) {
    ordered_json moves = ordered_json::array();
    for (const auto& mv : tr.moves) {
        ordered_json j{{"kind", move_name(mv.kind)}, {"colors", mv.colors}, {"factor", mv.factor.str()}};
        if (!mv.branches.empty()) {
            ordered_json br = ordered_json::array();
            for (std::size_t i = 0; i < mv.branches.size(); ++i)
                br.push_back({{"color", mv.branch_colors[i]}, {"trace", trace_json(mv.branches[i])}});
            j["branches"] = br;
        }
        moves.push_back(std::move(j));
    }
    ordered_json thetas = ordered_json::array();
    for (const auto& th : tr.thetas) thetas.push_back(th);
    return {{"T", tr.T},         {"uses_fusion", tr.uses_fusion}, {"vanished", tr.vanished}, {"moves", moves},
            {"thetas", thetas}, {"circles", tr.circles},        {"value", tr.value().str()}};
}

int cmd_reduce_ktg(const Config& c) {
    if (c.input.empty()) throw UsageError("no input file");
    const KTG g = parse_ktg(read_file(c.input));
    const ReductionTrace tr = reduce_to_theta(g);
    ordered_json j = trace_json(tr);
    j["replay"] = replay(tr);
    emit(c, c.format == "text" ? "T = " + std::to_string(tr.T) : std::string(), j);
    return 0;
}

int cmd_asymptote(const Config& c) {
    if (c.digits < 15) throw UsageError("--digits must be at least 15");
    const RootConvention conv = parse_convention(c.root);
    std::vector<int> ns;
    for (int n : parse_ints(c.n == "1" ? std::string("2,4,6,8,10,16,20,30,40,50") : c.n)) {
        if (n % 2 != 0) {
            std::cerr << "skipping odd n=" << n << "\n";
            continue;
        }
        ns.push_back(n);
    }
    if (ns.empty()) throw UsageError("no even n to evaluate");
    PrecisionGuard guard(c.digits + 10);
    GrowthSeries g;
    if (c.octahedron) {
        g = octahedron_rate(ns, c.digits, conv);
    } else {
        const std::string path = c.template_path.empty() ? c.input : c.template_path;
        g = volume_experiment(load_template(path), ns, c.digits, conv, c.exact_up_to);
    }
    const auto headline = [&](const GrowthRow& r) { return c.octahedron ? r.rate_alt : r.rate; };
    ordered_json rows = ordered_json::array();
    if (c.format != "json") std::cout << "n,abs_value,rate,target,rate_alt\n";
    for (const auto& r : g.rows) {
        if (c.format != "json")
            std::cout << r.n << "," << real_str(r.value.abs()) << "," << real_str(headline(r)) << "," << real_str(g.target) << ","
                      << real_str(c.octahedron ? r.rate : r.rate_alt) << "\n";
        ordered_json row{{"n", r.n}, {"abs_value", real_str(r.value.abs())}, {"rate", real_str(headline(r))}};
        if (r.exact) row["exact"] = r.exact->str(16);
        if (!r.exact_note.empty()) row["exact_note"] = r.exact_note;
        rows.push_back(std::move(row));
    }
    const Real last = headline(g.rows.back());
    ordered_json summary{{"T", g.T},
                         {"target", real_str(g.target)},
                         {"last_rate", real_str(last)},
                         {"gap", real_str(g.target - last)},
                         {"convention", convention_name(conv)},
                         {"normalization", c.octahedron ? "pi/n" : "2pi/n"}};
    if (c.format == "json") summary["rows"] = rows;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_fusion_check(const Config& c) {
    const TwistTemplate t = load_template(c.template_path.empty() ? c.input : c.template_path);
    const int n = single_int(c.n, "--n");
    std::vector<int> ks = parse_ints(c.k);
    if (ks.size() == 1 && t.t() > 1) ks.assign(static_cast<std::size_t>(t.t()), ks[0]);
    if (static_cast<int>(ks.size()) != t.t()) throw UsageError("--k must give one value per twist slot");
    const FusionExpansion ex = fusion_expand(t, ks, n);
    RationalFunc sum;
    ordered_json terms = ordered_json::array();
    for (const auto& term : ex.terms) {
        const RationalFunc b = bracket(term.graph);
        sum += term.coefficient * b;
        terms.push_back({{"j", term.j}, {"coefficient", term.coefficient.str()}, {"bracket", b.str()}});
    }
    const RationalFunc direct = bracket(colored_diagram(twist_fill(t, ks), n));
    const bool equal = sum == direct;
    ordered_json j{{"n", n},         {"k", ks},           {"terms", terms}, {"sum", sum.str()}, {"bracket", direct.str()},
                   {"equal", equal}, {"negative_slots", ex.negative_slots}};
    emit(c, std::string(equal ? "equal" : "MISMATCH"), j);
    return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skein: colored Jones, spin networks and Khovanov homology"};
    app.require_subcommand(1);
    Config c;
    if (const char* env = std::getenv("SKEIN_DIGITS")) {
        try {
            c.digits = static_cast<unsigned>(std::stoul(env));
        } catch (const std::logic_error&) {
            std::cerr << "SKEIN_DIGITS must be an integer\n";
            return 2;
        }
    }
    app.add_option("--digits", c.digits, "working precision in decimal digits")->check(CLI::Range(15u, 5000u));
    app.add_option("--max-crossings", c.cap, "crossing cap for state sums")->check(CLI::Range(1, 20));
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256));
    app.fallthrough();

    const auto with_input = [&](CLI::App* s) { s->add_option("input", c.input, "input file"); };
    const auto with_k = [&](CLI::App* s) { s->add_option("--k", c.k, "twist counts, e.g. 3 or 1,2 or 2..8"); };

    auto* br = app.add_subcommand("bracket", "Kauffman bracket of a diagram or its n-colored cable");
    with_input(br);
    with_k(br);
    br->add_option("--n", c.n, "color");
    auto* jo = app.add_subcommand("jones", "colored Jones polynomial");
    auto* cj = app.add_subcommand("colored-jones", "colored Jones polynomials over a range of colors");
    for (auto* s : {jo, cj}) {
        with_input(s);
        with_k(s);
        s->add_option("--n", c.n, "color or color range");
        s->add_flag("--reduced", c.reduced, "divide by the colored unknot");
    }
    auto* kh = app.add_subcommand("kh", "Khovanov homology");
    with_input(kh);
    with_k(kh);
    auto* st = app.add_subcommand("stabilize", "first aligned degree where consecutive Kh(L_k) differ");
    with_input(st);
    st->add_option("--template", c.template_path, "twist template file");
    with_k(st);
    auto* rk = app.add_subcommand("reduce-ktg", "reduce a trivalent graph to theta networks");
    with_input(rk);
    auto* as = app.add_subcommand("asymptote", "growth rates at roots of unity");
    with_input(as);
    as->add_option("--template", c.template_path, "twist template file");
    as->add_option("--n", c.n, "even colors");
    as->add_option("--root", c.root, "root convention")->check(CLI::IsMember({"color", "dimension"}));
    as->add_option("--exact-up-to", c.exact_up_to, "largest n for the exact closed form");
    as->add_flag("--octahedron", c.octahedron, "the all-n tetrahedron alone");
    auto* fc = app.add_subcommand("fusion-check", "fusion expansion against the direct bracket");
    with_input(fc);
    fc->add_option("--template", c.template_path, "twist template file");
    fc->add_option("--n", c.n, "color");
    with_k(fc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (c.digits < 15) {
        std::cerr << "digits must be at least 15\n";
        return 2;
    }

    try {
        set_bracket_threads(c.threads);
        PrecisionGuard guard(c.digits + 10);
        if (br->parsed()) return cmd_bracket(c);
        if (jo->parsed()) return cmd_jones(c, false);
        if (cj->parsed()) return cmd_jones(c, true);
        if (kh->parsed()) return cmd_kh(c);
        if (st->parsed()) return cmd_stabilize(c);
        if (rk->parsed()) return cmd_reduce_ktg(c);
        if (as->parsed()) return cmd_asymptote(c);
        if (fc->parsed()) return cmd_fusion_check(c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.is_parse_error() ? 2 : 1;
    }
    return 2;
}
