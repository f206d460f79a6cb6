// Command-line front end: classify the Ehrhart rings of the stable-set
// polytope variants of a graph, verify the classifications against the
// brute-force trace oracles, and tabulate Hilbert data or polytope vertices.
//
// Exit codes: 0 success, 2 parse or flag error, 3 verdict withheld or desk
// scale exceeded, 4 classifier/oracle disagreement (a bug signal).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stabring/classify.hpp"
#include "stabring/json_io.hpp"
#include "stabring/oracle.hpp"

using namespace stabring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitWithheld = 3;
constexpr int kExitDisagreement = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

std::vector<Variant> parse_variants(const std::string& name) {
    if (name == "hstab") return {Variant::HSTAB};
    if (name == "qstab") return {Variant::QSTAB};
    if (name == "tstab") return {Variant::TSTAB};
    if (name == "all") return {Variant::HSTAB, Variant::QSTAB, Variant::TSTAB};
    throw CLI::ValidationError("--variant", "expected hstab|qstab|tstab|all");
}

std::pair<long long, long long> parse_window(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw CLI::ValidationError("--window", "expected a..b, e.g. 1..3");
    long long lo = std::stoll(s.substr(0, dots));
    long long hi = std::stoll(s.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--window", "need 1 <= a <= b");
    return {lo, hi};
}

std::string gorenstein_text(const GorensteinVerdict& v) {
    if (v.value) return "true";
    return "false (" + v.reason + ")";
}

std::string analyze_text(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "h-perfect: " << h_perfect_name(rep.h_status) << "\n";
    os << "components: " << rep.spectrum.components.size() << ", clique classes I = {";
    for (size_t i = 0; i < rep.spectrum.I.size(); ++i)
        os << (i ? "," : "") << rep.spectrum.I[i];
    os << "}, u = " << rep.spectrum.u() << "\n";
    for (const auto& vr : rep.variants) {
        os << "[" << variant_name(vr.variant) << "]\n";
        os << "  gorenstein: " << gorenstein_text(vr.gorenstein) << "\n";
        os << "  gps: " << gps_verdict_name(vr.gps.verdict);
        if (!vr.gps.note.empty()) os << " (" << vr.gps.note << ")";
        os << "\n";
        os << "  a-invariant: " << vr.a_invariant << "\n";
        if (vr.variant == Variant::HSTAB) {
            os << "  nearly: " << nearly_verdict_name(rep.nearly.verdict);
            if (!rep.nearly.note.empty()) os << " (" << rep.nearly.note << ")";
            os << "\n";
        }
    }
    return os.str();
}

// The ring enumerations are exact and exhaustive; refuse graphs too large
// to finish at a desk rather than hang.
constexpr int kEnumerationVertexCap = 20;

void check_enumeration_scale(const Graph& g) {
    if (g.n > kEnumerationVertexCap)
        throw desk_scale_error("graph has " + std::to_string(g.n) +
                               " vertices; exact ring enumeration is capped at " +
                               std::to_string(kEnumerationVertexCap));
}

int cmd_analyze(const std::string& input, const std::string& variant_name_,
                bool assume_h_perfect, int hp_bound, const std::string& format,
                const std::string& out_path) {
    auto parsed = parse_graph(read_file(input));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    check_enumeration_scale(parsed.graph);
    auto rep = analyze(parsed.graph, parse_variants(variant_name_), assume_h_perfect, hp_bound);
    if (format == "json")
        write_output(out_path, to_json(rep).dump(2) + "\n");
    else
        write_output(out_path, analyze_text(rep));
    if (rep.any_withheld()) {
        std::cerr << "note: some verdicts withheld (h-perfectness "
                  << h_perfect_name(rep.h_status)
                  << "); pass --assume-h-perfect to lift an undecided status\n";
        return kExitWithheld;
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, long long max_degree, const std::string& window,
               bool assume_h_perfect, unsigned seed, const std::string& format,
               const std::string& out_path) {
    auto parsed = parse_graph(read_file(input));
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    check_enumeration_scale(parsed.graph);
    CrossCheckBudget budget;
    budget.nearly_n_max = max_degree;
    budget.assume_h_perfect = assume_h_perfect;
    budget.seed = seed;
    if (!window.empty()) std::tie(budget.gps_lo, budget.gps_hi) = parse_window(window);
    auto rep = cross_check(parsed.graph, budget);
    if (format == "json") {
        write_output(out_path, to_json(rep).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "h-perfect: " << h_perfect_name(rep.h_status) << "\n";
        for (const auto& e : rep.entries) {
            os << (e.agree ? "  agree " : "  DISAGREE ") << e.claim
               << ": classifier=" << e.classifier << " oracle=" << e.oracle;
            if (!e.detail.empty()) os << " (" << e.detail << ")";
            os << "\n";
        }
        os << (rep.all_agree() ? "all claims agree\n" : "DISAGREEMENT FOUND\n");
        write_output(out_path, os.str());
    }
    return rep.all_agree() ? kExitOk : kExitDisagreement;
}

int cmd_hilbert(const std::string& input, long long n_max, const std::string& variant_name_,
                const std::string& format, const std::string& out_path) {
    auto parsed = parse_graph(read_file(input));
    check_enumeration_scale(parsed.graph);
    auto variants = parse_variants(variant_name_);
    ojson jout;
    jout["schemaVersion"] = kSchemaVersion;
    std::ostringstream os;
    for (Variant v : variants) {
        auto sys = VariantSystem::build(parsed.graph, v);
        auto h = hilbert_function(sys, n_max);
        std::vector<long long> omega;
        for (long long N = 0; N <= n_max; ++N) omega.push_back(slice_count(sys, 1, N));
        if (format == "json") {
            ojson e;
            e["variant"] = variant_name(v);
            e["H"] = h;
            e["canonicalSlice"] = omega;
            jout["tables"].push_back(e);
        } else {
            os << "[" << variant_name(v) << "]\n";
            os << "  H: ";
            for (size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
            os << "\n  canonical: ";
            for (size_t i = 0; i < omega.size(); ++i) os << (i ? "," : "") << omega[i];
            os << "\n";
        }
    }
    write_output(out_path, format == "json" ? jout.dump(2) + "\n" : os.str());
    return kExitOk;
}

int cmd_polytope(const std::string& input, const std::string& variant_name_, bool hrep,
                 int max_dim, const std::string& format, const std::string& out_path) {
    auto parsed = parse_graph(read_file(input));
    auto variants = parse_variants(variant_name_);
    ojson jout;
    jout["schemaVersion"] = kSchemaVersion;
    std::ostringstream os;
    for (Variant v : variants) {
        auto p = build_polytope(parsed.graph, v);
        if (format == "json") {
            ojson e;
            e["variant"] = variant_name(v);
            if (hrep) {
                ojson rows = ojson::array();
                for (const auto& q : p.ineqs) {
                    ojson r;
                    std::vector<std::string> coeffs;
                    for (const auto& c : q.a) coeffs.push_back(c.str());
                    r["a"] = coeffs;
                    r["b"] = q.b.str();
                    r["tag"] = provenance_name(q.tag);
                    rows.push_back(r);
                }
                e["inequalities"] = rows;
            } else {
                auto vs = enumerate_vertices(p, max_dim);
                ojson pts = ojson::array();
                for (size_t i = 0; i < vs.points.size(); ++i) {
                    ojson r;
                    std::vector<std::string> coords;
                    for (const auto& c : vs.points[i]) coords.push_back(c.str());
                    r["point"] = coords;
                    r["integral"] = (bool)vs.integral[i];
                    pts.push_back(r);
                }
                e["vertices"] = pts;
                e["integralCount"] = (long long)(vs.points.size() - vs.fractional_count());
                e["fractionalCount"] = vs.fractional_count();
            }
            jout["polytopes"].push_back(e);
        } else {
            os << "[" << variant_name(v) << "]\n";
            if (hrep) {
                os << export_hrep(p);
            } else {
                auto vs = enumerate_vertices(p, max_dim);
                os << export_vertices(vs);
                os << "total " << vs.points.size() << " vertices, "
                   << vs.fractional_count() << " fractional\n";
            }
        }
    }
    write_output(out_path, format == "json" ? jout.dump(2) + "\n" : os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gorenstein / nearly-Gorenstein classification of Ehrhart rings of "
                 "stable-set polytope variants, with exact verification oracles"};
    app.require_subcommand(1);

    std::string input, out_path, window;
    std::string variant = "all", format = "text";
    bool assume_h_perfect = false, hrep = false;
    long long max_degree = 0, n_max = 5;
    int hp_bound = 12;
    unsigned seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "graph file (edge list or JSON)")->required();
        sub->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", out_path, "write the report to a file");
    };

    auto* a = app.add_subcommand("analyze", "classify the rings of a graph");
    add_common(a);
    a->add_option("--variant", variant, "hstab|qstab|tstab|all");
    a->add_flag("--assume-h-perfect", assume_h_perfect,
                "treat an undecided h-perfectness as given");
    a->add_option("--hp-bound", hp_bound, "per-component vertex-enumeration bound");

    auto* v = app.add_subcommand("verify", "run every applicable oracle against the classifier");
    add_common(v);
    v->add_option("--max-degree", max_degree, "generator degree bound (default: vertex count)")
        ->check(CLI::PositiveNumber);
    v->add_option("--window", window, "trace sweep degree window a..b");
    v->add_flag("--assume-h-perfect", assume_h_perfect,
                "treat an undecided h-perfectness as given");
    v->add_option("--seed", seed, "seed for the sampled spot checks");

    auto* h = app.add_subcommand("hilbert", "tabulate ring and canonical-slice sizes");
    add_common(h);
    h->add_option("-n,--max", n_max, "top degree of the table")->check(CLI::NonNegativeNumber);
    h->add_option("--variant", variant, "hstab|qstab|tstab|all");

    auto* p = app.add_subcommand("polytope", "list vertices or the H-representation");
    add_common(p);
    p->add_option("--variant", variant, "hstab|qstab|tstab|all");
    p->add_flag("--hrep", hrep, "print the inequality system instead of vertices");
    p->add_option("--bound", hp_bound, "vertex-enumeration dimension bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (a->parsed())
            return cmd_analyze(input, variant, assume_h_perfect, hp_bound, format, out_path);
        if (v->parsed())
            return cmd_verify(input, max_degree, window, assume_h_perfect, seed, format, out_path);
        if (h->parsed()) return cmd_hilbert(input, n_max, variant, format, out_path);
        if (p->parsed()) return cmd_polytope(input, variant, hrep, hp_bound, format, out_path);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const desk_scale_error& e) {
        std::cerr << "undecided at desk scale: " << e.what() << "\n";
        return kExitWithheld;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency (bug): " << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
