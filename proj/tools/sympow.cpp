#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympow/germ.hpp"
#include "sympow/invariants.hpp"
#include "sympow/partition.hpp"
#include "sympow/poset.hpp"
#include "sympow/serialize.hpp"
#include "sympow/strata.hpp"
#include "sympow/verify.hpp"

namespace {

using sympow::Json;
using sympow::Partition;

// exit codes: 0 ok, 1 verification failure, 2 usage or domain error
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

Partition parse_partition(const std::vector<int>& parts, const char* flag) {
    if (parts.empty())
        throw std::invalid_argument(std::string(flag) + ": expected comma-separated parts");
    return Partition(parts);  // normalizes any input order
}

// minimal left-aligned text table
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string normalization_string(const sympow::MultiplicityForm& mf) {
    std::string s;
    for (std::size_t i = 0; i < mf.classes().size(); ++i) {
        if (i) s += " x ";
        s += "S^" + std::to_string(mf.classes()[i].multiplicity) + "Y";
    }
    return s;
}

std::string germ_factor_name(int multiplicity) {
    return multiplicity == 1 ? "A^n" : "X_" + std::to_string(multiplicity) + "^g";
}

// "X_2^g x (A^n)^2": equal factors grouped with exponents
std::string germ_model_string(const sympow::GermModel& g) {
    std::string s;
    const auto& fs = g.factors();
    for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        if (!s.empty()) s += " x ";
        const std::string name = germ_factor_name(fs[i]);
        if (j - i > 1)
            s += "(" + name + ")^" + std::to_string(j - i);
        else
            s += name;
        i = j;
    }
    return s;
}

std::string germ_product_string(const sympow::GermStratumProduct& p) {
    std::string s;
    for (std::size_t i = 0; i < p.factors().size(); ++i) {
        if (i) s += " x ";
        const auto& f = p.factors()[i];
        s += "W^g(" + f.block.to_string() + "; " + std::to_string(f.ambient) + ")";
    }
    return s;
}

int cmd_strata(int m, int n, const std::string& format, const std::string& out) {
    const auto parts = sympow::enumerate_partitions(m);
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& p : parts) rows.push_back(to_json(sympow::stratum(m, n, p)));
        emit(dump(rows), out);
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"pi", "|pi|", "dim", "codim", "normalization", "tangent_dim",
                    "germ_singular"});
    for (const auto& p : parts) {
        const auto s = sympow::stratum(m, n, p);
        rows.push_back({p.to_string(), std::to_string(p.part_count()),
                        std::to_string(s.dimension), std::to_string(s.codimension),
                        normalization_string(s.normalization_factors),
                        s.tangent_dimension.str(),
                        sympow::is_germ_singular(p) ? "yes" : "no"});
    }
    emit(render_table(rows), out);
    return kExitOk;
}

int cmd_poset(int m, const std::string& format, int jobs, const std::string& out) {
    const auto poset = sympow::build_poset(m, jobs);
    if (format == "dot") {
        emit(to_dot(poset), out);
        return kExitOk;
    }
    if (format == "json") {
        emit(dump(to_json(poset)), out);
        return kExitOk;
    }
    std::string text = "partitions of " + std::to_string(m) + ": " +
                       std::to_string(poset.nodes().size()) + " nodes, " +
                       std::to_string(poset.hasse_edges().size()) + " cover relations\n";
    text += "covers (finer -> coarser):\n";
    for (const auto& e : poset.hasse_edges())
        text += "  " + poset.nodes()[static_cast<std::size_t>(e.lower)].to_string() +
                " -> " + poset.nodes()[static_cast<std::size_t>(e.upper)].to_string() +
                "\n";
    emit(text, out);
    return kExitOk;
}

int cmd_singular_chain(int m, int n, const std::string& format, const std::string& out) {
    std::vector<sympow::ClosedStratifiedSet> chain;
    for (int t = 0; t <= m; ++t) chain.push_back(sympow::iterated_singular_locus(m, n, t));

    if (format == "json") {
        Json rows = Json::array();
        for (int t = 0; t <= m; ++t) {
            const auto& set = chain[static_cast<std::size_t>(t)];
            Json strata = Json::array();
            for (const auto& p : set.maximal_strata()) strata.push_back(to_json(p));
            rows.push_back(Json{{"t", t},
                                {"strata", std::move(strata)},
                                {"generic_dim",
                                 set.empty() ? Json(nullptr) : Json(set.generic_dimension())},
                                {"smooth_pieces", set.maximal_strata().size()}});
        }
        emit(dump(Json{{"m", m}, {"n", n}, {"chain", std::move(rows)}}), out);
        return kExitOk;
    }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"t", "strata", "generic_dim", "smooth_pieces"});
    for (int t = 0; t <= m; ++t) {
        const auto& set = chain[static_cast<std::size_t>(t)];
        std::string strata;
        for (std::size_t i = 0; i < set.maximal_strata().size(); ++i) {
            if (i) strata += ", ";
            strata += set.maximal_strata()[i].to_string();
        }
        if (strata.empty()) strata = "(empty)";
        rows.push_back({std::to_string(t), strata,
                        set.empty() ? "-" : std::to_string(set.generic_dimension()),
                        std::to_string(set.maximal_strata().size())});
    }
    emit(render_table(rows), out);
    return kExitOk;
}

int cmd_germ(int m, int n, const std::vector<int>& type_parts,
             const std::vector<int>& target_parts, const std::string& format,
             const std::string& out) {
    const Partition type = parse_partition(type_parts, "--type");
    const auto model = sympow::local_model(m, n, type);

    std::vector<sympow::GermStratumProduct> components;
    bool has_target = !target_parts.empty();
    Partition target = type;
    if (has_target) {
        target = parse_partition(target_parts, "--target");
        components = sympow::preimage_decomposition(m, n, type, target);
    }

    if (format == "json") {
        Json j{{"m", m}, {"n", n}, {"type", to_json(type)}, {"model", to_json(model)}};
        if (has_target) {
            j["target"] = to_json(target);
            Json comps = Json::array();
            for (const auto& c : components) comps.push_back(to_json(c));
            j["components"] = std::move(comps);
        }
        emit(dump(j), out);
        return kExitOk;
    }

    std::string text;
    text += "point type: " + type.to_string() + "  (m=" + std::to_string(m) +
            ", n=" + std::to_string(n) + ")\n";
    text += "local model: " + germ_model_string(model) + "\n";
    text += "model dimension: " + std::to_string(model.dimension()) + "\n";
    text += "singular point: " + std::string(sympow::is_germ_singular(type) ? "yes" : "no") +
            "\n";
    if (has_target) {
        text += "target stratum: " + target.to_string() + "\n";
        text += "preimage components: " + std::to_string(components.size()) + "\n";
        for (std::size_t i = 0; i < components.size(); ++i)
            text += "  " + std::to_string(i + 1) + ": " +
                    germ_product_string(components[i]) + "  (dim " +
                    std::to_string(components[i].dimension()) + ")\n";
    }
    emit(text, out);
    return kExitOk;
}

int cmd_invariants(int m, int n, const std::string& format, const std::string& out) {
    const auto rep = sympow::invariant_report(m, n);
    if (format == "json") {
        emit(dump(to_json(rep)), out);
        return kExitOk;
    }
    std::string text;
    text += "m: " + std::to_string(rep.m) + "\n";
    text += "n: " + std::to_string(rep.n) + "\n";
    text += "discrepancy: " + sympow::fraction_string(rep.discrep) + "\n";
    text += "canonical: " + std::string(rep.sclass.canonical ? "yes" : "no") + "\n";
    text += "terminal: " + std::string(rep.sclass.terminal ? "yes" : "no") + "\n";
    text += "gorenstein: " + std::string(rep.gorenstein ? "yes" : "no") + "\n";
    text += "Pic(X): " + rep.groups.pic.to_string() + "\n";
    text += "Cl(X): " + rep.groups.cl.to_string() + "\n";
    text += "K_X: (" + rep.groups.canonical_class.pic_component + ", " +
            rep.groups.canonical_class.ns_component + ", " +
            std::to_string(rep.groups.canonical_class.torsion_bit) + ")\n";
    text += "hypotheses: " + rep.groups.hypotheses + "\n";
    emit(text, out);
    return kExitOk;
}

int cmd_recover(const std::vector<long long>& dims, const std::string& format,
                const std::string& out) {
    const auto rec = sympow::recover_parameters(dims);
    if (format == "json") {
        emit(dump(Json{{"m", rec.m}, {"n", rec.n}}), out);
        return kExitOk;
    }
    emit("m: " + std::to_string(rec.m) + "\nn: " + std::to_string(rec.n) + "\n", out);
    return kExitOk;
}

int cmd_divisor_strata(int m, const std::string& format, const std::string& out) {
    const auto labels = sympow::enumerate_divisor_strata(m);
    if (format == "json") {
        Json rows = Json::array();
        for (const auto& label : labels) rows.push_back(to_json(label));
        emit(dump(Json{{"m", m}, {"strata", std::move(rows)}}), out);
        return kExitOk;
    }
    std::string text = "divisor strata of degree " + std::to_string(m) + ": " +
                       std::to_string(labels.size()) + "\n";
    for (const auto& label : labels) {
        std::string line;
        for (const auto& c : label)
            line += "(" + std::to_string(c.multiplicity) + "," +
                    std::to_string(c.degree) + ") ";
        if (!line.empty()) line.pop_back();
        text += "  " + line + "\n";
    }
    emit(text, out);
    return kExitOk;
}

int cmd_verify(int max_m, int max_n, int jobs, bool inject_fault,
               const std::string& out) {
    sympow::verify::Options opts;
    opts.max_m = max_m;
    opts.max_n = max_n;
    opts.jobs = jobs;
    opts.inject_chain_fault = inject_fault;
    const auto report = sympow::verify::run(opts);

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"suite", "scope", "checks", "result"});
    for (const auto& s : report.suites) {
        std::string result = s.passed() ? "pass" : "FAIL";
        if (s.vacuous()) result += " (vacuous)";
        rows.push_back({s.name, s.scope, std::to_string(s.checks), result});
        std::cerr << "# " << s.name << ": " << s.seconds << "s\n";
    }
    std::string text = "verify: max-m=" + std::to_string(max_m) +
                       " max-n=" + std::to_string(max_n) + "\n";
    text += render_table(rows);
    if (report.all_passed()) {
        text += "all " + std::to_string(report.suites.size()) + " suites passed (" +
                std::to_string(report.total_checks()) + " checks)\n";
    } else {
        for (const auto& s : report.suites) {
            if (s.passed()) continue;
            text += "failures in " + s.name + ":\n";
            for (const auto& f : s.failures) text += "  - " + f + "\n";
            if (s.suppressed)
                text += "  - (" + std::to_string(s.suppressed) + " more suppressed)\n";
        }
    }
    emit(text, out);
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "sympow: stratification, local models, and numerical invariants of\n"
        "symmetric powers of smooth n-dimensional varieties, computed from the\n"
        "pair of integers (m, n)"};
    app.require_subcommand(1);

    int m = 2;
    int n = 2;
    int jobs = 1;
    int max_m = 8;
    int max_n = 6;
    bool inject_fault = false;
    std::string format = "table";
    std::string out_path;
    std::vector<int> type_parts;
    std::vector<int> target_parts;
    std::vector<long long> dims;

    const auto add_format = [&](CLI::App* cmd, bool allow_dot) {
        auto* opt = cmd->add_option("--format", format, "output format")
                        ->capture_default_str();
        if (allow_dot)
            opt->check(CLI::IsMember({"table", "json", "dot"}));
        else
            opt->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    auto* strata = app.add_subcommand("strata", "table of multiplicity strata");
    strata->add_option("--m", m, "cycle degree")->required();
    strata->add_option("--n", n, "ambient smooth dimension")->required();
    add_format(strata, false);

    auto* poset = app.add_subcommand("poset", "refinement order on partitions of m");
    poset->add_option("--m", m, "cycle degree")->required();
    poset->add_option("--jobs", jobs, "worker threads for pairwise order tests")
        ->capture_default_str();
    add_format(poset, true);

    auto* chain = app.add_subcommand("singular-chain", "iterated singular loci");
    chain->add_option("--m", m, "cycle degree")->required();
    chain->add_option("--n", n, "ambient smooth dimension")->required();
    add_format(chain, false);

    auto* germ = app.add_subcommand("germ", "local model at a point of given type");
    germ->add_option("--m", m, "cycle degree")->required();
    germ->add_option("--n", n, "ambient smooth dimension")->required();
    germ->add_option("--type", type_parts, "point multiplicity type, comma-separated")
        ->required()
        ->delimiter(',');
    germ->add_option("--target", target_parts,
                     "stratum type whose preimage to decompose, comma-separated")
        ->delimiter(',');
    add_format(germ, false);

    auto* invariants = app.add_subcommand("invariants",
                                          "discrepancy, singularity class, class groups");
    invariants->add_option("--m", m, "cycle degree")->required();
    invariants->add_option("--n", n, "ambient smooth dimension")->required();
    add_format(invariants, false);

    auto* recover = app.add_subcommand("recover",
                                       "recover (m, n) from a singular dimension chain");
    recover->add_option("--dims", dims, "dim Sing^0, dim Sing^1, ..., comma-separated")
        ->required()
        ->delimiter(',');
    add_format(recover, false);

    auto* divisor = app.add_subcommand("divisor-strata",
                                       "weighted divisor stratum labels of degree m");
    divisor->add_option("--m", m, "total degree")->required();
    add_format(divisor, false);

    auto* verify = app.add_subcommand("verify", "run all oracle cross-checks");
    verify->add_option("--max-m", max_m, "largest cycle degree to test")
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "largest ambient dimension to test")
        ->capture_default_str();
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test harness hook
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (strata->parsed()) return cmd_strata(m, n, format, out_path);
        if (poset->parsed()) return cmd_poset(m, format, jobs, out_path);
        if (chain->parsed()) return cmd_singular_chain(m, n, format, out_path);
        if (germ->parsed())
            return cmd_germ(m, n, type_parts, target_parts, format, out_path);
        if (invariants->parsed()) return cmd_invariants(m, n, format, out_path);
        if (recover->parsed()) return cmd_recover(dims, format, out_path);
        if (divisor->parsed()) return cmd_divisor_strata(m, format, out_path);
        if (verify->parsed())
            return cmd_verify(max_m, max_n, jobs, inject_fault, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
