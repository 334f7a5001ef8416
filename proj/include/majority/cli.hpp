#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "digraph.hpp"
#include "io.hpp"
#include "logic/model.hpp"
#include "logic/parser.hpp"
#include "logic/reduction.hpp"
#include "logic/solver.hpp"
#include "rational_construct.hpp"
#include "real_construct.hpp"
#include "zonemap.hpp"

namespace majority::cli {

// Exit codes.
inline constexpr int ok = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;
inline constexpr int resource_limit = 3;

namespace detail {

using io::json;

inline std::string cycle_text(const std::vector<std::string>& cycle) {
    std::string s;
    for (std::size_t k = 0; k < cycle.size(); ++k) s += (k ? " -> " : "") + cycle[k];
    return s;
}

inline std::vector<std::string> cycle_names(const io::named_digraph& g, const std::vector<int>& cycle) {
    std::vector<std::string> out;
    for (int v : cycle) out.push_back(g.name(v));
    return out;
}

inline rational parse_threshold(const std::string& text, const char* what) {
    rational r = parse_fraction(text);
    if (r <= 0 || r >= 1) {
        throw error(error_code::invalid_alpha, std::string(what) + " must lie strictly between 0 and 1, got " + text);
    }
    return r;
}

inline std::string model_text(const logic::logic_model& m) {
    std::string s = "universe: " + std::to_string(m.universe_size) + " points\n";
    for (const auto& [name, points] : m.interp) {
        s += "[" + name + "] = {";
        for (std::size_t k = 0; k < points.size(); ++k) s += (k ? "," : "") + std::to_string(points[k]);
        s += "}\n";
    }
    return s;
}

inline json model_json(const logic::logic_model& m) {
    json doc;
    doc["universe_size"] = m.universe_size;
    json interp = json::object();
    for (const auto& [name, points] : m.interp) interp[name] = points;
    doc["interpretation"] = interp;
    return doc;
}

inline json assignment_json(const logic::atom_assignment& a) {
    json doc = json::object();
    for (const auto& [key, value] : a) doc["M(" + key.x + "," + key.y + ")"] = value;
    return doc;
}

struct context {
    std::ostream& out;
    std::ostream& err;
    bool as_json = false;
};

inline int cmd_check(context& ctx, const std::string& path) {
    auto g = io::parse_digraph(io::read_file(path));
    auto cycle = find_one_way_cycle(g.graph);
    if (ctx.as_json) {
        json doc;
        doc["verdict"] = cycle ? "not-representable" : "representable";
        doc["vertices"] = g.names;
        if (cycle) doc["cycle"] = cycle_names(g, *cycle);
        ctx.out << doc.dump(2) << "\n";
    } else if (cycle) {
        ctx.out << "not-representable: " << cycle_text(cycle_names(g, *cycle)) << "\n";
    } else {
        ctx.out << "representable\n";
    }
    return cycle ? negative : ok;
}

inline int cmd_realize(context& ctx, const std::string& path, const std::string& alpha_text,
                       const std::string& method, const std::string& output) {
    const rational alpha = parse_threshold(alpha_text, "alpha");
    auto g = io::parse_digraph(io::read_file(path));
    if (auto cycle = find_one_way_cycle(g.graph)) {
        ctx.err << "not-representable: " << cycle_text(cycle_names(g, *cycle)) << "\n";
        return negative;
    }
    io::witness w;
    w.alpha = alpha;
    w.method = method;
    w.names = g.names;
    if (method == "rational") {
        w.zones = realize_rational(g.graph, numerator_of(alpha), denominator_of(alpha));
    } else {
        w.zones = realize_real(g.graph, alpha);
    }
    if (!(induced_digraph(w.zones, alpha) == g.graph)) {
        throw std::logic_error("constructed witness failed self-verification");
    }
    auto doc = io::witness_to_json(w);
    if (output.empty()) {
        ctx.out << doc.dump(2) << "\n";
        return ok;
    }
    std::ofstream file(output);
    if (!file) throw error(error_code::parse_error, "cannot write '" + output + "'");
    file << doc.dump(2) << "\n";
    if (ctx.as_json) {
        json summary;
        summary["output"] = output;
        summary["derived"] = doc["derived"];
        ctx.out << summary.dump(2) << "\n";
    } else {
        ctx.out << "wrote " << output << ": " << total_points(w.zones).str() << " points";
        for (int i = 1; i <= w.zones.n(); ++i) ctx.out << (i == 1 ? "; |A_" : ", |A_") << g.name(i) << "|=" << set_size(w.zones, i).str();
        ctx.out << "\n";
    }
    return ok;
}

inline int cmd_verify(context& ctx, const std::string& witness_path, const std::string& target_path,
                      const std::optional<std::string>& beta_text) {
    auto w = io::parse_witness(io::read_file(witness_path));
    auto target = io::parse_digraph(io::read_file(target_path));
    if (target.graph.n() != w.zones.n()) {
        throw error(error_code::parse_error, "witness has n=" + std::to_string(w.zones.n()) +
                                                 " but target has n=" + std::to_string(target.graph.n()));
    }
    digraph induced = beta_text
        ? induced_interval_digraph(w.zones, w.alpha, parse_threshold(*beta_text, "beta"))
        : induced_digraph(w.zones, w.alpha);
    std::vector<std::string> missing, extra;
    for (int u = 1; u <= induced.n(); ++u) {
        for (int v = 1; v <= induced.n(); ++v) {
            if (u == v) continue;
            std::string e = target.name(u) + " -> " + target.name(v);
            if (target.graph.has_edge(u, v) && !induced.has_edge(u, v)) missing.push_back(e);
            if (!target.graph.has_edge(u, v) && induced.has_edge(u, v)) extra.push_back(e);
        }
    }
    const bool match = missing.empty() && extra.empty();
    if (ctx.as_json) {
        json doc;
        doc["verdict"] = match ? "match" : "mismatch";
        doc["missing"] = missing;
        doc["extra"] = extra;
        ctx.out << doc.dump(2) << "\n";
    } else {
        ctx.out << (match ? "match" : "mismatch") << "\n";
        for (const auto& e : missing) ctx.out << "missing: " << e << "\n";
        for (const auto& e : extra) ctx.out << "extra: " << e << "\n";
    }
    return match ? ok : negative;
}

inline int report_sat(context& ctx, const logic::sentence& s, const logic::solver_options& options, bool model_only) {
    auto r = logic::decide_sat(s, options);
    if (ctx.as_json) {
        json doc;
        doc["verdict"] = r.satisfiable ? "SAT" : "UNSAT";
        if (r.satisfiable) {
            doc["model"] = model_json(*r.model);
            doc["atoms"] = assignment_json(r.assignment);
        }
        ctx.out << doc.dump(2) << "\n";
    } else if (!r.satisfiable) {
        ctx.out << "UNSAT\n";
    } else {
        if (!model_only) ctx.out << "SAT\n";
        ctx.out << model_text(*r.model);
    }
    return r.satisfiable ? ok : negative;
}

inline std::vector<logic::sentence> read_premises(const std::vector<std::string>& inline_premises,
                                                  const std::string& path) {
    std::vector<logic::sentence> out;
    for (const auto& p : inline_premises) out.push_back(logic::parse_sentence(p));
    if (!path.empty()) {
        std::istringstream lines(io::read_file(path));
        std::string line;
        while (std::getline(lines, line)) {
            line = line.substr(0, line.find('#'));
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out.push_back(logic::parse_sentence(line));
        }
    }
    return out;
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Proportionality digraphs: characterize, construct and verify set representations; "
                 "decide the boolean logic of \"most X are Y\"."};
    app.require_subcommand(1);
    detail::context ctx{out, err};
    app.add_flag("--json", ctx.as_json, "Machine-readable output");

    std::string digraph_path, witness_path, alpha = "1/2", method = "rational", output, sentence_text,
                premises_path, dimacs_path;
    std::optional<std::string> beta;
    std::vector<std::string> premises;
    std::size_t max_atoms = logic::solver_options{}.max_atoms;

    auto* check = app.add_subcommand("check", "Decide whether a digraph has a set representation");
    check->add_option("digraph", digraph_path, "Digraph file")->required();

    auto* realize = app.add_subcommand("realize", "Construct a witness zone map for a digraph");
    realize->add_option("digraph", digraph_path, "Digraph file")->required();
    realize->add_option("--alpha", alpha, "Threshold as a fraction p/q")->capture_default_str();
    realize->add_option("--method", method, "Construction")->check(CLI::IsMember({"rational", "real"}))->capture_default_str();
    realize->add_option("-o,--output", output, "Write the witness here instead of standard output");

    auto* verify = app.add_subcommand("verify", "Check that a witness induces a target digraph");
    verify->add_option("witness", witness_path, "Witness file")->required();
    verify->add_option("digraph", digraph_path, "Target digraph file")->required();
    verify->add_option("--beta", beta, "Upper threshold for the interval condition");

    auto* logic_cmd = app.add_subcommand("logic", "Boolean logic of \"most X are Y\"");
    logic_cmd->require_subcommand(1);
    auto* sat = logic_cmd->add_subcommand("sat", "Satisfiability, with a model when satisfiable");
    sat->add_option("sentence", sentence_text, "Sentence")->required();
    auto* model = logic_cmd->add_subcommand("model", "Print a model of a sentence");
    model->add_option("sentence", sentence_text, "Sentence")->required();
    auto* entail = logic_cmd->add_subcommand("entails", "Decide whether premises entail a conclusion");
    entail->add_option("conclusion", sentence_text, "Conclusion")->required();
    entail->add_option("--premises", premises_path, "File with one premise per line");
    entail->add_option("-p,--premise", premises, "Inline premise (repeatable)");
    auto* gen3sat = logic_cmd->add_subcommand("gen3sat", "Translate a 3-CNF instance into a sentence");
    gen3sat->add_option("cnf", dimacs_path, "DIMACS-style 3-CNF file")->required();
    for (auto* sub : {sat, model, entail}) {
        sub->add_option("--max-atoms", max_atoms, "Atom limit")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return input_error;
    }

    try {
        if (*check) return detail::cmd_check(ctx, digraph_path);
        if (*realize) return detail::cmd_realize(ctx, digraph_path, alpha, method, output);
        if (*verify) return detail::cmd_verify(ctx, witness_path, digraph_path, beta);
        logic::solver_options options{max_atoms};
        if (*sat) return detail::report_sat(ctx, logic::parse_sentence(sentence_text), options, false);
        if (*model) return detail::report_sat(ctx, logic::parse_sentence(sentence_text), options, true);
        if (*entail) {
            auto conclusion = logic::parse_sentence(sentence_text);
            auto all = detail::read_premises(premises, premises_path);
            bool entailed = logic::entails(all, conclusion, options);
            if (ctx.as_json) {
                detail::json doc;
                doc["verdict"] = entailed ? "ENTAILED" : "NOT-ENTAILED";
                ctx.out << doc.dump(2) << "\n";
            } else {
                ctx.out << (entailed ? "ENTAILED" : "NOT-ENTAILED") << "\n";
            }
            return entailed ? ok : negative;
        }
        if (*gen3sat) {
            auto s = logic::reduce_3sat(logic::parse_dimacs(io::read_file(dimacs_path)));
            if (ctx.as_json) {
                detail::json doc;
                doc["sentence"] = logic::to_string(s);
                ctx.out << doc.dump(2) << "\n";
            } else {
                ctx.out << logic::to_string(s) << "\n";
            }
            return ok;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == error_code::resource_limit ? resource_limit : input_error;
    }
    return input_error;
}

}  // namespace majority::cli
