#include "opradius/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "opradius/catalog.hpp"
#include "opradius/eigen.hpp"
#include "opradius/harness.hpp"
#include "opradius/io.hpp"
#include "opradius/radii.hpp"

namespace opradius {

namespace {

std::string fmt(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.12f", v);
    return b;
}

nlohmann::ordered_json witness_json(const QuantityResult& r) {
    nlohmann::ordered_json w;
    if (r.method == Method::theta_sweep) {
        w["theta"] = r.theta;
        return w;
    }
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& z : r.witness) entries.push_back({z.real(), z.imag()});
    w[r.method == Method::lambda_ball_sweep ? "lambda" : "vector"] = entries;
    return w;
}

nlohmann::ordered_json report_to_json(const BoundReport& rep) {
    nlohmann::ordered_json doc;
    doc["relation"] = rep.relation_id;
    doc["status"] = status_name(rep.status);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [name, value] : rep.term_values) terms.push_back({{"name", name}, {"value", value}});
    doc["terms"] = terms;
    doc["slack"] = rep.slack;
    doc["tolerance"] = rep.tolerance_used;
    doc["inputs_digest"] = rep.inputs_digest;
    return doc;
}

void print_report(std::ostream& out, const BoundReport& rep, bool as_json) {
    if (as_json) {
        out << report_to_json(rep).dump(2) << '\n';
        return;
    }
    out << rep.relation_id << " [" << status_name(rep.status) << "]\n";
    for (const auto& [name, value] : rep.term_values) out << "  " << name << " = " << fmt(value) << '\n';
    out << "  slack " << rep.slack << "  tolerance " << rep.tolerance_used << "  inputs "
        << rep.inputs_digest << '\n';
}

int status_exit_code(CheckStatus s) { return s == CheckStatus::Satisfied ? 0 : 1; }

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        const int d = std::stoi(cur);
        if (d < 1) throw std::runtime_error("dims must be positive");
        dims.push_back(d);
        cur.clear();
    };
    for (const char c : text) {
        if (c == ',') flush();
        else cur.push_back(c);
    }
    flush();
    if (dims.empty()) throw std::runtime_error("dims list is empty");
    return dims;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"numerical radius / Euclidean operator radius toolkit", "opradius"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute a quantity of one or two matrices");
    std::string quantity, input, input2;
    bool as_json = false;
    compute->add_option("--quantity", quantity, "omega | norm | omega-e | norm-e | block-omega")
        ->required()
        ->check(CLI::IsMember({"omega", "norm", "omega-e", "norm-e", "block-omega"}));
    compute->add_option("--input", input, "matrix JSON file")->required();
    compute->add_option("--input2", input2, "second matrix JSON file");
    compute->add_flag("--json", as_json, "machine-readable output");

    auto* check = app.add_subcommand("check", "check one registry relation on concrete inputs");
    std::string relation;
    double tol = -1.0;
    check->add_option("--relation", relation, "registry id, e.g. R06")->required();
    check->add_option("--input", input, "matrix JSON file")->required();
    check->add_option("--input2", input2, "second matrix JSON file");
    check->add_option("--tol", tol, "absolute tolerance override");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* checkv = app.add_subcommand("check-vectors", "check a vector-level inequality");
    std::string vectors_path;
    checkv->add_option("--relation", relation, "gcs | eq4 | angle | mixed-schwarz")
        ->required()
        ->check(CLI::IsMember({"gcs", "eq4", "angle", "mixed-schwarz"}));
    checkv->add_option("--vectors", vectors_path, "vectors JSON file")->required();
    checkv->add_option("--input", input, "matrix JSON file (mixed-schwarz only)");
    checkv->add_option("--tol", tol, "absolute tolerance (default 1e-12)");
    checkv->add_flag("--json", as_json, "machine-readable output");

    auto* suite = app.add_subcommand("suite", "run the property suite and/or the worked examples");
    bool paper = false, property = false;
    int trials = 100;
    std::string dims_text = "2,3,4", report_path;
    uint64_t seed = 42;
    suite->add_flag("--paper-examples", paper, "reproduce every printed example value");
    suite->add_flag("--property", property, "random-ensemble run over the whole registry");
    suite->add_option("--trials", trials, "trials per relation (default 100)");
    suite->add_option("--dims", dims_text, "comma-separated dimensions (default 2,3,4)");
    suite->add_option("--seed", seed, "base seed (default 42)");
    suite->add_option("--report", report_path, "write the JSON report here");

    auto* list = app.add_subcommand("list", "print the relation registry");
    list->add_flag("--json", as_json, "emit the registry JSON document");

    std::vector<const char*> argv;
    argv.push_back("opradius");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    try {
        if (compute->parsed()) {
            const bool wants_two = quantity == "block-omega";
            const bool allows_two = quantity == "omega-e" || quantity == "norm-e" || wants_two;
            if (!allows_two && !input2.empty())
                throw std::runtime_error(quantity + " takes a single --input");
            if (wants_two && input2.empty())
                throw std::runtime_error("block-omega requires --input2");

            const ComplexMatrix a = parse_matrix_file(input);
            QuantityResult r;
            std::string method;
            if (quantity == "omega") {
                r = numerical_radius(a);
                method = method_name(r.method);
            } else if (quantity == "norm") {
                r.value = operator_norm(a);
                r.accuracy = 1e-10 * (1.0 + r.value);
                method = "direct";
            } else if (quantity == "block-omega") {
                r = block_numerical_radius(a, parse_matrix_file(input2));
                method = method_name(r.method);
            } else {
                std::vector<ComplexMatrix> ts{a};
                if (!input2.empty()) ts.push_back(parse_matrix_file(input2));
                r = quantity == "omega-e" ? euclidean_radius(ts) : euclidean_norm(ts);
                method = method_name(r.method);
            }

            if (as_json) {
                nlohmann::ordered_json doc;
                doc["quantity"] = quantity;
                doc["value"] = r.value;
                doc["accuracy"] = r.accuracy;
                doc["method"] = method;
                if (quantity != "norm") doc["witness"] = witness_json(r);
                out << doc.dump(2) << '\n';
            } else {
                out << fmt(r.value) << '\n';
            }
            return 0;
        }

        if (check->parsed()) {
            const Relation& rel = find_relation(relation);
            std::vector<ComplexMatrix> inputs{parse_matrix_file(input)};
            if (rel.signature == Signature::matrix_pair) {
                if (input2.empty()) throw std::runtime_error(relation + " requires --input2");
                inputs.push_back(parse_matrix_file(input2));
            } else if (!input2.empty()) {
                throw std::runtime_error(relation + " takes a single --input");
            }
            const BoundReport rep = evaluate_relation(relation, inputs, tol);
            print_report(out, rep, as_json);
            return status_exit_code(rep.status);
        }

        if (checkv->parsed()) {
            const double vtol = tol >= 0.0 ? tol : 1e-12;
            const auto vs = parse_vectors_file(vectors_path);
            BoundReport rep;
            if (relation == "mixed-schwarz") {
                if (input.empty()) throw std::runtime_error("mixed-schwarz requires --input for the matrix");
                if (vs.size() != 2) throw std::runtime_error("mixed-schwarz requires exactly 2 vectors");
                rep = check_mixed_schwarz(parse_matrix_file(input), vs[0], vs[1], vtol);
            } else {
                if (vs.size() != 3) throw std::runtime_error(relation + " requires exactly 3 vectors");
                if (relation == "gcs") rep = check_generalized_cauchy_schwarz(vs[0], vs[1], vs[2], vtol);
                else if (relation == "eq4") rep = check_eq4(vs[0], vs[1], vs[2], vtol);
                else rep = check_angle_inequality(vs[0], vs[1], vs[2], vtol);
            }
            print_report(out, rep, as_json);
            return status_exit_code(rep.status);
        }

        if (suite->parsed()) {
            if (!paper && !property) paper = property = true;
            SuiteReport merged;
            merged.seed = seed;
            if (property) {
                std::vector<std::string> ids;
                for (const auto& r : list_relations()) ids.push_back(r.id);
                SuiteReport prop = run_property_suite(ids, trials, parse_dims(dims_text), seed);
                merged.trials = prop.trials;
                merged.dims = prop.dims;
                merged.tallies = std::move(prop.tallies);
                merged.counterexamples = std::move(prop.counterexamples);
                merged.wall_ms += prop.wall_ms;
            }
            if (paper) {
                SuiteReport px = run_paper_examples();
                merged.fixtures = std::move(px.fixtures);
                merged.wall_ms += px.wall_ms;
            }
            out << report_text(merged);
            if (!report_path.empty()) {
                std::ofstream rf(report_path);
                if (!rf) throw std::runtime_error("cannot open report file: " + report_path);
                rf << report_json(merged) << '\n';
            }
            return merged.all_passed() ? 0 : 1;
        }

        // list
        if (as_json) {
            out << registry_json() << '\n';
        } else {
            for (const auto& r : list_relations()) {
                out << r.id << "  " << kind_name(r.kind) << "  " << signature_name(r.signature)
                    << "  precondition=" << precondition_name(r.precondition) << "\n    " << r.description
                    << '\n';
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace opradius
