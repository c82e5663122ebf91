#include "golod/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "golod/complex_io.hpp"
#include "golod/corpus.hpp"
#include "golod/errors.hpp"
#include "golod/golod.hpp"
#include "golod/homology.hpp"
#include "golod/report.hpp"

namespace golod {

namespace {

struct LoadedInput {
    std::string path;
    std::string digest;
    SimplicialComplex complex;
};

LoadedInput load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    LoadedInput li;
    li.path = path;
    li.digest = fnv1a_digest(buf.str());
    li.complex = parse_complex(buf.str());
    return li;
}

Json input_json(const LoadedInput& li) {
    Json j;
    j["path"] = li.path;
    j["digest"] = li.digest;
    j["m"] = li.complex.vertex_count();
    j["facets"] = li.complex.facets().size();
    return j;
}

// Emits the report: human text goes to `out` unless --json - claimed stdout.
void finish_report(Json& report, const std::string& json_target,
                   std::chrono::steady_clock::time_point start, const std::string& text,
                   std::ostream& out) {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    report["timings"] = Json{{"total_ms", elapsed}};
    if (json_target == "-") {
        out << report.dump(2) << "\n";
        return;
    }
    if (!json_target.empty()) {
        std::ofstream jf(json_target, std::ios::binary);
        if (!jf) throw Error("cannot write report: " + json_target);
        jf << report.dump(2) << "\n";
    }
    out << text;
}

Coefficient parse_field_flag(const std::string& spec) {
    if (spec == "rat") return Coefficient::rationals();
    return Coefficient::prime_field(std::stol(spec));
}

std::string witness_text(const GolodWitness& w, const SimplicialComplex& K) {
    std::ostringstream os;
    auto name_list = [&](const std::vector<int>& vs) {
        std::string s = "{";
        for (size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + K.vertex_name(vs[i]);
        return s + "}";
    };
    switch (w.kind) {
        case GolodWitness::Kind::NonChordalCycle:
            os << "witness: induced cycle " << name_list(w.cycle) << " of length "
               << w.cycle.size() << " in the 1-skeleton\n";
            break;
        case GolodWitness::Kind::BreakableNotNeighborly:
            os << "witness: full subcomplex on " << name_list(w.subset)
               << " has vertex-breakable H_2 over "
               << w.breakability->witness_coefficient->to_string() << " (cokernel "
               << w.breakability->coker.to_string() << ") but "
               << name_list({w.missing_pair.first, w.missing_pair.second})
               << " is not an edge\n";
            break;
        case GolodWitness::Kind::NonvanishingProduct:
            os << "witness: nonvanishing product for I1 = " << name_list(w.I1)
               << ", I2 = " << name_list(w.I2) << " in degree " << w.degree << " over "
               << w.coefficient->to_string() << "\n";
            break;
    }
    return os.str();
}

int report_exit(const GolodReport& rep) {
    return rep.verdict == GolodReport::Verdict::NotGolod ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto start = std::chrono::steady_clock::now();

    CLI::App app{"Golodness of two-dimensional simplicial complexes: exact homology, "
                 "Hochster bigraded Betti numbers, product-vanishing certificates"};
    app.name("golod");
    app.require_subcommand(1);

    std::string file, json_target, coeff_spec = "int", scope = "integral", field_spec = "rat";
    int degree = 2;
    bool unreduced = false, full_table = false, emit_json = false;
    int jobs = 1;
    if (const char* env_jobs = std::getenv("GOLOD_JOBS")) {
        try {
            jobs = std::max(1, std::stoi(env_jobs));
        } catch (const std::logic_error&) {
        }
    }

    auto* cmd_hom = app.add_subcommand("homology", "reduced (co)homology of the input complex");
    cmd_hom->add_option("file", file, "facet-list or JSON complex")->required();
    cmd_hom->add_option("--degree", degree, "homological degree")->required();
    cmd_hom->add_option("--coeff", coeff_spec, "int | rat | f:p | mod:n");
    cmd_hom->add_flag("--unreduced", unreduced, "use unreduced homology");
    cmd_hom->add_option("--json", json_target, "write JSON report to file ('-' = stdout)");

    auto* cmd_golod = app.add_subcommand("golod", "Golodness decision");
    cmd_golod->add_option("file", file)->required();
    cmd_golod->add_option("--scope", scope, "integral | field:rat | field:p | ring:n");
    cmd_golod->add_option("--jobs", jobs, "worker cap");
    cmd_golod->add_option("--json", json_target);

    auto* cmd_betti = app.add_subcommand("betti", "bigraded Betti numbers (Hochster)");
    cmd_betti->add_option("file", file)->required();
    cmd_betti->add_option("--field", field_spec, "rat | p");
    cmd_betti->add_flag("--full", full_table, "list every (i, I) entry");
    cmd_betti->add_option("--json", json_target);

    auto* cmd_products = app.add_subcommand("products", "product-vanishing scan over a field");
    cmd_products->add_option("file", file)->required();
    cmd_products->add_option("--field", field_spec, "rat | p");
    cmd_products->add_option("--jobs", jobs, "worker cap");
    cmd_products->add_option("--json", json_target);

    auto* cmd_corpus = app.add_subcommand("corpus", "built-in complexes");
    auto* corpus_list = cmd_corpus->add_subcommand("list", "list fixture names");
    auto* corpus_emit = cmd_corpus->add_subcommand("emit", "print a fixture");
    std::string fixture;
    corpus_emit->add_option("name", fixture)->required();
    corpus_emit->add_flag("--format-json", emit_json, "emit JSON instead of facet-list text");
    cmd_corpus->require_subcommand(1);

    auto* cmd_verify = app.add_subcommand("verify-witness", "re-check a report's witness");
    std::string report_path, complex_override;
    cmd_verify->add_option("report", report_path, "JSON report produced by this tool")->required();
    cmd_verify->add_option("--complex", complex_override, "complex file (defaults to report input)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_hom->parsed()) {
            LoadedInput li = load_input(file);
            Coefficient coeff = Coefficient::parse(coeff_spec);
            HomologyResult res = homology(li.complex, degree, coeff, !unreduced);
            Json rep;
            rep["command"] = "homology";
            rep["args"] = Json{{"degree", degree},
                               {"coefficient", coeff.to_string()},
                               {"reduced", !unreduced}};
            rep["input"] = input_json(li);
            rep["result"] = res.describe();
            std::ostringstream text;
            text << (unreduced ? "H_" : "H~_") << degree << "(" << file << "; "
                 << coeff.to_string() << ") = " << res.describe() << "\n";
            finish_report(rep, json_target, start, text.str(), out);
            return 0;
        }

        if (cmd_golod->parsed()) {
            LoadedInput li = load_input(file);
            GolodReport grep;
            if (scope == "integral") {
                grep = check_golod_integral_2dim(li.complex);
            } else if (scope.rfind("field:", 0) == 0) {
                grep = check_golod_field(li.complex, parse_field_flag(scope.substr(6)));
            } else if (scope.rfind("ring:", 0) == 0) {
                grep = ring_product_search(li.complex, std::stol(scope.substr(5)));
            } else {
                throw Error("unknown scope '" + scope + "'");
            }
            Json rep;
            rep["command"] = "golod";
            rep["args"] = Json{{"scope", scope}, {"jobs", jobs}};
            rep["input"] = input_json(li);
            rep["report"] = golod_report_to_json(grep, li.complex);
            std::ostringstream text;
            text << "verdict: " << grep.verdict_string() << "\n";
            text << "scope: " << grep.scope << "\n";
            if (grep.witness) text << witness_text(*grep.witness, li.complex);
            if (grep.verdict == GolodReport::Verdict::NoObstruction)
                text << "note: no nonvanishing product among pair-breakable non-edges; "
                        "this search cannot certify Golodness\n";
            finish_report(rep, json_target, start, text.str(), out);
            return report_exit(grep);
        }

        if (cmd_betti->parsed()) {
            LoadedInput li = load_input(file);
            Coefficient field = parse_field_flag(field_spec);
            BettiTable table = bigraded_betti(li.complex, field);
            Json rep;
            rep["command"] = "betti";
            rep["args"] = Json{{"field", field.to_string()}, {"full", full_table}};
            rep["input"] = input_json(li);
            Json agg = Json::array();
            std::ostringstream text;
            text << "bigraded Betti numbers over " << field.to_string() << " (i, j=|I|): rank\n";
            for (const auto& [ij, rank] : table.aggregated()) {
                agg.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"rank", rank}});
                text << "  (" << ij.first << ", " << ij.second << "): " << rank << "\n";
            }
            rep["aggregated"] = std::move(agg);
            if (full_table) {
                Json entries = Json::array();
                text << "full (i, I) table:\n";
                for (const auto& [key, rank] : table.entries) {
                    entries.push_back(
                        Json{{"i", key.first}, {"I", key.second}, {"rank", rank}});
                    text << "  (" << key.first << ", " << li.complex.simplex_name(key.second)
                         << "): " << rank << "\n";
                }
                rep["entries"] = std::move(entries);
            }
            finish_report(rep, json_target, start, text.str(), out);
            return 0;
        }

        if (cmd_products->parsed()) {
            LoadedInput li = load_input(file);
            Coefficient field = parse_field_flag(field_spec);
            GolodReport grep = product_scan(li.complex, field, jobs);
            Json rep;
            rep["command"] = "products";
            rep["args"] = Json{{"field", field.to_string()}, {"jobs", jobs}};
            rep["input"] = input_json(li);
            rep["report"] = golod_report_to_json(grep, li.complex);
            std::ostringstream text;
            text << "verdict: " << grep.verdict_string() << "\n";
            text << "scope: " << grep.scope << "\n";
            if (li.complex.dim() == 3)
                text << "note: dimension 3 input; products-only criterion\n";
            if (grep.witness) text << witness_text(*grep.witness, li.complex);
            finish_report(rep, json_target, start, text.str(), out);
            return report_exit(grep);
        }

        if (cmd_corpus->parsed()) {
            if (corpus_list->parsed()) {
                for (const auto& nc : corpus::all())
                    out << nc.name << "  (" << nc.complex.vertex_count() << " vertices, "
                        << nc.complex.facets().size() << " facets): " << nc.description << "\n";
                return 0;
            }
            if (corpus_emit->parsed()) {
                const auto* nc = corpus::find(fixture);
                if (!nc) throw Error("unknown fixture '" + fixture + "' (try: corpus list)");
                out << (emit_json ? emit_complex_json(nc->complex)
                                  : emit_complex_text(nc->complex, nc->name));
                return 0;
            }
        }

        if (cmd_verify->parsed()) {
            std::ifstream in(report_path, std::ios::binary);
            if (!in) throw Error("cannot open report: " + report_path);
            Json rep = Json::parse(in, nullptr, true);
            const Json* wit = nullptr;
            if (rep.contains("report") && rep["report"].contains("witness") &&
                !rep["report"]["witness"].is_null())
                wit = &rep["report"]["witness"];
            if (!wit) throw Error("report carries no witness to verify");
            std::string cpath = complex_override.empty()
                                    ? rep.at("input").at("path").get<std::string>()
                                    : complex_override;
            LoadedInput li = load_input(cpath);
            if (complex_override.empty() &&
                li.digest != rep.at("input").at("digest").get<std::string>())
                throw Error("input file changed since the report was written (digest mismatch)");
            std::string why;
            if (verify_witness(li.complex, *wit, &why)) {
                out << "witness verified\n";
                return 0;
            }
            out << "witness FAILED to verify: " << why << "\n";
            return 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << file << ": " << e.what() << "\n";
        return 2;
    } catch (const DimensionTooHighError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace golod
