#include "sol/classify.hpp"
#include "sol/equivalence.hpp"
#include "sol/geometry.hpp"
#include "sol/serialization.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using sol::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

sol::SolLattice load_lattice(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_input(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("malformed JSON: ") + e.what());
    }
    return sol::lattice_from_json(j);
}

sol::LatticeMatrix parse_matrix(const std::string& csv) {
    std::istringstream is(csv);
    long vals[4];
    char sep;
    for (int i = 0; i < 4; ++i) {
        if (!(is >> vals[i])) throw CLI::ValidationError("matrix must be p,q,r,s");
        if (i < 3 && !(is >> sep)) throw CLI::ValidationError("matrix must be p,q,r,s");
    }
    return {vals[0], vals[1], vals[2], vals[3]};
}

long default_bound() {
    if (const char* env = std::getenv("SOL_BRAVAIS_BOUND")) {
        long b = std::atol(env);
        if (b > 0) return b;
    }
    return 50;
}

void emit(const Json& j, int decimals, long N) {
    Json out = j;
    if (decimals > 0) sol::annotate_decimals(out, sol::FieldContext(N), decimals);
    std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sol lattice construction, classification and export"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string type_label;
    std::string format = "json";
    std::string mat_a, mat_b, output;
    long N = 6;
    long bound = default_bound();
    int decimals = 0;
    int samples = 64;

    CLI::App* c_classify = app.add_subcommand("classify", "classify a lattice document");
    c_classify->add_option("--input", input, "lattice JSON file or - for stdin");
    c_classify->add_option("--decimals", decimals, "annotate exact values with decimals");

    CLI::App* c_realize = app.add_subcommand("realize", "construct an example of a type");
    c_realize->add_option("--N", N, "trace parameter")->required();
    c_realize->add_option("--type", type_label, "Bravais type label, e.g. II/9")->required();
    c_realize->add_option("--decimals", decimals, "annotate exact values with decimals");

    CLI::App* c_enum = app.add_subcommand("enumerate", "candidate parameters and conjugacy classes");
    c_enum->add_option("--N", N, "trace parameter")->required();
    c_enum->add_option("--bound", bound, "search bound for conjugator entries");

    CLI::App* c_equiv = app.add_subcommand("equivalent", "bounded conjugacy test for two matrices");
    c_equiv->add_option("--a", mat_a, "first matrix p,q,r,s")->required();
    c_equiv->add_option("--b", mat_b, "second matrix p,q,r,s")->required();
    c_equiv->add_option("--bound", bound, "search bound for conjugator entries");

    CLI::App* c_verify = app.add_subcommand("verify", "validate a lattice document");
    c_verify->add_option("--input", input, "lattice JSON file or - for stdin");

    CLI::App* c_export = app.add_subcommand("export", "fundamental parallelepiped geometry");
    c_export->add_option("--input", input, "lattice JSON file or - for stdin");
    c_export->add_option("--format", format, "json or obj")
        ->check(CLI::IsMember({"json", "obj"}));
    c_export->add_option("--samples", samples, "samples per translation curve");
    c_export->add_option("--output", output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) {
            sol::SolLattice L = load_lattice(input);
            emit(sol::to_json(sol::classify_report(L)), decimals, L.context().trace());
        } else if (c_realize->parsed()) {
            sol::Bravais t = sol::bravais_from_string(type_label);
            sol::RealizeResult res = sol::realize_type(N, t);
            if (!res.ok()) {
                std::cerr << "unrealizable: " << res.reason << "\n";
                return 1;
            }
            emit(sol::to_json(*res.lattice), decimals, N);
        } else if (c_enum->parsed()) {
            sol::Partition part = sol::class_representatives(N, bound);
            Json classes = Json::array();
            for (const auto& cls : part.classes) {
                Json members = Json::array();
                for (const auto& m : cls.members) members.push_back({m[0], m[1], m[2]});
                Json witnesses = Json::array();
                for (const auto& [m, U] : cls.witnesses) {
                    witnesses.push_back({{"member", {m[0], m[1], m[2]}},
                                         {"U", {U.u, U.v, U.w, U.wbar}}});
                }
                classes.push_back({{"representative",
                                    {cls.representative[0], cls.representative[1],
                                     cls.representative[2]}},
                                   {"members", members},
                                   {"witnesses", witnesses}});
            }
            emit(Json{{"N", part.N}, {"bound", part.bound}, {"classes", classes}}, 0, N);
        } else if (c_equiv->parsed()) {
            sol::LatticeMatrix a = parse_matrix(mat_a);
            sol::LatticeMatrix b = parse_matrix(mat_b);
            sol::SearchResult res = sol::equivalence_search(a, b, bound);
            Json j{{"bound", res.bound}};
            switch (res.outcome) {
                case sol::SearchOutcome::Equivalent:
                    j["result"] = "equivalent";
                    j["witness"] = {res.witness->u, res.witness->v, res.witness->w,
                                    res.witness->wbar};
                    break;
                case sol::SearchOutcome::NotFoundWithinBound:
                    j["result"] = "not_found_within_bound";
                    break;
                case sol::SearchOutcome::TraceMismatch:
                    j["result"] = "not_equivalent";
                    j["reason"] = "trace mismatch";
                    break;
            }
            emit(j, 0, std::max(a.trace(), 3L));
        } else if (c_verify->parsed()) {
            sol::SolLattice L = load_lattice(input);
            sol::PresentationReport rep = sol::verify_presentation(L);
            Json j = sol::to_json(rep);
            j["isotropy"] = sol::to_json(sol::isotropy_check(L));
            j["rotated_basis"] = sol::rotated_basis_check(L);
            emit(j, 0, L.context().trace());
            if (!rep.ok()) return 1;
        } else if (c_export->parsed()) {
            sol::SolLattice L = load_lattice(input);
            sol::ExportFormat f =
                format == "obj" ? sol::ExportFormat::Obj : sol::ExportFormat::Json;
            std::string bytes = sol::export_geometry(L, f, samples);
            if (output.empty()) {
                std::cout << bytes;
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open output file: " + output);
                out << bytes;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
