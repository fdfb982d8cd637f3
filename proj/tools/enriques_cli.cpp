#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "enriques/brauer.hpp"
#include "enriques/json_io.hpp"
#include "enriques/mod2_criterion.hpp"
#include "enriques/norm_descent.hpp"

namespace {

using namespace enriques;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json(const std::string& path) { return parse_json(slurp(path)); }

int run(int argc, char** argv) {
    CLI::App app{"Brauer groups of the known Enriques manifolds and the associated "
                 "lattice-theoretic criteria"};
    app.require_subcommand(1);

    // br
    auto* br = app.add_subcommand("br", "Brauer group of a family");
    std::string family;
    long param = 0;
    bool br_json = false;
    br->add_option("--family", family, "one of en, kn, tn, rn")->required();
    br->add_option("--param", param, "n for En/Kn, m for Tn/Rn")->required();
    br->add_flag("--json", br_json, "emit JSON");

    // snf
    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
    std::string snf_file;
    bool snf_json = false;
    snf->add_option("file", snf_file, "matrix JSON file")->required();
    snf->add_flag("--json", snf_json, "emit JSON");

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "group cohomology of a module file");
    std::string coh_file;
    unsigned degree = 1;
    bool coh_json = false;
    coh->add_option("file", coh_file, "module JSON file")->required();
    coh->add_option("--degree", degree, "cohomological degree (default 1)");
    coh->add_flag("--json", coh_json, "emit JSON");

    // criterion
    auto* crit = app.add_subcommand("criterion", "vanishing criterion for the pulled-back class");
    std::string crit_file;
    long crit_n = 0;
    bool crit_json = false;
    crit->add_option("file", crit_file, "JSON file {\"n\": int, \"picard\": [vector, ...]}")
        ->required();
    crit->add_option("--n", crit_n, "override n from the file");
    crit->add_flag("--json", crit_json, "emit JSON");

    // descent
    auto* desc = app.add_subcommand("descent", "norm/descent test for a class");
    std::string desc_file;
    bool desc_json = false;
    desc->add_option("file", desc_file, "JSON file {\"module\": module, \"class\": vector}")
        ->required();
    desc->add_flag("--json", desc_json, "emit JSON");

    // report
    auto* rep = app.add_subcommand("report", "reproduction report for all four families");
    std::string format = "md";
    rep->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*br) {
        BrauerResult r = brauer_group(FamilySpec(family_from_name(family), param));
        if (br_json) {
            std::cout << brauer_result_to_json(r).dump(2) << "\n";
        } else {
            std::cout << "Br(" << family_name(r.spec.family) << ", param=" << r.spec.param
                      << ") = " << r.group.str() << " ("
                      << (r.conditional ? "conditional" : "unconditional") << ")\n";
            std::cout << "H1(G, H2) = " << r.h1.str() << ", d3 mode: " << mode_name(r.mode)
                      << "\n";
        }
        return 0;
    }
    if (*snf) {
        IntMatrix m = matrix_from_json(load_json(snf_file));
        SnfResult s = smith_normal_form(m);
        json diag = json::array();
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            diag.push_back(int_to_json(s.D(i, i)));
        if (snf_json) {
            std::cout << json{{"diagonal", diag},
                              {"D", matrix_to_json(s.D)},
                              {"U", matrix_to_json(s.U)},
                              {"V", matrix_to_json(s.V)}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "diagonal: " << diag.dump() << "\n";
        }
        return 0;
    }
    if (*coh) {
        CyclicGModule m = module_from_json(load_json(coh_file));
        AbelianGroupInvariants g = cohomology(m, degree);
        if (coh_json)
            std::cout << group_to_json(g).dump(2) << "\n";
        else
            std::cout << "H^" << degree << " = " << g.str() << "\n";
        return 0;
    }
    if (*crit) {
        json in = load_json(crit_file);
        long n = crit_n;
        if (n == 0) {
            if (!in.contains("n")) throw InputError("n missing: pass --n or put it in the file");
            n = in.at("n").get<long>();
        }
        std::vector<LatticeVector> picard;
        for (const json& v : in.at("picard")) picard.push_back(vec_from_json(v));
        VanishingResult r = vanishing_criterion(n, picard);
        json out{{"vanishes", r.vanishes},
                 {"witness", r.witness ? vec_to_json(*r.witness) : json(nullptr)}};
        if (crit_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << (r.vanishes ? "vanishes" : "does not vanish") << "\n";
        return 0;
    }
    if (*desc) {
        json in = load_json(desc_file);
        CyclicGModule m = module_from_json(in.at("module"));
        IntVec c = vec_from_json(in.at("class"));
        bool nt = norm_trivial(m, c);
        std::optional<IntVec> witness;
        if (nt) witness = descent_trivial(m, c);
        json out{{"norm_trivial", nt},
                 {"descent_trivial", witness.has_value()},
                 {"witness", witness ? vec_to_json(*witness) : json(nullptr)}};
        if (desc_json)
            std::cout << out.dump(2) << "\n";
        else
            std::cout << "norm trivial: " << (nt ? "yes" : "no")
                      << ", descent trivial: " << (witness ? "yes" : "no") << "\n";
        return 0;
    }
    if (*rep) {
        std::cout << (format == "json" ? reproduction_report_json() : reproduction_report_markdown());
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const enriques::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const enriques::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
