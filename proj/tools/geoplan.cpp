// Command-line front end: plan checking, realizability queries, the
// exhaustive bivector census, family verification, and map building.
//
// Exit codes: 0 = query answered (either verdict), 2 = input error,
// 3 = budget refused, 4 = internal inconsistency.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoplan/enumerate.hpp"
#include "geoplan/families.hpp"
#include "geoplan/io.hpp"
#include "geoplan/mapbuild.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw geoplan::parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomically(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move output into place: " + path);
}

std::string surface_name(const geoplan::SurfaceClass& s) { return s.name(); }

json pair_json(const geoplan::SequencePair& pair) {
    return json::array({pair.d.entries, pair.t.entries});
}

std::string pair_text(const geoplan::SequencePair& pair) {
    return "(" + geoplan::format_degree_list(pair.d) + "; " +
           geoplan::format_degree_list(pair.t) + ")";
}

std::string entries_spaced(const std::vector<int>& entries) {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries[i]);
    }
    return out;
}

std::string census_csv(const geoplan::BivectorCensus& census) {
    std::string out = "d;t,verdict\n";
    for (const auto& pair : census.realizable)
        out += entries_spaced(pair.d.entries) + ";" + entries_spaced(pair.t.entries) +
               ",realizable\n";
    for (const auto& pair : census.non_realizable)
        out += entries_spaced(pair.d.entries) + ";" + entries_spaced(pair.t.entries) +
               ",non-realizable\n";
    return out;
}

json census_json(const geoplan::BivectorCensus& census) {
    json out;
    out["ell"] = census.ell;
    out["mode"] = census.strict ? "strict" : "necessary";
    out["feasible_count"] = census.all_feasible.size();
    out["realizable"] = json::array();
    for (const auto& pair : census.realizable)
        out["realizable"].push_back(pair_json(pair));
    out["non_realizable"] = json::array();
    for (const auto& pair : census.non_realizable)
        out["non_realizable"].push_back(pair_json(pair));
    out["stats"] = {{"plans_enumerated", census.stats.plans_enumerated},
                    {"wall_seconds", census.stats.wall_seconds}};
    return out;
}

std::map<std::string, int> parse_params(const std::string& text) {
    std::map<std::string, int> params;
    if (text.empty()) return params;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw geoplan::parse_error("params: expected name=value, got \"" +
                                       item + "\"");
        try {
            params[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
        } catch (const std::logic_error&) {
            throw geoplan::parse_error("params: bad value in \"" + item + "\"");
        }
    }
    return params;
}

int default_workers() {
    if (const char* env = std::getenv("GEOPLAN_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

// ---- subcommands ---------------------------------------------------------

int cmd_check(const std::string& plan_file) {
    geoplan::Plan p = geoplan::plan_from_bimatrix(
        geoplan::parse_bimatrix(read_file(plan_file)));
    int chi = geoplan::euler_characteristic(p);
    json out;
    out["n"] = p.n();
    out["m"] = p.m();
    out["ell"] = p.edge_count();
    out["chi"] = chi;
    out["connected_g"] = geoplan::is_connected(p.g);
    out["connected_h"] = geoplan::is_connected(p.h);
    out["even"] = geoplan::is_even(p);
    out["locally_eulerian"] = geoplan::is_locally_eulerian(p);
    out["geographic"] = geoplan::is_geographic(p);
    out["surfaces"] = json::array();
    for (const auto& s : geoplan::candidate_surfaces(chi))
        out["surfaces"].push_back(surface_name(s));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_realize(const std::string& d_text, const std::string& t_text,
                const std::string& witness_file, long long word_budget) {
    geoplan::DegreeSequence d = geoplan::parse_degree_list(d_text);
    geoplan::DegreeSequence t = geoplan::parse_degree_list(t_text);
    json out;
    out["d"] = d.entries;
    out["t"] = t.entries;
    if (d.sum() != t.sum()) {
        out["verdict"] = "INFEASIBLE";
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    geoplan::SequencePair pair(d, t);
    geoplan::RealizeVerdict v = geoplan::is_realizable(pair);
    out["verdict"] = v.realizable ? "REALIZABLE" : "NOT-REALIZABLE";
    out["stats"] = {{"realizations_tried", v.realizations_tried}};
    if (v.realizable && !witness_file.empty()) {
        std::ostringstream w;
        w << "# connected realization of "
          << (v.searched_transposed ? "t" : "d") << " = "
          << geoplan::format_degree_list(v.searched_transposed ? pair.t : pair.d)
          << "\n";
        w << geoplan::format_multigraph(*v.realization);
        w << "# locally connected Eulerian partition of its double graph\n";
        w << geoplan::format_partition(*v.partition);
        w << "# bimatrix of the derived plan, degree sequences (d; t)\n";
        w << geoplan::format_bimatrix(geoplan::bimatrix_of(*v.plan));
        try {
            auto [cand, surface] = geoplan::find_valid_map(*v.plan, word_budget);
            w << "# a valid word representation, surface "
              << surface.surface.name() << "\n";
            w << geoplan::format_word(cand.word);
        } catch (const geoplan::budget_exceeded&) {
            w << "# word representation omitted: candidate budget exceeded\n";
        }
        write_file_atomically(witness_file, w.str());
        out["witness"] = witness_file;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_search(int ell, const std::string& mode, int workers,
               const std::string& out_file, const std::string& format,
               bool quiet) {
    if (mode != "strict" && mode != "necessary")
        throw geoplan::parse_error("mode must be strict or necessary");
    geoplan::SearchConfig cfg;
    cfg.ell = ell;
    cfg.strict = (mode == "strict");
    cfg.workers = workers;
    geoplan::BivectorCensus census = geoplan::census(cfg);
    for (const auto& pair : census.non_realizable)
        std::cout << pair_text(pair) << "\n";
    if (!out_file.empty()) {
        std::string content = (format == "csv") ? census_csv(census)
                                                : census_json(census).dump(2) + "\n";
        write_file_atomically(out_file, content);
    }
    if (!quiet)
        std::cerr << "ell=" << census.ell << " mode=" << mode
                  << " feasible=" << census.all_feasible.size()
                  << " realizable=" << census.realizable.size()
                  << " non-realizable=" << census.non_realizable.size()
                  << " plans=" << census.stats.plans_enumerated
                  << " wall=" << census.stats.wall_seconds << "s\n";
    return 0;
}

int cmd_family_verify(const std::string& id, const std::string& params_text,
                      const std::string& t_text, int ell_budget) {
    auto params = parse_params(params_text);
    std::vector<int> t_list;
    if (!t_text.empty()) t_list = geoplan::parse_degree_list(t_text).entries;
    geoplan::FamilyInstance inst = geoplan::make_instance(id, params, t_list);
    json out;
    out["family"] = id;
    out["pair"] = pair_json(inst.pair);
    out["chi"] = inst.chi;
    if (inst.realizable) {
        geoplan::FamilyWitness witness = geoplan::build_witness(inst);
        bool ok = geoplan::is_eulerian_partition(witness.part) &&
                  geoplan::is_t_partition(witness.part, inst.pair.d) &&
                  geoplan::is_locally_connected(witness.part) &&
                  geoplan::degree_sequence(witness.h) == inst.pair.t;
        geoplan::Plan plan = geoplan::partition_to_plan(witness.h, witness.part);
        ok = ok && geoplan::is_geographic(plan);
        if (!ok) throw std::logic_error(id + ": witness failed verification");
        out["verdict"] = "REALIZABLE";
        out["witness_checked"] = true;
    } else {
        geoplan::NonrealizableCertificate cert =
            geoplan::verify_nonrealizable(inst, ell_budget);
        if (!cert.confirmed) {
            out["verdict"] = "FAMILY-CONTRADICTION";
            out["contradiction_bimatrix"] =
                geoplan::format_bimatrix(geoplan::bimatrix_of(*cert.contradiction));
            std::cout << out.dump(2) << "\n";
            return 4;
        }
        out["verdict"] = "NOT-REALIZABLE";
        out["stats"] = {{"realizations_tried", cert.realizations_tried}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_family_table(const std::string& id, int max_ell,
                     const std::string& format) {
    auto rows = geoplan::table_rows(id, max_ell);
    for (const auto& inst : rows) {
        if (format == "csv")
            std::cout << entries_spaced(inst.pair.d.entries) << ";"
                      << entries_spaced(inst.pair.t.entries) << ","
                      << (inst.realizable ? "realizable" : "non-realizable")
                      << "\n";
        else
            std::cout << pair_text(inst.pair) << "\n";
    }
    return 0;
}

int cmd_map(const std::string& plan_file, bool all, long long budget) {
    geoplan::Plan p = geoplan::plan_from_bimatrix(
        geoplan::parse_bimatrix(read_file(plan_file)));
    if (!geoplan::is_geographic(p))
        throw geoplan::parse_error("map: the plan is not geographic");
    if (!all) {
        auto [cand, surface] = geoplan::find_valid_map(p, budget);
        std::cout << "surface: " << surface.surface.name() << " ("
                  << surface.surface.description() << ")\n";
        std::cout << geoplan::format_word(cand.word);
        return 0;
    }
    auto reps = geoplan::word_candidates(p, budget);
    int valid = 0;
    for (const auto& cand : reps) {
        geoplan::GluedSurface s = geoplan::glue(cand.word);
        bool ok = geoplan::validate(p, cand, s);
        valid += ok;
        std::string word = geoplan::format_word(cand.word);
        for (auto& c : word)
            if (c == '\n') c = ' ';
        std::cout << word << "-> " << s.surface.name()
                  << (ok ? " valid" : " invalid") << "\n";
    }
    std::cout << reps.size() << " candidates, " << valid << " valid\n";
    std::cout << "surfaces:";
    for (const auto& s : geoplan::surfaces_of(p, budget))
        std::cout << ' ' << s.name();
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geographic plans: Edmonds' criterion, realizability, census, maps"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress progress output");

    auto* check = app.add_subcommand("check", "check a bimatrix file");
    std::string check_file;
    check->add_option("plan", check_file, "bimatrix file")->required();

    auto* realize = app.add_subcommand("realize", "decide realizability of (d; t)");
    std::string d_text, t_text, witness_file;
    long long word_budget = 1000000;
    realize->add_option("--d", d_text, "degree sequence, e.g. 5,3,2^4")->required();
    realize->add_option("--t", t_text, "degree sequence")->required();
    realize->add_option("--emit-witness", witness_file, "witness output file");
    realize->add_option("--budget", word_budget, "map candidate budget for the witness word");

    auto* search = app.add_subcommand("search", "bivector census at a given edge count");
    int ell = 0, workers = default_workers();
    std::string mode = "strict", out_file, format = "json";
    search->add_option("--edges", ell, "edge count")->required();
    search->add_option("--mode", mode, "strict | necessary");
    search->add_option("--workers", workers, "worker thread count");
    search->add_option("--out", out_file, "census output file");
    search->add_option("--format", format, "json | csv");

    auto* family = app.add_subcommand("family", "family instances and verification");
    family->require_subcommand(1);
    auto* family_list = family->add_subcommand("list", "list family identifiers");
    auto* family_verify = family->add_subcommand("verify", "verify one instance");
    std::string family_id, params_text, family_t;
    int ell_budget = 6;
    family_verify->add_option("id", family_id, "family identifier")->required();
    family_verify->add_option("--params", params_text, "e.g. k=3,a=4,n=4");
    family_verify->add_option("--t", family_t, "prescribed t (prop-5.3 only)");
    family_verify->add_option("--ell-budget", ell_budget, "edge budget for exhaustive search");
    auto* family_table = family->add_subcommand("table", "generate instances");
    std::string table_id, table_format = "text";
    int max_ell = 5;
    family_table->add_option("id", table_id, "family identifier")->required();
    family_table->add_option("--max-ell", max_ell, "edge budget");
    family_table->add_option("--format", table_format, "text | csv");

    auto* map_cmd = app.add_subcommand("map", "build maps for a geographic plan");
    std::string map_file;
    bool map_all = false;
    long long map_budget = 1000000;
    map_cmd->add_option("--plan", map_file, "bimatrix file")->required();
    map_cmd->add_flag("--all", map_all, "list all candidates up to transformations");
    map_cmd->add_option("--budget", map_budget, "candidate budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*check) return cmd_check(check_file);
        if (*realize) return cmd_realize(d_text, t_text, witness_file, word_budget);
        if (*search) return cmd_search(ell, mode, workers, out_file, format, quiet);
        if (*family_list) {
            for (const auto& id : geoplan::family_ids()) std::cout << id << "\n";
            return 0;
        }
        if (*family_verify)
            return cmd_family_verify(family_id, params_text, family_t, ell_budget);
        if (*family_table) return cmd_family_table(table_id, max_ell, table_format);
        if (*map_cmd) return cmd_map(map_file, map_all, map_budget);
    } catch (const geoplan::budget_exceeded& e) {
        std::cerr << "budget refused: " << e.what() << "\n";
        return 3;
    } catch (const geoplan::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
