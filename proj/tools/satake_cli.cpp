#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satake/jobs.hpp"

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    json j;
    in >> j;
    return j;
}

// Cartan input file: {"type": "A", "rank": 2} or {"cartan": [[2,-1],[-1,2]]}
void apply_cartan_file(json& params, const std::string& path) {
    json j = load_json_file(path);
    if (j.contains("cartan")) {
        params["cartan"] = j.at("cartan");
    } else if (j.contains("type") && j.contains("rank")) {
        params["type"] =
            j.at("type").get<std::string>() + std::to_string(j.at("rank").get<long long>());
    } else {
        throw std::invalid_argument("cartan file needs either 'cartan' or 'type' + 'rank'");
    }
}

struct CommonFlags {
    std::string type;
    std::string cartan_file;
    std::vector<long long> lambda, mu;
};

void add_weight_flags(CLI::App* cmd, CommonFlags& f, bool need_mu = true) {
    cmd->add_option("--type", f.type, "Cartan type label, e.g. A2, B2, G2");
    cmd->add_option("--cartan-file", f.cartan_file, "JSON file with the Cartan matrix or type");
    cmd->add_option("--lambda", f.lambda, "highest weight, fundamental coordinates")
        ->delimiter(',')
        ->required();
    if (need_mu)
        cmd->add_option("--mu", f.mu, "weight, fundamental coordinates")
            ->delimiter(',')
            ->required();
}

void fill_weight_params(satake::JobSpec& job, const CommonFlags& f, bool need_mu = true) {
    if (!f.cartan_file.empty())
        apply_cartan_file(job.params, f.cartan_file);
    else if (!f.type.empty())
        job.params["type"] = f.type;
    job.params["lambda"] = f.lambda;
    if (need_mu) job.params["mu"] = f.mu;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded weight multiplicities, affine characters and quiver "
                 "Coulomb-branch series"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags (--format, --jobs) may follow the subcommand

    satake::JobSpec job;
    std::string format = "table";
    int jobs = 1;
    app.add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--jobs", jobs, "worker hint for sweeps (output is deterministic)")
        ->check(CLI::PositiveNumber);

    CommonFlags kostka_f, eq1_f, d7_f;
    auto* kostka = app.add_subcommand("kostka", "graded weight multiplicity polynomial");
    add_weight_flags(kostka, kostka_f);

    auto* eq1 = app.add_subcommand("verify-eq1", "compare the graded section series against the "
                                                 "multiplicity polynomial");
    add_weight_flags(eq1, eq1_f);
    eq1->add_option("--max-deg", job.limits.max_deg, "q-truncation order");

    auto* d7 = app.add_subcommand("verify-diagram7", "corner-rank checks for the resolution "
                                                     "series");
    add_weight_flags(d7, d7_f);
    d7->add_option("--max-deg", job.limits.max_deg, "q-truncation order");

    std::string wt_type;
    std::vector<long long> wt_lambda;
    auto* wt = app.add_subcommand("weight-table", "affine weight table within a depth window");
    wt->add_option("--type", wt_type, "finite type of the untwisted affinization")->required();
    wt->add_option("--lambda", wt_lambda, "affine highest weight (node 0 first)")
        ->delimiter(',')
        ->required();
    wt->add_option("--depth", job.limits.depth, "delta-degree window");

    std::string am_type, am_algo = "freudenthal";
    std::vector<long long> am_lambda, am_mu;
    long long am_drop = 0;
    auto* am = app.add_subcommand("affine-mult", "affine weight multiplicity");
    am->add_option("--type", am_type, "finite type of the untwisted affinization")->required();
    am->add_option("--lambda", am_lambda, "affine highest weight (node 0 first)")
        ->delimiter(',')
        ->required();
    am->add_option("--mu", am_mu, "affine weight coordinates (node 0 first)")
        ->delimiter(',')
        ->required();
    am->add_option("--delta-drop", am_drop, "delta-degree of lambda - mu")->required();
    am->add_option("--depth", job.limits.depth, "delta-degree window");
    am->add_option("--algorithm", am_algo, "freudenthal or weyl-kac");

    std::string quiver_file;
    auto* mono = app.add_subcommand("monopole-hs", "Coulomb-branch Hilbert series of a framed "
                                                   "quiver");
    mono->add_option("--quiver-file", quiver_file, "quiver JSON file")->required();
    mono->add_option("--max-deg", job.limits.max_deg, "t-truncation order");

    long long sp_ell = 1, sp_k = 0;
    auto* sp = app.add_subcommand("sym-power", "symmetric-power orbifold Hilbert series");
    sp->add_option("--ell", sp_ell, "cyclic group order")->required();
    sp->add_option("--k", sp_k, "symmetric power")->required();
    sp->add_option("--max-deg", job.limits.max_deg, "t-truncation order");

    std::string config_file;
    auto* sweep = app.add_subcommand("sweep", "run the bundled verification sweep");
    sweep->add_option("--config", config_file, "sweep configuration JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    job.format = format;
    try {
        if (kostka->parsed()) {
            job.command = "kostka";
            fill_weight_params(job, kostka_f);
        } else if (eq1->parsed()) {
            job.command = "verify-eq1";
            fill_weight_params(job, eq1_f);
        } else if (d7->parsed()) {
            job.command = "verify-diagram7";
            fill_weight_params(job, d7_f);
        } else if (wt->parsed()) {
            job.command = "weight-table";
            job.params["type"] = wt_type;
            job.params["lambda"] = wt_lambda;
        } else if (am->parsed()) {
            job.command = "affine-mult";
            job.params["type"] = am_type;
            job.params["lambda"] = am_lambda;
            job.params["mu"] = am_mu;
            job.params["delta_drop"] = am_drop;
            job.params["algorithm"] = am_algo;
        } else if (mono->parsed()) {
            job.command = "monopole-hs";
            job.params["quiver"] = load_json_file(quiver_file);
        } else if (sp->parsed()) {
            job.command = "sym-power";
            job.params["ell"] = sp_ell;
            job.params["k"] = sp_k;
        } else if (sweep->parsed()) {
            job.command = "sweep";
            if (!config_file.empty()) job.params["config"] = load_json_file(config_file);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        satake::JobResult result = satake::run_job(job, &std::cerr);
        std::cout << result.report;
        return result.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
