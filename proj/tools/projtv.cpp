// Batch front-end: theorem-to-command routing over exact certificates.
// Exit codes: 0 pass, 1 fail / not found, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "projtv/report.hpp"

using namespace projtv;

namespace {

void add_common(CLI::App* sub, JobSpec& job, std::string& eps_csv) {
    sub->add_option("--theorem", job.theorem, "cpt | tver | transversal | both-free | flag");
    sub->add_option("--d", job.d, "ambient projective dimension");
    sub->add_option("--v", job.v, "dimension of V");
    sub->add_option("--w", job.w, "dimension of W");
    sub->add_option("--m", job.m, "number of point sets / power in gates");
    sub->add_option("--r", job.r, "part count / count threshold");
    sub->add_option("--p", job.p, "prime for the arithmetic gates");
    sub->add_option("--input", job.input_path, "instance or report file (JSON)");
    sub->add_option("--output", job.output_path, "report destination (JSON)");
    sub->add_option("--seed", job.search.seed, "search seed (reports are reproducible per seed)");
    sub->add_option("--eps-schedule", eps_csv, "comma-separated decreasing epsilons");
    sub->add_option("--max-starts", job.search.multistart, "multistart count for searches");
    sub->add_option("--denom-bound", job.search.denom_bound,
                    "denominator bound when rationalizing search weights");
    sub->add_option("--samples", job.demo_samples, "sample count for demo-measure");
    sub->add_option("--threads", job.search.threads, "worker threads for candidate scans");
    sub->add_flag("--rainbow", job.rainbow, "enforce the colorful constraint");
    sub->add_flag("--strict-disjoint", job.strict_disjoint, "demand meet(V, W) = 0");
    sub->add_option("--plot", job.plot_path, "SVG destination (plot command)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certificates for projective center-point and Tverberg-type partitions"};
    app.require_subcommand(1);

    JobSpec job;
    std::string eps_csv;
    if (const char* env = std::getenv("PROJTV_THREADS")) {
        const long t = std::strtol(env, nullptr, 10);
        if (t >= 1) job.search.threads = static_cast<unsigned>(t);
    }

    for (const char* name : {"certify", "verify", "search", "oracle", "demo-measure", "plot",
                             "recheck"}) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, job, eps_csv);
        sub->callback([&job, name]() { job.command = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (!eps_csv.empty()) {
            job.search.eps_schedule.clear();
            std::string tok;
            std::stringstream ss(eps_csv);
            while (std::getline(ss, tok, ',')) job.search.eps_schedule.push_back(parse_rat(tok));
        }
        const RunResult result = run_job(job);
        if (job.output_path.empty()) std::cout << result.report.dump(2) << "\n";
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
