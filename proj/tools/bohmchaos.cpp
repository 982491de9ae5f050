// Command-line driver: simulate | strobe | lyapunov | sweep | validate.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bohm/commands.hpp"
#include "bohm/config.hpp"
#include "bohm/errors.hpp"

namespace {

struct Overrides {
    std::string config_path;
    std::string out;
    bool svg = false;
    long long stride = 0;
    int jobs = 0;
    int ensemble = 0;
    std::vector<std::string> assignments;
    bool dump_config = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_path, "key = value configuration file");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--set", o.assignments, "override one key, e.g. --set a0=2.03 (repeatable)");
    cmd->add_flag("--dump-config", o.dump_config, "print the effective configuration and exit");
}

bohm::config::RunConfig effective_config(const Overrides& o) {
    bohm::config::RunConfig cfg;
    if (!o.config_path.empty()) cfg = bohm::config::load_file(o.config_path);
    for (const auto& a : o.assignments) bohm::config::apply_assignment(cfg, a);
    if (!o.out.empty()) cfg.out = o.out;
    if (o.svg) cfg.svg = true;
    if (o.stride > 0) cfg.stride = o.stride;
    if (o.jobs > 0) cfg.jobs = o.jobs;
    if (o.ensemble > 0) cfg.ensemble = o.ensemble;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bohmian trajectory chaos toolkit"};
    app.require_subcommand(1);
    Overrides o;

    auto* simulate = app.add_subcommand("simulate", "integrate one trajectory to CSV");
    add_common(simulate, o);
    simulate->add_option("--stride", o.stride, "keep every n-th step");

    auto* strobe = app.add_subcommand("strobe", "stroboscopic map to CSV (and SVG)");
    add_common(strobe, o);
    strobe->add_flag("--svg", o.svg, "also write an SVG scatter panel");
    strobe->add_option("--ensemble", o.ensemble, "number of initial points around (x0, y0)");

    auto* lyapunov = app.add_subcommand("lyapunov", "largest Lyapunov exponent (Benettin)");
    add_common(lyapunov, o);

    auto* sweep = app.add_subcommand("sweep", "run a parameter ladder");
    add_common(sweep, o);
    sweep->add_flag("--svg", o.svg, "write SVG panels for strobe sweeps");
    sweep->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
    sweep->add_option("--ensemble", o.ensemble, "number of initial points per ladder point");

    auto* validate = app.add_subcommand("validate", "run the built-in check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bohm::commands::kExitConfig;
    }

    try {
        if (validate->parsed()) return bohm::commands::cmd_validate(std::cout);
        const auto cfg = effective_config(o);
        if (o.dump_config) {
            std::cout << bohm::config::emit(cfg);
            return 0;
        }
        if (simulate->parsed()) return bohm::commands::cmd_simulate(cfg, std::cout);
        if (strobe->parsed()) return bohm::commands::cmd_strobe(cfg, std::cout);
        if (lyapunov->parsed()) return bohm::commands::cmd_lyapunov(cfg, std::cout);
        if (sweep->parsed()) return bohm::commands::cmd_sweep(cfg, std::cout);
    } catch (const bohm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bohm::commands::kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bohm::commands::kExitConfig;
    }
    return bohm::commands::kExitConfig;
}
