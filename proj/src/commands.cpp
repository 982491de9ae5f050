#include "bohm/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <thread>

#include "bohm/analysis.hpp"
#include "bohm/errors.hpp"
#include "bohm/io.hpp"
#include "bohm/validate.hpp"

namespace bohm::commands {

namespace fs = std::filesystem;
using config::format_double;
using config::RunConfig;

namespace {

fs::path prepare_out(const RunConfig& cfg) {
    fs::path dir(cfg.out.empty() ? "." : cfg.out);
    fs::create_directories(dir);
    return dir;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot write '" + path.string() + "'");
    return os;
}

io::Metadata model_metadata(const RunConfig& cfg, const fields::FieldModel& model) {
    io::Metadata meta{{"model", fields::to_string(model.kind())}};
    if (model.is_limit()) {
        meta.emplace_back("r0", format_double(cfg.r0));
        meta.emplace_back("r1", format_double(cfg.r1));
    } else {
        meta.emplace_back("a0", format_double(cfg.a0));
        meta.emplace_back("a1", format_double(cfg.a1));
    }
    if (model.kind() == fields::FieldKind::isospectral) {
        meta.emplace_back("lambda", format_double(cfg.lambda));
        meta.emplace_back("mu", format_double(cfg.mu));
    }
    meta.emplace_back("x0", format_double(cfg.x0));
    meta.emplace_back("y0", format_double(cfg.y0));
    meta.emplace_back("initial_point_source", "configured (not taken from the original study)");
    meta.emplace_back("ensemble", std::to_string(cfg.ensemble));
    meta.emplace_back("seed", std::to_string(cfg.seed));
    meta.emplace_back("t_end", format_double(cfg.t_end));
    meta.emplace_back("dt_requested", format_double(cfg.dt));
    return meta;
}

void write_effective_config(const fs::path& dir, const RunConfig& cfg) {
    auto os = open_out(dir / "effective.cfg");
    os << config::emit(cfg);
}

std::string caption(const RunConfig& cfg, const fields::FieldModel& model) {
    std::string c = fields::to_string(model.kind());
    if (model.is_limit()) {
        c += "  r0=" + format_double(cfg.r0) + "  r1=" + format_double(cfg.r1);
    } else {
        c += "  a0=" + format_double(cfg.a0) + "  a1=" + format_double(cfg.a1);
    }
    if (model.kind() == fields::FieldKind::isospectral) {
        c += "  lambda=" + format_double(cfg.lambda) + "  mu=" + format_double(cfg.mu);
    }
    c += "  T=" + format_double(model.strobe_period()) + "  t_end=" + format_double(cfg.t_end);
    return c;
}

struct PointResult {
    std::string status;
    std::string result;
    bool ok = false;
};

PointResult run_strobe_files(const RunConfig& cfg, const fs::path& dir, const std::string& stem) {
    const auto model = config::build_model(cfg);
    const auto starts = config::initial_points(cfg, model);
    std::vector<analysis::StrobeMap> maps;
    maps.reserve(starts.size());
    for (const auto& p0 : starts) maps.push_back(analysis::stroboscopic_map(model, p0, cfg.t_end, cfg.dt, cfg.max_speed));

    auto meta = model_metadata(cfg, model);
    meta.emplace_back("period", format_double(model.strobe_period()));
    meta.emplace_back("dt_actual", format_double(maps.front().dt_actual));
    meta.emplace_back("expected_count", std::to_string(maps.front().expected_count));
    {
        auto os = open_out(dir / (stem + ".csv"));
        io::write_strobe_csv(os, maps, meta);
    }
    if (cfg.svg) {
        auto os = open_out(dir / (stem + ".svg"));
        io::write_strobe_svg(os, maps, io::default_viewport(model, maps), caption(cfg, model));
    }
    PointResult r;
    std::size_t points = 0;
    r.ok = true;
    r.status = "completed";
    for (const auto& m : maps) {
        points += m.points.size();
        if (m.termination != dynamics::Termination::completed) {
            r.ok = false;
            r.status = dynamics::to_string(m.termination);
        }
    }
    r.result = std::to_string(points);
    return r;
}

PointResult run_lyapunov_files(const RunConfig& cfg, const fs::path& dir, const std::string& stem,
                               analysis::LyapunovEstimate* out = nullptr) {
    const auto model = config::build_model(cfg);
    const fields::Point2 p0{cfg.x0, cfg.y0};
    if (!model.in_domain(p0)) throw ConfigError("initial point outside the model domain");
    auto est = analysis::lyapunov_benettin(model, p0, cfg.t_end, cfg.dt, cfg.d0, cfg.renorm_interval, cfg.max_speed);
    auto meta = model_metadata(cfg, model);
    meta.emplace_back("d0", format_double(cfg.d0));
    meta.emplace_back("renorm_interval", format_double(cfg.renorm_interval));
    meta.emplace_back("tail_spread", format_double(est.tail_spread));
    if (!est.message.empty()) meta.emplace_back("abort_reason", est.message);
    {
        auto os = open_out(dir / (stem + ".csv"));
        io::write_lyapunov_csv(os, est, meta);
    }
    PointResult r{est.reliable ? "completed" : "unreliable", format_double(est.lambda_max), est.reliable};
    if (out) *out = std::move(est);
    return r;
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, std::ostream& log) {
    const auto model = config::build_model(cfg);
    const auto icfg = config::build_integrator(cfg);
    const fields::Point2 p0{cfg.x0, cfg.y0};
    const auto dir = prepare_out(cfg);
    write_effective_config(dir, cfg);
    const auto rec = dynamics::integrate(model, p0, icfg);
    auto meta = model_metadata(cfg, model);
    meta.emplace_back("dt_actual", format_double(rec.dt_actual));
    meta.emplace_back("stride", std::to_string(cfg.stride));
    if (!rec.message.empty()) meta.emplace_back("reason", rec.message);
    {
        auto os = open_out(dir / "trajectory.csv");
        io::write_trajectory_csv(os, rec, meta);
    }
    log << "samples=" << rec.samples.size() << " termination=" << dynamics::to_string(rec.termination) << '\n';
    return rec.termination == dynamics::Termination::completed ? kExitOk : kExitPartial;
}

int cmd_strobe(const RunConfig& cfg, std::ostream& log) {
    const auto dir = prepare_out(cfg);
    write_effective_config(dir, cfg);
    const auto r = run_strobe_files(cfg, dir, "strobe");
    log << "points=" << r.result << " termination=" << r.status << '\n';
    return r.ok ? kExitOk : kExitPartial;
}

int cmd_lyapunov(const RunConfig& cfg, std::ostream& log) {
    const auto dir = prepare_out(cfg);
    write_effective_config(dir, cfg);
    analysis::LyapunovEstimate est;
    const auto r = run_lyapunov_files(cfg, dir, "lyapunov", &est);
    log << "lambda_max=" << format_double(est.lambda_max) << '\n';
    if (!r.ok) log << "unreliable=true\n";
    return r.ok ? kExitOk : kExitPartial;
}

RunConfig resolve_sweep_point(const RunConfig& base, double value) {
    RunConfig cfg = base;
    const bool infinite = std::isinf(value);
    const bool harmonic_family = base.model == "harmonic" || base.model == "harmonic_limit";
    const bool well_family = base.model == "square_well" || base.model == "square_well_limit";
    if (base.sweep_param == "A" || base.sweep_param == "a") {
        const double f0 = base.sweep_param == "A" ? base.ratio0 : 1.0;
        const double f1 = base.sweep_param == "A" ? base.ratio1 : 1.0;
        if (infinite) {
            if (!harmonic_family && !well_family) {
                throw ConfigError("'inf' ladder value has no limit form for model " + base.model);
            }
            cfg.model = harmonic_family ? "harmonic_limit" : "square_well_limit";
            cfg.r0 = std::copysign(f0, value);
            cfg.r1 = std::copysign(f1, value);
            cfg.a0 = value;
            cfg.a1 = value;
        } else {
            if (base.model == "harmonic_limit") cfg.model = "harmonic";
            if (base.model == "square_well_limit") cfg.model = "square_well";
            cfg.a0 = f0 * value;
            cfg.a1 = f1 * value;
        }
    } else if (base.sweep_param == "lambda") {
        cfg.lambda = value;
    } else if (base.sweep_param == "mu") {
        cfg.mu = value;
    } else {
        throw ConfigError("unknown sweep parameter '" + base.sweep_param + "'");
    }
    config::build_model(cfg);  // validate
    return cfg;
}

std::vector<SweepOutcome> run_sweep(const RunConfig& base) {
    if (base.sweep_values.empty()) throw ConfigError("sweep_values is empty");
    const auto dir = prepare_out(base);
    std::vector<SweepOutcome> outcomes(base.sweep_values.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < outcomes.size(); i = next++) {
            SweepOutcome& o = outcomes[i];
            o.index = i;
            o.value = base.sweep_values[i];
            o.cfg = base;
            try {
                o.cfg = resolve_sweep_point(base, o.value);
                char stem[32];
                std::snprintf(stem, sizeof stem, "point_%03zu", i);
                const auto r = base.sweep_mode == "lyapunov" ? run_lyapunov_files(o.cfg, dir, stem)
                                                             : run_strobe_files(o.cfg, dir, stem);
                o.status = r.status;
                o.result = r.result;
            } catch (const std::exception& e) {
                o.status = "error";
                o.result = e.what();
            }
        }
    };

    unsigned jobs = base.jobs > 0 ? static_cast<unsigned>(base.jobs) : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(outcomes.size()));
    {
        std::vector<std::jthread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
    }
    return outcomes;
}

void write_manifest(std::ostream& os, const RunConfig& base, const std::vector<SweepOutcome>& outcomes) {
    os << "index,param,value,model,a0,a1,lambda,mu,r0,r1,status,result\n";
    for (const auto& o : outcomes) {
        std::string result = o.result;
        std::replace(result.begin(), result.end(), ',', ';');
        os << o.index << ',' << base.sweep_param << ',' << format_double(o.value) << ',' << o.cfg.model << ','
           << format_double(o.cfg.a0) << ',' << format_double(o.cfg.a1) << ',' << format_double(o.cfg.lambda)
           << ',' << format_double(o.cfg.mu) << ',' << format_double(o.cfg.r0) << ',' << format_double(o.cfg.r1)
           << ',' << o.status << ',' << result << '\n';
    }
    os << "# sweep_mode=" << base.sweep_mode << '\n';
    os << "# x0=" << format_double(base.x0) << '\n';
    os << "# y0=" << format_double(base.y0) << '\n';
    os << "# initial_point_source=configured (not taken from the original study)\n";
}

int cmd_sweep(const RunConfig& cfg, std::ostream& log) {
    const auto outcomes = run_sweep(cfg);
    const auto dir = prepare_out(cfg);
    write_effective_config(dir, cfg);
    {
        auto os = open_out(dir / "manifest.csv");
        write_manifest(os, cfg, outcomes);
    }
    std::size_t ok = 0;
    for (const auto& o : outcomes) {
        log << "point " << o.index << " value=" << format_double(o.value) << " status=" << o.status
            << " result=" << o.result << '\n';
        if (o.status == "completed") ++ok;
    }
    return ok > 0 ? kExitOk : kExitPartial;
}

int cmd_validate(std::ostream& log) {
    const auto checks = validate::run_validation();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        log << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) log << "  (" << c.detail << ')';
        log << '\n';
        if (!c.passed) ++failed;
    }
    log << checks.size() - failed << '/' << checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitValidation;
}

}  // namespace bohm::commands
