#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levymc/config.hpp"
#include "levymc/diagnostics.hpp"
#include "levymc/report.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> stream_offset;
    std::string out_path = "-";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "Experiment config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", opts.seed, "Override the RNG seed");
    cmd->add_option("--stream-offset", opts.stream_offset,
                    "Override the base stream offset");
}

levymc::RunConfig load(const CommonOpts& opts) {
    levymc::RunConfig cfg = levymc::load_config(opts.config_path);
    if (opts.seed)
        cfg.driver.seed = *opts.seed;
    if (opts.stream_offset)
        cfg.driver.stream_offset = *opts.stream_offset;
    return cfg;
}

// "-" means stdout.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_)
                throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilevel Monte Carlo pricing for exponential Levy models"};
    app.require_subcommand(1);

    CommonOpts price_opts;
    std::optional<double> price_eps;
    std::string price_csv = "-";
    auto* price = app.add_subcommand(
        "price", "Adaptive MLMC estimate: JSON summary plus CSV level table");
    add_common(price, price_opts);
    price->add_option("--eps", price_eps, "Target RMS error");
    price->add_option("--csv", price_csv,
                      "Level-table CSV destination (default stdout)");

    CommonOpts rates_opts;
    int rates_levels = 6;
    std::uint64_t rates_samples = 100000;
    auto* rates = app.add_subcommand(
        "rates", "Fixed-N per-level decay table with fitted exponents (CSV)");
    add_common(rates, rates_opts);
    rates->add_option("--levels", rates_levels, "Finest level L")
        ->check(CLI::Range(4, 12));
    rates->add_option("--samples", rates_samples, "Paths per level");
    rates->add_option("--out", rates_opts.out_path, "CSV destination");

    CommonOpts dn_opts;
    std::vector<std::int64_t> dn_nlist{4, 16, 64, 256};
    std::uint64_t dn_paths = 20000;
    int dn_mult = 64;
    auto* dn = app.add_subcommand(
        "dn", "Discrete-monitoring supremum gap decay (CSV)");
    add_common(dn, dn_opts);
    dn->add_option("--nlist", dn_nlist, "Monitoring grid sizes")
        ->delimiter(',');
    dn->add_option("--paths", dn_paths, "Paths per grid size");
    dn->add_option("--mult", dn_mult,
                   "Refinement multiplier of the proxy supremum grid");
    dn->add_option("--out", dn_opts.out_path, "CSV destination");

    CommonOpts sweep_opts;
    std::vector<double> sweep_eps{0.05, 0.02, 0.01, 0.005};
    auto* sweep = app.add_subcommand(
        "sweep", "MLMC vs standard-MC complexity sweep over eps (CSV)");
    add_common(sweep, sweep_opts);
    sweep->add_option("--eps-list", sweep_eps, "Decreasing RMS targets")
        ->delimiter(',');
    sweep->add_option("--out", sweep_opts.out_path, "CSV destination");

    CLI11_PARSE(app, argc, argv);

    try {
        if (price->parsed()) {
            levymc::RunConfig cfg = load(price_opts);
            const double eps = price_eps.value_or(cfg.eps);
            const levymc::MlmcResult result =
                levymc::run_mlmc(cfg.model, cfg.option, eps, cfg.driver);
            std::cout << levymc::mlmc_json_summary(result) << "\n";
            Output csv(price_csv);
            levymc::write_level_table_csv(csv.stream(), result.levels);
        } else if (rates->parsed()) {
            levymc::RunConfig cfg = load(rates_opts);
            const levymc::RateReport report = levymc::measure_rates(
                cfg.model, cfg.option, rates_levels, rates_samples, cfg.driver,
                cfg.fit_floor_level);
            Output out(rates_opts.out_path);
            levymc::write_rates_csv(out.stream(), report);
        } else if (dn->parsed()) {
            levymc::RunConfig cfg = load(dn_opts);
            const levymc::DnReport report = levymc::measure_dn(
                cfg.model, dn_nlist, dn_paths, dn_mult, cfg.driver);
            Output out(dn_opts.out_path);
            levymc::write_dn_csv(out.stream(), report);
        } else if (sweep->parsed()) {
            levymc::RunConfig cfg = load(sweep_opts);
            const auto points = levymc::complexity_sweep(cfg.model, cfg.option,
                                                         sweep_eps, cfg.driver);
            Output out(sweep_opts.out_path);
            levymc::write_sweep_csv(out.stream(), cfg.model.kind(),
                                    cfg.option.kind, points);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
