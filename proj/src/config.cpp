#include "levymc/config.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace levymc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

using Section = std::map<std::string, std::string, std::less<>>;

std::map<std::string, Section, std::less<>> tokenize(std::string_view text) {
    std::map<std::string, Section, std::less<>> sections;
    std::string current;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineno;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            ": unterminated section header");
            current = std::string(trim(line.substr(1, line.size() - 2)));
            sections.try_emplace(current);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        if (current.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": key outside any section");
        const std::string key{trim(line.substr(0, eq))};
        const std::string value{trim(line.substr(eq + 1))};
        if (!sections[current].emplace(key, value).second)
            throw std::invalid_argument("config: duplicate key '" + key +
                                        "' in [" + current + "]");
    }
    return sections;
}

class SectionReader {
  public:
    SectionReader(std::string name, const Section* section)
        : name_(std::move(name)) {
        if (section)
            pending_ = *section;
    }

    std::optional<std::string> take(const std::string& key) {
        const auto it = pending_.find(key);
        if (it == pending_.end())
            return std::nullopt;
        std::string value = it->second;
        pending_.erase(it);
        return value;
    }

    std::string require(const std::string& key) {
        auto v = take(key);
        if (!v)
            throw std::invalid_argument("config: [" + name_ + "] is missing '" +
                                        key + "'");
        return *v;
    }

    double number(const std::string& key, double fallback) {
        const auto v = take(key);
        return v ? parse_number(key, *v) : fallback;
    }

    double require_number(const std::string& key) {
        return parse_number(key, require(key));
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
        const auto v = take(key);
        if (!v)
            return fallback;
        const double d = parse_number(key, *v);
        if (d < 0.0 || d != static_cast<double>(static_cast<std::uint64_t>(d)))
            throw std::invalid_argument("config: [" + name_ + "] " + key +
                                        " must be a nonnegative integer");
        return static_cast<std::uint64_t>(d);
    }

    void finish() const {
        if (!pending_.empty())
            throw std::invalid_argument("config: unknown key '" +
                                        pending_.begin()->first + "' in [" +
                                        name_ + "]");
    }

  private:
    double parse_number(const std::string& key, const std::string& value) const {
        std::size_t used = 0;
        double d = 0.0;
        try {
            d = std::stod(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != value.size())
            throw std::invalid_argument("config: [" + name_ + "] " + key +
                                        " = '" + value + "' is not a number");
        return d;
    }

    std::string name_;
    Section pending_;
};

LevyModel parse_model(SectionReader& sec) {
    const std::string kind = sec.require("model");
    const double r = sec.number("r", 0.05);
    if (kind == "vg" || kind == "nig") {
        const double sigma = sec.require_number("sigma");
        const double theta = sec.require_number("theta");
        const double kappa = sec.require_number("kappa");
        sec.finish();
        if (kind == "vg")
            return LevyModel(VgParams{sigma, theta, kappa, r});
        return LevyModel(NigParams{sigma, theta, kappa, r});
    }
    if (kind == "stable") {
        const double alpha = sec.require_number("alpha");
        const double a_plus = sec.require_number("A");
        const double b_minus = sec.require_number("B");
        sec.finish();
        return LevyModel(StableParams{alpha, a_plus, b_minus, r});
    }
    throw std::invalid_argument("config: model must be vg, nig or stable, got '" +
                                kind + "'");
}

OptionSpec parse_option(SectionReader& sec, double rate) {
    const std::string kind = sec.take("option").value_or("asian");
    const double spot = sec.number("S0", 100.0);
    const double strike = sec.number("K", 100.0);
    const double maturity = sec.number("T", 1.0);
    if (kind == "asian") {
        sec.finish();
        return OptionSpec::asian_call(spot, strike, maturity, rate);
    }
    if (kind == "lookback") {
        sec.finish();
        return OptionSpec::lookback_put(spot, strike, maturity, rate);
    }
    if (kind == "barrier") {
        const double barrier = sec.number("B", 115.0);
        sec.finish();
        return OptionSpec::up_out_barrier_call(spot, strike, barrier, maturity,
                                               rate);
    }
    throw std::invalid_argument(
        "config: option must be asian, lookback or barrier, got '" + kind + "'");
}

} // namespace

RunConfig parse_config(std::string_view text) {
    auto sections = tokenize(text);
    for (const auto& [name, _] : sections)
        if (name != "model" && name != "option" && name != "driver")
            throw std::invalid_argument("config: unknown section [" + name + "]");

    const auto find = [&](const char* name) -> const Section* {
        const auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    };

    SectionReader model_sec("model", find("model"));
    if (!find("model"))
        throw std::invalid_argument("config: missing [model] section");
    LevyModel model = parse_model(model_sec);

    SectionReader option_sec("option", find("option"));
    OptionSpec option = parse_option(option_sec, model.rate());

    SectionReader driver_sec("driver", find("driver"));
    MlmcConfig driver;
    double eps = driver_sec.number("eps", 0.01);
    driver.refinement = static_cast<int>(driver_sec.integer("M", 4));
    driver.n_init = driver_sec.integer("N_init", driver.n_init);
    driver.level_min = static_cast<int>(driver_sec.integer("L_min", 2));
    driver.level_max = static_cast<int>(driver_sec.integer("L_max", 10));
    const int fit_floor =
        static_cast<int>(driver_sec.integer("fit_floor_level", 2));
    driver.seed = driver_sec.integer("seed", 0);
    driver.stream_offset = driver_sec.integer("stream_offset", 0);
    driver_sec.finish();

    return RunConfig{std::move(model), option, driver, eps, fit_floor};
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace levymc
