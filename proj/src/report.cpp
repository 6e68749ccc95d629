#include "levymc/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace levymc {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_level_table_csv(std::ostream& out,
                           std::span<const LevelStats> levels) {
    out << "level,N,mean_Y,var_Y,mean_P,var_P,kurtosis,cost\n";
    for (const auto& st : levels) {
        out << st.level << ',' << st.n << ',' << fmt17(st.mean()) << ','
            << fmt17(st.variance()) << ',' << fmt17(st.mean_p()) << ','
            << fmt17(st.variance_p()) << ',' << fmt17(st.kurtosis()) << ','
            << st.cost << '\n';
    }
}

std::string mlmc_json_summary(const MlmcResult& result) {
    nlohmann::json j;
    j["estimate"] = result.estimate;
    j["eps"] = result.eps;
    j["alpha_hat"] = result.alpha_hat;
    j["beta_hat"] = result.beta_hat;
    j["total_cost"] = result.total_cost;
    j["converged"] = result.converged;
    return j.dump(2);
}

void write_rates_csv(std::ostream& out, const RateReport& r) {
    out << "model,option,level,N,mean_Y,var_Y,logM_abs_mean,logM_var,"
           "alpha_hat,beta_hat,ref_alpha,ref_beta,tolerance,alpha_pass,"
           "beta_pass\n";
    const double log_m = std::log(static_cast<double>(r.refinement));
    for (const auto& st : r.levels) {
        const double lm = std::log(std::abs(st.mean())) / log_m;
        const double lv = std::log(st.variance()) / log_m;
        out << to_string(r.model) << ',' << to_string(r.option) << ','
            << st.level << ',' << st.n << ',' << fmt17(st.mean()) << ','
            << fmt17(st.variance()) << ',' << fmt17(lm) << ',' << fmt17(lv)
            << ',' << fmt17(r.alpha_hat) << ',' << fmt17(r.beta_hat) << ','
            << fmt17(r.reference.weak) << ',' << fmt17(r.reference.var) << ','
            << fmt17(r.tolerance) << ',' << (r.alpha_pass ? 1 : 0) << ','
            << (r.beta_pass ? 1 : 0) << '\n';
    }
}

void write_dn_csv(std::ostream& out, const DnReport& r) {
    out << "model,n,paths,mean_dn,se_mean_dn,mean_dn2,se_mean_dn2,max_dn,"
           "exponent_mean,exponent_mean2,ref_multiplier\n";
    for (const auto& row : r.rows) {
        out << to_string(r.model) << ',' << row.n << ',' << row.paths << ','
            << fmt17(row.mean_dn) << ',' << fmt17(row.se_mean_dn) << ','
            << fmt17(row.mean_dn2) << ',' << fmt17(row.se_mean_dn2) << ','
            << fmt17(row.max_dn) << ',' << fmt17(r.exponent_mean) << ','
            << fmt17(r.exponent_mean2) << ',' << r.ref_multiplier << '\n';
    }
}

void write_sweep_csv(std::ostream& out, ModelKind model, OptionKind option,
                     std::span<const ComplexityPoint> points) {
    out << "model,option,eps,mlmc_cost,std_mc_cost,savings,bias_level,"
           "converged,estimate\n";
    for (const auto& p : points) {
        out << to_string(model) << ',' << to_string(option) << ','
            << fmt17(p.eps) << ',' << fmt17(p.mlmc_cost) << ','
            << fmt17(p.std_mc_cost) << ',' << fmt17(p.savings()) << ','
            << p.bias_level << ',' << (p.converged ? 1 : 0) << ','
            << fmt17(p.estimate) << '\n';
    }
}

} // namespace levymc
