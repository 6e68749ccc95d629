#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "levymc/diagnostics.hpp"

namespace levymc {

/// Floating-point values rendered with 17 significant digits (round-trip
/// exact for doubles).
std::string fmt17(double v);

/// Level table of an MLMC run.
/// Columns: level,N,mean_Y,var_Y,mean_P,var_P,kurtosis,cost
void write_level_table_csv(std::ostream& out, std::span<const LevelStats> levels);

/// JSON summary of an MLMC run: estimate, eps, alpha_hat, beta_hat,
/// total_cost, converged.
std::string mlmc_json_summary(const MlmcResult& result);

/// Columns: model,option,level,N,mean_Y,var_Y,logM_abs_mean,logM_var,
///          alpha_hat,beta_hat,ref_alpha,ref_beta,tolerance,alpha_pass,beta_pass
void write_rates_csv(std::ostream& out, const RateReport& report);

/// Columns: model,n,paths,mean_dn,se_mean_dn,mean_dn2,se_mean_dn2,max_dn,
///          exponent_mean,exponent_mean2,ref_multiplier
/// The proxy supremum underestimates the true one, so exponents are
/// indicative.
void write_dn_csv(std::ostream& out, const DnReport& report);

/// Columns: model,option,eps,mlmc_cost,std_mc_cost,savings,bias_level,
///          converged,estimate
void write_sweep_csv(std::ostream& out, ModelKind model, OptionKind option,
                     std::span<const ComplexityPoint> points);

} // namespace levymc
