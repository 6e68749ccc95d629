#pragma once

#include <string>
#include <string_view>

#include "levymc/mlmc.hpp"

namespace levymc {

/// A fully resolved experiment description: model, option, driver knobs.
struct RunConfig {
    LevyModel model;
    OptionSpec option;
    MlmcConfig driver;
    double eps = 0.01;
    int fit_floor_level = 2;
};

/// Parses the flat key = value config grammar:
///
///   # comment
///   [model]
///   model = vg            ; vg | nig | stable
///   sigma = 0.1213        ; vg/nig: sigma, theta, kappa
///   theta = -0.1436
///   kappa = 0.1686
///   alpha = 1.5597        ; stable: alpha, A, B
///   A = 0
///   B = 0.1486
///   r = 0.05
///
///   [option]
///   option = asian        ; asian | lookback | barrier
///   S0 = 100
///   K = 100
///   B = 115               ; barrier only
///   T = 1
///
///   [driver]
///   eps = 0.01
///   M = 4
///   N_init = 10000
///   L_min = 2
///   L_max = 10
///   fit_floor_level = 2
///   seed = 0
///   stream_offset = 0
///
/// Unknown sections or keys are errors; the option discount rate is taken
/// from the model's r (single pricing measure).
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

} // namespace levymc
