#pragma once

#include "langevin/config.hpp"
#include "langevin/csv.hpp"
#include "langevin/sampler.hpp"

namespace langevin {

// Step-size exponent gamma0 of the variant: h = l^2 d^{-gamma0}.
double step_exponent(const ProposalVariant& v);

// Build the target named in the config ("gaussian", "double-well",
// "ar1-half", "ar1-sine", "exponential") at the given dimension.
TargetModel target_from_config(const Config& cfg, long dim);

// Experiment drivers.  Each returns a fully assembled CSV report whose data
// rows are byte-reproducible for a fixed config + seed + build.
CsvReport run_efficiency_sweep(const Config& cfg);
CsvReport run_transient_trace(const Config& cfg);
CsvReport run_acf_compare(const Config& cfg);
CsvReport run_asymptotic(const Config& cfg);
CsvReport run_ergodicity_probe(const Config& cfg);
CsvReport run_single(const Config& cfg);

// Dispatch on cfg's "experiment" key; validates the name.
CsvReport run_experiment(const Config& cfg);

}  // namespace langevin
