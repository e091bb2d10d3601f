#pragma once

#include "cyclo/combinatorics.hpp"
#include "cyclo/kleshchev.hpp"
#include "cyclo/parameters.hpp"

#include <string>
#include <vector>

namespace cyclo {

/// The five (e, p, delta, charges) specs exercised by default:
/// (4,2,1,(0)), (2,2,1,(0)), (3,3,1,(0)), (4,2,2,(0,1)), (2,4,1,(0)).
std::vector<ParameterSpec> default_spec_matrix();

struct VerifyOptions {
    std::vector<ParameterSpec> specs = default_spec_matrix();
    int n_min = 0;
    int n_max = 4;
    int tableau_cap = kDefaultTableauCap;
    SignatureOrder order = SignatureOrder::ascending;
};

struct IdentityResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First failure found, scanning specs in order and n upwards.
    std::string counterexample;
};

/// Runs every cross-module identity over specs x [n_min, n_max]:
///   sum_of_squares, semisimple_dimensions, count_bijection, varpi_stability,
///   a_invariance, tableau_orbits, morita_split, classification_count.
std::vector<IdentityResult> run_verification(const VerifyOptions& options);

/// "(e=4,p=2,delta=1,v=(0))"
std::string describe(const ParameterSpec& spec);

}  // namespace cyclo
