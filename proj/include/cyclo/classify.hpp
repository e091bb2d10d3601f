#pragma once

#include "cyclo/afunction.hpp"
#include "cyclo/combinatorics.hpp"
#include "cyclo/kleshchev.hpp"
#include "cyclo/parameters.hpp"

#include <string>
#include <vector>

namespace cyclo {

/// One simple module of the G(r,p,n) Hecke algebra: a canonical orbit representative
/// lambda in Lambda^1 together with an eigen-index.
struct SimpleLabel {
    Multipartition lambda;
    int o_lambda;
    int eigen_index;
    AValue a_value;

    friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

/// Labels (lambda, i) with lambda in Lambda^1 a canonical varpi-orbit representative and
/// 0 <= i < p / o_lambda, sorted by (a-value, canonical order of lambda, i).
std::vector<SimpleLabel> classify(int n, const ParameterSpec& spec);

struct CountReport {
    std::size_t lambda0 = 0;       // |Lambda^0|
    std::size_t lambda1 = 0;       // |Lambda^1|
    std::size_t orbits = 0;        // varpi-orbits meeting Lambda^1
    std::size_t orbit_total = 0;   // sum over those orbits of p / o (1 when n = 0)
    std::size_t labels = 0;        // |classify(n)|
    std::size_t straddling = 0;    // orbits not contained in Lambda^1

    bool bijection_holds() const noexcept { return lambda0 == lambda1; }
    bool total_holds() const noexcept { return labels == orbit_total; }
    bool closed_under_varpi() const noexcept { return straddling == 0; }
    bool ok() const noexcept { return bijection_holds() && total_holds() && closed_under_varpi(); }
};

/// Cross-checks of the classification at size n. Violations are reported, never thrown.
CountReport count_check(int n, const ParameterSpec& spec, SignatureOrder order = SignatureOrder::ascending);

/// The triangularity statement attached to a label. No decomposition numbers are computed:
/// the record only says that d([W_N]) = [N] + (terms of strictly smaller a-value).
struct TriangularityRecord {
    AValue a_value;
    std::string statement_id;
    std::string statement;
};

TriangularityRecord triangularity_metadata(const SimpleLabel& label);

}  // namespace cyclo
