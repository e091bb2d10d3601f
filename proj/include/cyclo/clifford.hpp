#pragma once

#include "cyclo/afunction.hpp"
#include "cyclo/combinatorics.hpp"
#include "cyclo/parameters.hpp"

#include <cstddef>
#include <vector>

namespace cyclo {

/// The permutation of component positions defined by Q_{varpi(i)} = eta_p Q_i.
///
/// In block form (blocks of f*delta components, 1-based):
///   varpi(i) = i + f delta              for i in [1, (p'-1) f delta]
///   varpi(i) = i - r + (f+1) delta      for i in [r - f delta + 1, r - delta]
///   varpi(i) = i - r + delta            for i in [r - delta + 1, r]
class VarpiAction {
public:
    /// image[i] = varpi(i), 0-based.
    explicit VarpiAction(std::vector<std::size_t> image);

    std::size_t size() const noexcept { return image_.size(); }
    std::size_t operator()(std::size_t i) const { return image_.at(i); }
    const std::vector<std::size_t>& image() const noexcept { return image_; }

    VarpiAction inverse() const;
    /// varpi^k for k >= 0.
    VarpiAction power(int k) const;
    bool is_identity() const;
    /// Sorted cycle lengths.
    std::vector<std::size_t> cycle_type() const;

    friend bool operator==(const VarpiAction&, const VarpiAction&) = default;

private:
    std::vector<std::size_t> image_;
};

/// Builds varpi from the block formula and cross-checks it against Q_{varpi(i)} = eta_p Q_i
/// on the exponents of q_sequence. Throws InternalInconsistency if they disagree.
VarpiAction varpi(const ParameterSpec& spec);

/// Component c of the result is component varpi^{-1}(c) of lambda.
Multipartition apply_varpi(const Multipartition& lambda, const VarpiAction& action);
StandardTableau apply_varpi(const StandardTableau& tableau, const VarpiAction& action);

struct OrbitDatum {
    /// Canonical minimum of the orbit.
    Multipartition representative;
    /// Smallest k > 0 with varpi^k(lambda) = lambda.
    int o_lambda;
    /// lambda, varpi(lambda), ..., varpi^{o-1}(lambda) starting from the representative.
    std::vector<Multipartition> orbit;
};

OrbitDatum orbit(const Multipartition& lambda, const VarpiAction& action);

/// Orbits meeting `universe`, one per orbit, in the order of their first appearance.
std::vector<OrbitDatum> orbits_of(const std::vector<Multipartition>& universe, const VarpiAction& action);

/// Number of eigen-indices i in [0, p / o_lambda - 1]. The n = 0 algebra is the ground
/// field, which has exactly one simple module, so the empty multipartition gets one index.
int eigen_index_count(const Multipartition& lambda, int o_lambda, int p);

struct SemisimpleLabel {
    Multipartition representative;
    int o_lambda;
    int eigen_index;
    /// dim S(lambda, i) = syt_count(lambda) o_lambda / p (1 for the empty multipartition).
    Count dimension;
    AValue a_value;
};

/// One label per orbit representative of Pi^r_n and eigen-index; ordered by a-value,
/// then canonical order, then eigen-index.
std::vector<SemisimpleLabel> semisimple_labels(int n, const ParameterSpec& spec);

/// Standard lambda-tableaux partitioned into orbits of varpi^{o_lambda}. Each orbit is sorted
/// and orbits are ordered by their smallest tableau. Throws CapExceeded above the cap.
std::vector<std::vector<StandardTableau>> tableau_orbits(const Multipartition& lambda, const VarpiAction& action,
                                                         int cap = kDefaultTableauCap);

}  // namespace cyclo
