#pragma once

#include "cyclo/combinatorics.hpp"
#include "cyclo/parameters.hpp"
#include "cyclo/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace cyclo {

/// Exact a-value. Normalized with the additive constant g(n) taken to be 0: values are
/// comparable only at fixed (spec, n), which is the only way they are used.
struct AValue {
    Rational value;

    friend bool operator==(const AValue&, const AValue&) = default;
    friend std::strong_ordering operator<=>(const AValue& a, const AValue& b)
    {
        if (a.value < b.value) return std::strong_ordering::less;
        if (b.value < a.value) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline std::string to_string(const AValue& a) { return to_string(a.value); }

/// B'^(j)_s = mu(j)_s - s + n + m^(j) for s = 1..n; strictly decreasing.
struct BetaSet {
    std::vector<Rational> entries;
};

/// One beta-set per component of mu. Throws ComponentMismatch unless mu has f*delta
/// components, std::invalid_argument if |mu| > n.
std::vector<BetaSet> beta_sets(const Multipartition& mu, int n, const ChargeData& charges);

/// a^(1) of an f*delta-partition with beta-sets of length n:
///
///   sum_{i <= j, (a,b) in B'(i) x B'(j), a > b if i = j} min(a, b)
/// - sum_{i, j, a in B'(i), 1 <= k <= floor(a)} min(k, m^(j))
///
/// (components indexed 1..f*delta; g(n) = 0).
AValue a_value_component(const Multipartition& mu, int n, const ChargeData& charges);

/// Sum of a_value_component over the p' consecutive blocks of f*delta components, each
/// block evaluated with n = |lambda|. Throws ComponentMismatch unless lambda has r components.
AValue a_value_r(const Multipartition& lambda, const ParameterSpec& spec);

}  // namespace cyclo
