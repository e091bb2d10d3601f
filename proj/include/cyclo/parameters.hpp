#pragma once

#include "cyclo/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cyclo {

/// eta_L^exponent with eta_L = exp(2 i pi / L). Only the exponent mod L is stored.
class RootOfUnity {
public:
    RootOfUnity(long exponent, long order);

    long exponent() const noexcept { return exponent_; }
    long order() const noexcept { return order_; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    long exponent_;
    long order_;
};

/// The normal form (e, p, delta, v_1 <= ... <= v_delta) and every derived constant.
///
/// With f = gcd(e, p), e' = e / f and p' = p / f, the Ariki-Koike parameters are
/// Q = { eta_e^{v_i} eta_p^j }, so r = delta f p', d = r / p and every root of unity
/// involved is a power of eta_L for L = lcm(e, p) = e p'.
class ParameterSpec {
public:
    int e() const noexcept { return e_; }
    int p() const noexcept { return p_; }
    int delta() const noexcept { return delta_; }
    const std::vector<int>& charges() const noexcept { return charges_; }

    int f() const noexcept { return f_; }
    int eprime() const noexcept { return e_ / f_; }
    int pprime() const noexcept { return p_ / f_; }
    /// Components per Morita block.
    int fdelta() const noexcept { return f_ * delta_; }
    int r() const noexcept { return delta_ * p_; }
    int d() const noexcept { return delta_; }
    int L() const noexcept { return e_ * pprime(); }

    friend bool operator==(const ParameterSpec&, const ParameterSpec&) = default;

private:
    friend ParameterSpec build_parameters(int e, int p, int delta, std::vector<int> charges);
    ParameterSpec() = default;

    int e_ = 2;
    int p_ = 1;
    int delta_ = 1;
    std::vector<int> charges_;
    int f_ = 1;
};

/// Validates and derives. Throws InvalidOrder (e <= 1), InvalidCharge (unsorted or outside
/// [0, e' - 1]) or InvalidParameters (p < 1, delta < 1, wrong number of charges).
ParameterSpec build_parameters(int e, int p, int delta, std::vector<int> charges);

/// The extended charges and the shifts entering the a-function.
///   w_{(s-1)delta + k} = v_k + (s-1) e'
///   m^(j) = w_j - j e / (f delta) + e
struct ChargeData {
    std::vector<int> w;
    std::vector<Rational> m;
};

ChargeData charge_data(const ParameterSpec& spec);

/// Q ordered as Q^1, ..., Q^{p'}; the entry for (block j, shift l, charge i) is
/// eta_p^{l p' + j - 1} eta_e^{v_i}. No distinctness check.
std::vector<RootOfUnity> q_sequence(const ParameterSpec& spec);

/// q_sequence plus the requirement that all r entries are pairwise distinct
/// (throws DuplicateParameter otherwise).
std::vector<RootOfUnity> build_Q(const ParameterSpec& spec);

/// Finest partition of the indices of Q into classes closed under
/// Q_i ~ Q_j  <=>  Q_i / Q_j is a power of eta_e.
/// Classes are ordered by their smallest index; indices are 0-based and ascending.
/// All entries must share one order L, and e must divide L.
std::vector<std::vector<std::size_t>> morita_split(std::span<const RootOfUnity> q, int e);

}  // namespace cyclo
