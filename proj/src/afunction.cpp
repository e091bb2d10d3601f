#include "cyclo/afunction.hpp"

#include "cyclo/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclo {

namespace {

// sum_{k=1}^{K} min(k, m) in closed form.
Rational clipped_triangle(std::int64_t K, const Rational& m)
{
    if (K <= 0) return Rational(0);
    const std::int64_t t = std::clamp<std::int64_t>(floor(m), 0, K);
    return Rational(t * (t + 1) / 2) + Rational(K - t) * m;
}

}  // namespace

std::vector<BetaSet> beta_sets(const Multipartition& mu, int n, const ChargeData& charges)
{
    if (mu.level() != charges.m.size())
        throw ComponentMismatch("expected " + std::to_string(charges.m.size()) + " components, got " +
                                std::to_string(mu.level()));
    if (mu.size() > n) throw std::invalid_argument("beta-set length n is smaller than |mu|");

    std::vector<BetaSet> out(mu.level());
    for (std::size_t j = 0; j < mu.level(); ++j) {
        out[j].entries.reserve(static_cast<std::size_t>(n));
        for (int s = 1; s <= n; ++s) out[j].entries.push_back(Rational(mu[j].row(s) - s + n) + charges.m[j]);
    }
    return out;
}

AValue a_value_component(const Multipartition& mu, int n, const ChargeData& charges)
{
    const auto betas = beta_sets(mu, n, charges);

    Rational pairs(0);
    for (std::size_t i = 0; i < betas.size(); ++i) {
        const auto& bi = betas[i].entries;
        // within one beta-set: entries strictly decrease, so a > b picks the later one
        for (std::size_t s = 0; s < bi.size(); ++s)
            for (std::size_t t = s + 1; t < bi.size(); ++t) pairs += std::min(bi[s], bi[t]);
        for (std::size_t j = i + 1; j < betas.size(); ++j)
            for (const auto& a : bi)
                for (const auto& b : betas[j].entries) pairs += std::min(a, b);
    }

    Rational ramps(0);
    for (const auto& beta : betas)
        for (const auto& a : beta.entries)
            for (const auto& m : charges.m) ramps += clipped_triangle(floor(a), m);

    return AValue{pairs - ramps};
}

AValue a_value_r(const Multipartition& lambda, const ParameterSpec& spec)
{
    if (static_cast<int>(lambda.level()) != spec.r())
        throw ComponentMismatch("expected " + std::to_string(spec.r()) + " components, got " +
                                std::to_string(lambda.level()));
    const auto charges = charge_data(spec);
    const auto block = static_cast<std::size_t>(spec.fdelta());
    AValue total{Rational(0)};
    for (int b = 0; b < spec.pprime(); ++b)
        total.value += a_value_component(lambda.slice(static_cast<std::size_t>(b) * block, block),
                                         lambda.size(), charges)
                           .value;
    return total;
}

}  // namespace cyclo
