#include "cyclo/parameters.hpp"

#include "cyclo/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace cyclo {

RootOfUnity::RootOfUnity(long exponent, long order) : exponent_(0), order_(order)
{
    if (order <= 0) throw std::invalid_argument("root of unity order must be positive");
    exponent_ = ((exponent % order) + order) % order;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b)
{
    if (a.order_ != b.order_) throw std::invalid_argument("roots of unity of different orders");
    return RootOfUnity(a.exponent_ + b.exponent_, a.order_);
}

ParameterSpec build_parameters(int e, int p, int delta, std::vector<int> charges)
{
    if (e <= 1) throw InvalidOrder("e must be > 1, got " + std::to_string(e));
    if (p < 1) throw InvalidParameters("p must be >= 1, got " + std::to_string(p));
    if (delta < 1) throw InvalidParameters("delta must be >= 1, got " + std::to_string(delta));
    if (static_cast<int>(charges.size()) != delta)
        throw InvalidParameters("expected " + std::to_string(delta) + " charges, got " +
                                std::to_string(charges.size()));

    ParameterSpec spec;
    spec.e_ = e;
    spec.p_ = p;
    spec.delta_ = delta;
    spec.f_ = std::gcd(e, p);
    const int eprime = e / spec.f_;
    for (std::size_t k = 0; k < charges.size(); ++k) {
        if (charges[k] < 0 || charges[k] > eprime - 1)
            throw InvalidCharge("charge " + std::to_string(charges[k]) + " outside [0," +
                                std::to_string(eprime - 1) + "]");
        if (k > 0 && charges[k] < charges[k - 1]) throw InvalidCharge("charges must be weakly increasing");
    }
    spec.charges_ = std::move(charges);
    return spec;
}

ChargeData charge_data(const ParameterSpec& spec)
{
    ChargeData out;
    const int fd = spec.fdelta();
    for (int s = 1; s <= spec.f(); ++s)
        for (int k = 1; k <= spec.delta(); ++k)
            out.w.push_back(spec.charges()[static_cast<std::size_t>(k - 1)] + (s - 1) * spec.eprime());
    for (int j = 1; j <= fd; ++j)
        out.m.push_back(Rational(out.w[static_cast<std::size_t>(j - 1)]) - Rational(j * spec.e(), fd) +
                        Rational(spec.e()));
    return out;
}

std::vector<RootOfUnity> q_sequence(const ParameterSpec& spec)
{
    const long L = spec.L();
    const RootOfUnity eta_p(L / spec.p(), L);
    const RootOfUnity eta_e(L / spec.e(), L);
    std::vector<RootOfUnity> q;
    q.reserve(static_cast<std::size_t>(spec.r()));
    for (int j = 1; j <= spec.pprime(); ++j)
        for (int l = 0; l < spec.f(); ++l)
            for (int v : spec.charges())
                q.emplace_back(static_cast<long>(l * spec.pprime() + j - 1) * eta_p.exponent() +
                                   static_cast<long>(v) * eta_e.exponent(),
                               L);
    return q;
}

std::vector<RootOfUnity> build_Q(const ParameterSpec& spec)
{
    auto q = q_sequence(spec);
    std::map<long, std::size_t> first_at;
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto [it, inserted] = first_at.emplace(q[i].exponent(), i);
        if (!inserted)
            throw DuplicateParameter("Q_" + std::to_string(it->second + 1) + " = Q_" + std::to_string(i + 1) +
                                     " (exponent " + std::to_string(q[i].exponent()) + " mod " +
                                     std::to_string(q[i].order()) + ")");
    }
    return q;
}

std::vector<std::vector<std::size_t>> morita_split(std::span<const RootOfUnity> q, int e)
{
    if (q.empty()) return {};
    const long L = q.front().order();
    if (e < 1 || L % e != 0) throw std::invalid_argument("e must divide the order of Q's roots of unity");
    for (const auto& x : q)
        if (x.order() != L) throw std::invalid_argument("Q entries have different orders");

    // Q_i / Q_j is a power of eta_e = eta_L^{L/e} iff the exponents agree mod L/e.
    const long step = L / e;
    std::map<long, std::size_t> class_of;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto [it, inserted] = class_of.emplace(q[i].exponent() % step, classes.size());
        if (inserted) classes.emplace_back();
        classes[it->second].push_back(i);
    }
    return classes;
}

}  // namespace cyclo
