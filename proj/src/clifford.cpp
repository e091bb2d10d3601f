#include "cyclo/clifford.hpp"

#include "cyclo/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cyclo {

VarpiAction::VarpiAction(std::vector<std::size_t> image) : image_(std::move(image))
{
    std::vector<bool> hit(image_.size(), false);
    for (auto x : image_) {
        if (x >= image_.size() || hit[x]) throw std::invalid_argument("not a permutation");
        hit[x] = true;
    }
}

VarpiAction VarpiAction::inverse() const
{
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return VarpiAction(std::move(inv));
}

VarpiAction VarpiAction::power(int k) const
{
    if (k < 0) throw std::invalid_argument("negative power");
    std::vector<std::size_t> out(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        std::size_t x = i;
        for (int step = 0; step < k; ++step) x = image_[x];
        out[i] = x;
    }
    return VarpiAction(std::move(out));
}

bool VarpiAction::is_identity() const
{
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

std::vector<std::size_t> VarpiAction::cycle_type() const
{
    std::vector<bool> seen(image_.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t x = i; !seen[x]; x = image_[x]) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

VarpiAction varpi(const ParameterSpec& spec)
{
    const int r = spec.r();
    const int fd = spec.fdelta();
    const int delta = spec.delta();
    std::vector<std::size_t> image(static_cast<std::size_t>(r));
    for (int i = 1; i <= r; ++i) {
        int target;
        if (i <= (spec.pprime() - 1) * fd)
            target = i + fd;
        else if (i <= r - delta)
            target = i - r + (spec.f() + 1) * delta;
        else
            target = i - r + delta;
        image[static_cast<std::size_t>(i - 1)] = static_cast<std::size_t>(target - 1);
    }
    VarpiAction action(std::move(image));

    const auto q = q_sequence(spec);
    const RootOfUnity eta_p(spec.L() / spec.p(), spec.L());
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[action(i)] != eta_p * q[i])
            throw InternalInconsistency("block formula for varpi disagrees with Q_varpi(i) = eta_p Q_i at i = " +
                                        std::to_string(i + 1));
    return action;
}

Multipartition apply_varpi(const Multipartition& lambda, const VarpiAction& action)
{
    if (lambda.level() != action.size())
        throw ComponentMismatch("multipartition level does not match the permutation");
    std::vector<Partition> out(lambda.level());
    for (std::size_t i = 0; i < lambda.level(); ++i) out[action(i)] = lambda[i];
    return Multipartition(std::move(out));
}

StandardTableau apply_varpi(const StandardTableau& tableau, const VarpiAction& action)
{
    const auto& filling = tableau.filling();
    if (filling.size() != action.size())
        throw ComponentMismatch("tableau level does not match the permutation");
    StandardTableau::Filling out(filling.size());
    for (std::size_t i = 0; i < filling.size(); ++i) out[action(i)] = filling[i];
    return StandardTableau(apply_varpi(tableau.shape(), action), std::move(out));
}

OrbitDatum orbit(const Multipartition& lambda, const VarpiAction& action)
{
    std::vector<Multipartition> members{lambda};
    for (auto next = apply_varpi(lambda, action); next != lambda; next = apply_varpi(next, action))
        members.push_back(next);

    const auto rep = std::min_element(members.begin(), members.end(), canonical_less);
    std::rotate(members.begin(), rep, members.end());
    const int o = static_cast<int>(members.size());
    return OrbitDatum{members.front(), o, std::move(members)};
}

std::vector<OrbitDatum> orbits_of(const std::vector<Multipartition>& universe, const VarpiAction& action)
{
    std::set<Multipartition> seen;
    std::vector<OrbitDatum> out;
    for (const auto& lambda : universe) {
        if (seen.contains(lambda)) continue;
        auto datum = orbit(lambda, action);
        seen.insert(datum.orbit.begin(), datum.orbit.end());
        out.push_back(std::move(datum));
    }
    return out;
}

int eigen_index_count(const Multipartition& lambda, int o_lambda, int p)
{
    if (lambda.size() == 0) return 1;
    return p / o_lambda;
}

std::vector<SemisimpleLabel> semisimple_labels(int n, const ParameterSpec& spec)
{
    const auto action = varpi(spec);
    std::vector<SemisimpleLabel> out;
    for (const auto& datum : orbits_of(enumerate_multipartitions(n, static_cast<std::size_t>(spec.r())), action)) {
        const auto& rep = datum.representative;
        const Count dimension = n == 0 ? Count(1) : syt_count(rep) * datum.o_lambda / spec.p();
        const auto a = a_value_r(rep, spec);
        for (int i = 0; i < eigen_index_count(rep, datum.o_lambda, spec.p()); ++i)
            out.push_back(SemisimpleLabel{rep, datum.o_lambda, i, dimension, a});
    }
    std::sort(out.begin(), out.end(), [](const SemisimpleLabel& x, const SemisimpleLabel& y) {
        if (x.a_value != y.a_value) return x.a_value < y.a_value;
        if (x.representative != y.representative) return canonical_less(x.representative, y.representative);
        return x.eigen_index < y.eigen_index;
    });
    return out;
}

std::vector<std::vector<StandardTableau>> tableau_orbits(const Multipartition& lambda, const VarpiAction& action,
                                                         int cap)
{
    const auto tableaux = enumerate_standard_tableaux(lambda, cap);
    const auto step = action.power(orbit(lambda, action).o_lambda);

    std::set<StandardTableau> seen;
    std::vector<std::vector<StandardTableau>> out;
    for (const auto& t : tableaux) {
        if (seen.contains(t)) continue;
        std::vector<StandardTableau> members{t};
        seen.insert(t);
        for (auto next = apply_varpi(t, step); next != t; next = apply_varpi(next, step)) {
            members.push_back(next);
            seen.insert(next);
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace cyclo
