#include "cyclo/flotw.hpp"

#include "cyclo/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace cyclo {

Residue residue(const Node& node, const ChargeData& charges, int e)
{
    const int w = charges.w.at(static_cast<std::size_t>(node.component - 1));
    return Residue{(((node.column - node.row + w) % e) + e) % e};
}

namespace {

// lambda(upper)_k >= lambda(lower)_{k + shift} for every k >= 1 (components 1-based).
bool dominates_shifted(const Multipartition& lambda, int upper, int lower, int shift)
{
    const auto& hi = lambda[static_cast<std::size_t>(upper - 1)];
    const auto& lo = lambda[static_cast<std::size_t>(lower - 1)];
    for (int k = 1; k + shift <= lo.length(); ++k)
        if (hi.row(k) < lo.row(k + shift)) return false;
    return true;
}

}  // namespace

bool is_flotw(const Multipartition& lambda, const ParameterSpec& spec)
{
    const int f = spec.f();
    const int delta = spec.delta();
    const int fd = spec.fdelta();
    if (static_cast<int>(lambda.level()) != fd)
        throw ComponentMismatch("expected " + std::to_string(fd) + " components, got " +
                                std::to_string(lambda.level()));
    const auto& v = spec.charges();
    auto charge = [&](int k) { return v[static_cast<std::size_t>(k - 1)]; };
    const int wrap = charge(1) + spec.eprime() - charge(delta);

    for (int i = 1; i <= f; ++i)
        for (int j = 1; j <= delta - 1; ++j)
            if (!dominates_shifted(lambda, (i - 1) * delta + j, (i - 1) * delta + j + 1, charge(j + 1) - charge(j)))
                return false;
    for (int i = 1; i <= f - 1; ++i)
        if (!dominates_shifted(lambda, i * delta, i * delta + 1, wrap)) return false;
    if (!dominates_shifted(lambda, fd, 1, wrap)) return false;

    // condition 4
    const auto charges = charge_data(spec);
    std::map<int, std::set<int>> residues_by_length;
    for (int c = 1; c <= fd; ++c) {
        const auto& comp = lambda[static_cast<std::size_t>(c - 1)];
        for (int a = 1; a <= comp.length(); ++a)
            residues_by_length[comp.row(a)].insert(residue(Node{a, comp.row(a), c}, charges, spec.e()).exponent);
    }
    return std::none_of(residues_by_length.begin(), residues_by_length.end(),
                        [&](const auto& kv) { return static_cast<int>(kv.second.size()) == spec.e(); });
}

std::vector<Multipartition> enumerate_flotw(int nprime, const ParameterSpec& spec)
{
    std::vector<Multipartition> out;
    for (auto& mu : enumerate_multipartitions(nprime, static_cast<std::size_t>(spec.fdelta())))
        if (is_flotw(mu, spec)) out.push_back(std::move(mu));
    return out;
}

std::vector<Multipartition> assemble_block_tuples(int n, int pprime,
                                                  const std::vector<std::vector<Multipartition>>& blocks_by_size)
{
    std::vector<Multipartition> out;
    std::vector<Multipartition> chosen;
    std::function<void(const std::vector<int>&, std::size_t)> pick = [&](const std::vector<int>& sizes,
                                                                         std::size_t b) {
        if (b == sizes.size()) {
            out.push_back(concatenate(chosen));
            return;
        }
        for (const auto& block : blocks_by_size.at(static_cast<std::size_t>(sizes[b]))) {
            chosen.push_back(block);
            pick(sizes, b + 1);
            chosen.pop_back();
        }
    };
    for (const auto& sizes : enumerate_compositions(n, static_cast<std::size_t>(pprime))) pick(sizes, 0);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Multipartition> enumerate_lambda1(int n, const ParameterSpec& spec)
{
    std::vector<std::vector<Multipartition>> by_size;
    for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_flotw(k, spec));
    return assemble_block_tuples(n, spec.pprime(), by_size);
}

bool in_lambda1(const Multipartition& lambda, const ParameterSpec& spec)
{
    if (static_cast<int>(lambda.level()) != spec.r())
        throw ComponentMismatch("expected " + std::to_string(spec.r()) + " components, got " +
                                std::to_string(lambda.level()));
    const auto block = static_cast<std::size_t>(spec.fdelta());
    for (int b = 0; b < spec.pprime(); ++b)
        if (!is_flotw(lambda.slice(static_cast<std::size_t>(b) * block, block), spec)) return false;
    return true;
}

}  // namespace cyclo
