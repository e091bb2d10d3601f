#include "cyclo/kleshchev.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclo {

std::string to_string(SignatureOrder order)
{
    switch (order) {
    case SignatureOrder::ascending: return "ascending";
    case SignatureOrder::descending: return "descending";
    case SignatureOrder::leftmost: return "leftmost";
    }
    return "?";
}

SignatureOrder parse_signature_order(const std::string& text)
{
    if (text == "ascending") return SignatureOrder::ascending;
    if (text == "descending") return SignatureOrder::descending;
    if (text == "leftmost") return SignatureOrder::leftmost;
    throw std::invalid_argument("unknown signature order '" + text + "'");
}

std::vector<SignatureEntry> i_signature(const Multipartition& shape, int i, const ChargeData& charges, int e,
                                        SignatureOrder order)
{
    if (i < 0 || i >= e) throw std::invalid_argument("residue must lie in [0, e-1]");
    std::vector<SignatureEntry> sig;
    for (std::size_t c0 = 0; c0 < shape.level(); ++c0) {
        const auto& comp = shape[c0];
        const int c = static_cast<int>(c0) + 1;
        for (int a = 1; a <= comp.length() + 1; ++a) {
            const int len = comp.row(a);
            if (len > 0 && len > comp.row(a + 1)) {
                const Node node{a, len, c};
                if (residue(node, charges, e).exponent == i) sig.push_back({'R', node});
            }
            if (a == 1 || comp.row(a - 1) > len) {
                const Node node{a, len + 1, c};
                if (residue(node, charges, e).exponent == i) sig.push_back({'A', node});
            }
        }
    }
    if (order == SignatureOrder::descending) std::reverse(sig.begin(), sig.end());
    return sig;
}

std::string addable_removable_profile(const Multipartition& shape, int i, const ChargeData& charges, int e,
                                      SignatureOrder order)
{
    std::string out;
    for (const auto& entry : i_signature(shape, i, charges, e, order)) out += entry.kind;
    return out;
}

std::optional<Node> good_node(const Multipartition& shape, int i, const ChargeData& charges, int e,
                              SignatureOrder order)
{
    std::vector<SignatureEntry> reduced;
    for (const auto& entry : i_signature(shape, i, charges, e, order)) {
        if (entry.kind == 'A' && !reduced.empty() && reduced.back().kind == 'R')
            reduced.pop_back();
        else
            reduced.push_back(entry);
    }
    // reduced = A...A R...R
    const auto last_a = std::find_if(reduced.rbegin(), reduced.rend(), [](const auto& s) { return s.kind == 'A'; });
    if (last_a == reduced.rend()) return std::nullopt;
    if (order == SignatureOrder::leftmost) return reduced.front().node;
    return last_a->node;
}

Multipartition add_node(const Multipartition& shape, const Node& node)
{
    auto comps = shape.components();
    auto& comp = comps.at(static_cast<std::size_t>(node.component - 1));
    auto parts = comp.parts();
    if (node.row == comp.length() + 1 && node.column == 1)
        parts.push_back(1);
    else if (node.row >= 1 && node.row <= comp.length() && node.column == comp.row(node.row) + 1)
        ++parts[static_cast<std::size_t>(node.row - 1)];
    else
        throw std::invalid_argument("node is not addable");
    comp = Partition(std::move(parts));  // validates the shape stays a partition
    return Multipartition(std::move(comps));
}

std::vector<std::vector<Multipartition>> kleshchev_layers(int nmax, const ParameterSpec& spec, SignatureOrder order)
{
    const auto charges = charge_data(spec);
    std::vector<std::vector<Multipartition>> layers;
    if (nmax < 0) return layers;
    layers.push_back({Multipartition::empty(static_cast<std::size_t>(spec.fdelta()))});
    for (int depth = 1; depth <= nmax; ++depth) {
        std::set<Multipartition> next;
        for (const auto& vertex : layers.back())
            for (int i = 0; i < spec.e(); ++i)
                if (auto node = good_node(vertex, i, charges, spec.e(), order)) next.insert(add_node(vertex, *node));
        std::vector<Multipartition> layer(next.begin(), next.end());
        std::sort(layer.begin(), layer.end(), canonical_less);
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<Multipartition> enumerate_kleshchev(int nprime, const ParameterSpec& spec, SignatureOrder order)
{
    if (nprime < 0) return {};
    return kleshchev_layers(nprime, spec, order).back();
}

std::vector<Multipartition> enumerate_lambda0(int n, const ParameterSpec& spec, SignatureOrder order)
{
    if (n < 0) return {};
    return assemble_block_tuples(n, spec.pprime(), kleshchev_layers(n, spec, order));
}

}  // namespace cyclo
