#include "cyclo/combinatorics.hpp"

#include "cyclo/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components))
{
    for (const auto& c : components_) size_ += c.size();
}

std::vector<int> Multipartition::component_sizes() const
{
    std::vector<int> sizes;
    sizes.reserve(components_.size());
    for (const auto& c : components_) sizes.push_back(c.size());
    return sizes;
}

Multipartition Multipartition::slice(std::size_t first, std::size_t count) const
{
    if (first + count > components_.size())
        throw ComponentMismatch("slice beyond the last component");
    return Multipartition({components_.begin() + static_cast<std::ptrdiff_t>(first),
                           components_.begin() + static_cast<std::ptrdiff_t>(first + count)});
}

Multipartition concatenate(const std::vector<Multipartition>& blocks)
{
    std::vector<Partition> all;
    for (const auto& b : blocks) all.insert(all.end(), b.components().begin(), b.components().end());
    return Multipartition(std::move(all));
}

bool canonical_less(const Multipartition& a, const Multipartition& b)
{
    const auto sa = a.component_sizes();
    const auto sb = b.component_sizes();
    if (sa != sb) return sa > sb;
    for (std::size_t c = 0; c < std::min(a.level(), b.level()); ++c) {
        if (a[c] != b[c]) return a[c].parts() > b[c].parts();
    }
    return a.level() < b.level();
}

namespace {

void partitions_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        partitions_into(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

void compositions_into(int remaining, std::size_t slots, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out)
{
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        prefix.push_back(first);
        compositions_into(remaining - first, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_into(n, n, prefix, out);
    return out;
}

std::vector<std::vector<int>> enumerate_compositions(int n, std::size_t parts)
{
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (parts == 0) throw std::invalid_argument("at least one part required");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    compositions_into(n, parts, prefix, out);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, std::size_t r)
{
    if (r == 0) throw std::invalid_argument("r must be positive");
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k));

    std::vector<Multipartition> out;
    std::vector<Partition> comps;
    std::function<void(const std::vector<int>&, std::size_t)> fill = [&](const std::vector<int>& sizes,
                                                                         std::size_t c) {
        if (c == sizes.size()) {
            out.emplace_back(comps);
            return;
        }
        for (const auto& p : by_size[static_cast<std::size_t>(sizes[c])]) {
            comps.push_back(p);
            fill(sizes, c + 1);
            comps.pop_back();
        }
    };
    for (const auto& sizes : enumerate_compositions(n, r)) fill(sizes, 0);
    return out;
}

Count hook_length_count(const Partition& shape)
{
    Count numerator = 1;
    for (int k = 2; k <= shape.size(); ++k) numerator *= k;
    Count hooks = 1;
    for (int a = 1; a <= shape.length(); ++a) {
        for (int b = 1; b <= shape.row(a); ++b) {
            int leg = 0;
            while (shape.row(a + leg + 1) >= b) ++leg;
            hooks *= shape.row(a) - b + leg + 1;
        }
    }
    return numerator / hooks;
}

Count syt_count(const Multipartition& shape)
{
    // multinomial built incrementally as a product of binomials
    Count total = 1;
    int placed = 0;
    for (const auto& comp : shape.components()) {
        for (int k = 1; k <= comp.size(); ++k) {
            total *= placed + k;
            total /= k;
        }
        placed += comp.size();
        total *= hook_length_count(comp);
    }
    return total;
}

StandardTableau::StandardTableau(Multipartition shape, Filling filling)
    : shape_(std::move(shape)), filling_(std::move(filling))
{
    const int n = shape_.size();
    if (filling_.size() != shape_.level())
        throw std::invalid_argument("filling has the wrong number of components");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t c = 0; c < filling_.size(); ++c) {
        const auto& comp = shape_[c];
        if (static_cast<int>(filling_[c].size()) != comp.length())
            throw std::invalid_argument("filling row count does not match shape");
        for (int a = 1; a <= comp.length(); ++a) {
            const auto& row = filling_[c][static_cast<std::size_t>(a - 1)];
            if (static_cast<int>(row.size()) != comp.row(a))
                throw std::invalid_argument("filling row length does not match shape");
            for (int b = 1; b <= comp.row(a); ++b) {
                const int x = row[static_cast<std::size_t>(b - 1)];
                if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
                    throw std::invalid_argument("entries must be a permutation of 1..n");
                seen[static_cast<std::size_t>(x)] = true;
                if (b > 1 && row[static_cast<std::size_t>(b - 2)] >= x)
                    throw std::invalid_argument("rows must strictly increase");
                if (a > 1 && filling_[c][static_cast<std::size_t>(a - 2)][static_cast<std::size_t>(b - 1)] >= x)
                    throw std::invalid_argument("columns must strictly increase");
            }
        }
    }
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& shape, int cap)
{
    if (shape.size() > cap)
        throw CapExceeded("tableau enumeration for size " + std::to_string(shape.size()) +
                          " exceeds cap " + std::to_string(cap));

    // Place n, n-1, ..., 1 successively into removable corners of the shrinking shape.
    std::vector<std::vector<int>> rows;
    for (const auto& comp : shape.components()) rows.push_back(comp.parts());

    StandardTableau::Filling filling(shape.level());
    for (std::size_t c = 0; c < shape.level(); ++c) {
        filling[c].resize(static_cast<std::size_t>(shape[c].length()));
        for (int a = 1; a <= shape[c].length(); ++a)
            filling[c][static_cast<std::size_t>(a - 1)].assign(static_cast<std::size_t>(shape[c].row(a)), 0);
    }

    std::vector<StandardTableau> out;
    std::function<void(int)> place = [&](int entry) {
        if (entry == 0) {
            out.emplace_back(shape, filling);
            return;
        }
        for (std::size_t c = 0; c < rows.size(); ++c) {
            auto& comp = rows[c];
            for (std::size_t a = 0; a < comp.size(); ++a) {
                const bool corner = comp[a] > 0 && (a + 1 == comp.size() || comp[a + 1] < comp[a]);
                if (!corner) continue;
                filling[c][a][static_cast<std::size_t>(comp[a] - 1)] = entry;
                --comp[a];
                place(entry - 1);
                ++comp[a];
            }
        }
    };
    place(shape.size());
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (int k = 1; k <= p.length(); ++k) {
        if (k > 1) s += ',';
        s += std::to_string(p.row(k));
    }
    return s + "]";
}

std::string to_string(const Multipartition& m)
{
    std::string s = "[";
    for (std::size_t c = 0; c < m.level(); ++c) {
        if (c > 0) s += ',';
        s += to_string(m[c]);
    }
    return s + "]";
}

Multipartition parse_multipartition(const std::string& text)
{
    std::vector<Partition> comps;
    std::stringstream components(text);
    std::string comp;
    auto parse_component = [](const std::string& body) {
        std::vector<int> parts;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() || item == "-") continue;
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument("bad part '" + item + "'");
            parts.push_back(value);
        }
        return Partition(std::move(parts));
    };
    while (std::getline(components, comp, '|')) comps.push_back(parse_component(comp));
    if (!text.empty() && text.back() == '|') comps.emplace_back();
    if (text.empty()) comps.emplace_back();
    return Multipartition(std::move(comps));
}

}  // namespace cyclo
