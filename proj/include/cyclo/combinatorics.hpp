#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cyclo {

/// Exact non-negative counts (tableau numbers grow factorially).
using Count = boost::multiprecision::cpp_int;

/// Default upper bound on |shape| for explicit tableau enumeration.
inline constexpr int kDefaultTableauCap = 8;

/// A weakly decreasing sequence of positive integers, stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    /// Number of nonzero rows.
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row `row` (1-based); 0 beyond the last row.
    int row(int row) const noexcept
    {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// An r-tuple of partitions. The component count is fixed at construction.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);
    /// The empty r-partition.
    static Multipartition empty(std::size_t r) { return Multipartition(std::vector<Partition>(r)); }

    const std::vector<Partition>& components() const noexcept { return components_; }
    const Partition& operator[](std::size_t c) const { return components_[c]; }
    std::size_t level() const noexcept { return components_.size(); }
    int size() const noexcept { return size_; }

    /// Component sizes |lambda(1)|, ..., |lambda(r)|.
    std::vector<int> component_sizes() const;

    /// The contiguous slice of `count` components starting at `first`.
    Multipartition slice(std::size_t first, std::size_t count) const;

    /// Structural order (used for containers); see canonical_less for the user-visible order.
    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend auto operator<=>(const Multipartition& a, const Multipartition& b)
    {
        return a.components_ <=> b.components_;
    }

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

/// Concatenate blocks component-wise into one multipartition.
Multipartition concatenate(const std::vector<Multipartition>& blocks);

/// Canonical total order: component sizes compared reverse-lexicographically
/// (weight early first), then the components themselves reverse-lexicographically.
/// Enumeration order of enumerate_multipartitions is increasing in this order.
bool canonical_less(const Multipartition& a, const Multipartition& b);

/// All partitions of n in reverse-lexicographic order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

/// Compositions of n into `parts` non-negative summands, reverse-lexicographic.
std::vector<std::vector<int>> enumerate_compositions(int n, std::size_t parts);

/// All r-partitions of n: compositions of n into r parts, then componentwise partition order.
std::vector<Multipartition> enumerate_multipartitions(int n, std::size_t r);

/// Number of standard tableaux of a single partition (hook length formula).
Count hook_length_count(const Partition& shape);

/// Number of standard tableaux of a multipartition:
/// multinomial(n; |lambda(1)|, ..., |lambda(r)|) * prod_i f(lambda(i)).
Count syt_count(const Multipartition& shape);

/// A standard filling of a multipartition by 1..n.
class StandardTableau {
public:
    using Filling = std::vector<std::vector<std::vector<int>>>;  // [component][row][column]

    /// Throws std::invalid_argument if the filling is not standard for the shape.
    StandardTableau(Multipartition shape, Filling filling);

    const Multipartition& shape() const noexcept { return shape_; }
    const Filling& filling() const noexcept { return filling_; }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b)
    {
        return a.filling_ == b.filling_;
    }
    friend auto operator<=>(const StandardTableau& a, const StandardTableau& b)
    {
        return a.filling_ <=> b.filling_;
    }

private:
    Multipartition shape_;
    Filling filling_;
};

/// All standard tableaux of `shape`; throws CapExceeded if shape.size() > cap.
std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& shape,
                                                         int cap = kDefaultTableauCap);

/// "[[2,1],[],[1]]"
std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);

/// Parses "2,1||1" (components split by '|', parts by ','). Throws std::invalid_argument.
Multipartition parse_multipartition(const std::string& text);

}  // namespace cyclo
