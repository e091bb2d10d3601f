#pragma once

#include "cyclo/combinatorics.hpp"
#include "cyclo/flotw.hpp"
#include "cyclo/parameters.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclo {

/// How the i-signature is read and reduced.
///
/// After listing the addable (A) and removable (R) i-nodes in reading order, adjacent
/// "R A" pairs are cancelled until the word has the form A...A R...R. The good addable
/// node is the last surviving A.
enum class SignatureOrder {
    /// components ascending, rows top to bottom
    ascending,
    /// components descending, rows bottom to top
    descending,
    /// ascending reading, but the *first* surviving A is taken. This is not a crystal
    /// operator; it exists so the count-bijection check can be shown to catch a wrong rule.
    leftmost,
};

std::string to_string(SignatureOrder order);
/// Accepts "ascending", "descending", "leftmost". Throws std::invalid_argument.
SignatureOrder parse_signature_order(const std::string& text);

struct SignatureEntry {
    char kind;  // 'A' or 'R'
    Node node;
};

/// The addable/removable i-nodes of `shape` in reading order.
std::vector<SignatureEntry> i_signature(const Multipartition& shape, int i, const ChargeData& charges, int e,
                                        SignatureOrder order = SignatureOrder::ascending);

/// i_signature encoded as a string of 'A' / 'R'.
std::string addable_removable_profile(const Multipartition& shape, int i, const ChargeData& charges, int e,
                                      SignatureOrder order = SignatureOrder::ascending);

/// The good addable i-node, if any.
std::optional<Node> good_node(const Multipartition& shape, int i, const ChargeData& charges, int e,
                              SignatureOrder order = SignatureOrder::ascending);

/// The shape with `node` added (node must be addable).
Multipartition add_node(const Multipartition& shape, const Node& node);

/// Crystal layers 0..nmax grown from the empty f*delta-partition by good-node additions.
/// Layer k lists the vertices of depth k in canonical order.
std::vector<std::vector<Multipartition>> kleshchev_layers(int nmax, const ParameterSpec& spec,
                                                          SignatureOrder order = SignatureOrder::ascending);

/// Kleshchev f*delta-partitions of nprime (the depth-nprime crystal vertices).
std::vector<Multipartition> enumerate_kleshchev(int nprime, const ParameterSpec& spec,
                                                SignatureOrder order = SignatureOrder::ascending);

/// Lambda^0: p'-tuples of Kleshchev f*delta-partitions of total size n; canonical order.
std::vector<Multipartition> enumerate_lambda0(int n, const ParameterSpec& spec,
                                              SignatureOrder order = SignatureOrder::ascending);

}  // namespace cyclo
