#pragma once

#include "cyclo/combinatorics.hpp"
#include "cyclo/parameters.hpp"

#include <vector>

namespace cyclo {

/// A box of a multipartition's diagram, 1-based: row a, column b, component c.
struct Node {
    int row;
    int column;
    int component;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Residue eta_e^{exponent}, exponent in [0, e - 1].
struct Residue {
    int exponent;

    friend bool operator==(const Residue&, const Residue&) = default;
};

/// (b - a + w_c) mod e, with w the extended charge sequence.
Residue residue(const Node& node, const ChargeData& charges, int e);

/// The four FLOTW conditions for an f*delta-partition:
///  1. lambda((i-1)delta + j)_k >= lambda((i-1)delta + j + 1)_{k + v_{j+1} - v_j}
///  2. lambda(i delta)_k       >= lambda(i delta + 1)_{k + v_1 + e' - v_delta}
///  3. lambda(f delta)_k       >= lambda(1)_{k + v_1 + e' - v_delta}
///  4. for each k, the residues of the row ends of the length-k rows do not cover all of Z/e.
/// Throws ComponentMismatch unless lambda has f*delta components.
bool is_flotw(const Multipartition& lambda, const ParameterSpec& spec);

/// FLOTW f*delta-partitions of nprime, in canonical order.
std::vector<Multipartition> enumerate_flotw(int nprime, const ParameterSpec& spec);

/// Lambda^1: r-partitions of n whose p' consecutive blocks are all FLOTW; canonical order.
std::vector<Multipartition> enumerate_lambda1(int n, const ParameterSpec& spec);

/// True iff every block of the r-partition is FLOTW.
bool in_lambda1(const Multipartition& lambda, const ParameterSpec& spec);

/// Assembles p'-tuples of blocks of total size n from per-size block lists
/// (blocks_by_size[k] lists the admissible blocks of size k); canonical order.
std::vector<Multipartition> assemble_block_tuples(int n, int pprime,
                                                  const std::vector<std::vector<Multipartition>>& blocks_by_size);

}  // namespace cyclo
