#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "young/representations.hpp"

namespace young {

struct RecursionStats {
    std::uint64_t ops = 0;  // two-term combinations written, one per (row, column)
    int levels = 0;
};

// Columns in depth order; column T is T_l applied to column s_l(T) for the smallest descent l.
// Levels are split across up to `threads` workers.
Matrix transition_recursive(const SeminormalModule& m, int threads = 1, RecursionStats* stats = nullptr);

// Column of A reached along an arbitrary walk from C, summing the weights of all subpaths.
SparseColumn pathsum_column(const SeminormalModule& m, const Path& walk);
// Every column along its lexicographically first shortest path; refuses n > max_n.
Matrix transition_pathsum(const SeminormalModule& m, int max_n = 7);

// Generator matrices applied to e_C along a reduced word of w_T.
SparseColumn transition_column_word(const SeminormalModule& m, const std::vector<Matrix>& generators, int node);
SparseColumn transition_column_word(const SeminormalModule& m, int node);
Matrix transition_word(const SeminormalModule& m);

// Product over inv(T) of (off + a_{i,j}(T)).
std::vector<Scalar> diagonal_closed_form(const SeminormalModule& m);
// Product over inv(T) of (off + a)^2 / (off^2 - a^2).
std::vector<Scalar> orthogonal_diag_squared(const SeminormalModule& m);

struct OrthogonalFailure {
    Edge edge;
    std::string identity;
};
// Squared step identity on every upward edge, the squared orthogonal entries,
// and their symmetry when off = 1.
std::vector<OrthogonalFailure> check_orthogonal(const SeminormalModule& m, const std::vector<Scalar>& d2);

// Structural pattern: upper triangular, zero unless S <= T in Bruhat order, diagonal blocks per depth.
struct StructureReport {
    bool upper_triangular = true;
    bool bruhat_support = true;
    bool depth_blocks_diagonal = true;
    bool ok() const { return upper_triangular && bruhat_support && depth_blocks_diagonal; }
};
StructureReport check_structure(const BruhatGraph& g, const Matrix& a);

struct GrnTransition {
    Matrix matrix;
    std::vector<Tableau> basis;  // alphabet-major, Kronecker order within each alphabet
    // order[k] = position in basis of canonical node k
    std::vector<int> canonical_positions(const BruhatGraph& g) const;
    Matrix in_canonical_order(const BruhatGraph& g) const;
};
// Direct sum over alphabets of the Kronecker product of the component transition matrices.
GrnTransition grn_transition(const ShapePtr& shape);

}  // namespace young
