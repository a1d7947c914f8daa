#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccgraph/field.hpp"

namespace ccgraph {

/// Row-major square matrix over a finite field; entries are field ids.
struct MatrixRep {
    std::uint32_t size = 0;
    std::vector<std::uint32_t> entries;

    MatrixRep() = default;
    explicit MatrixRep(std::uint32_t n) : size(n), entries(std::size_t(n) * n, 0) {}

    std::uint32_t& at(std::uint32_t r, std::uint32_t c) {
        return entries[std::size_t(r) * size + c];
    }
    std::uint32_t at(std::uint32_t r, std::uint32_t c) const {
        return entries[std::size_t(r) * size + c];
    }
    bool operator==(const MatrixRep&) const = default;
};

MatrixRep zero_matrix(std::uint32_t n);
MatrixRep identity_matrix(const FiniteField& f, std::uint32_t n);
/// Single nilpotent Jordan block: ones on the superdiagonal. jordan_block(1)
/// is the 1x1 zero matrix.
MatrixRep jordan_block(std::uint32_t l);
/// Block-diagonal join of a and b.
MatrixRep diag_join(const MatrixRep& a, const MatrixRep& b);

MatrixRep mat_add(const FiniteField& f, const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_sub(const FiniteField& f, const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_neg(const FiniteField& f, const MatrixRep& a);
MatrixRep mat_mul(const FiniteField& f, const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_pow(const FiniteField& f, MatrixRep a, std::uint64_t e);
std::uint32_t mat_trace(const FiniteField& f, const MatrixRep& a);
bool mat_is_zero(const MatrixRep& a);
bool is_strictly_upper_triangular(const MatrixRep& a);
std::string render_matrix(const FiniteField& f, const MatrixRep& a);

std::uint32_t rank(const FiniteField& f, MatrixRep a);
std::optional<MatrixRep> inverse(const FiniteField& f, const MatrixRep& a);

/// Least k >= 1 with a^k = 0; empty when a is not nilpotent. The index of
/// the zero matrix is 1.
std::optional<std::uint32_t> nilpotency_index(const FiniteField& f,
                                              const MatrixRep& a);

/// Weakly decreasing block sizes summing to the matrix dimension.
struct JordanPartition {
    std::vector<std::uint32_t> blocks;
    bool operator==(const JordanPartition&) const = default;
};

/// Jordan type of a nilpotent matrix, recovered from the rank sequence
/// r_k = rank(a^k): the number of blocks of size >= k is r_{k-1} - r_k.
/// Throws std::invalid_argument when a is not nilpotent.
JordanPartition jordan_partition(const FiniteField& f, const MatrixRep& a);

/// Block-diagonal matrix of nilpotent Jordan blocks with the given sizes.
MatrixRep matrix_from_partition(const JordanPartition& part);

/// Characteristic polynomial det(tI - a), monic of degree n. coefficients[i]
/// is the coefficient of t^i. Computed division-free so it is exact over any
/// characteristic.
struct CharPoly {
    std::vector<std::uint32_t> coefficients;
    bool operator==(const CharPoly&) const = default;
};
CharPoly char_poly(const FiniteField& f, const MatrixRep& a);
std::string render_char_poly(const FiniteField& f, const CharPoly& cp);

/// basis_change columns span image(a^n) then kernel(a^n); conjugating by it
/// puts a into block-diagonal form with an invertible block (size = rank of
/// a^n) and a nilpotent block.
struct FittingDecomposition {
    MatrixRep basis_change;
    MatrixRep invertible_part;
    MatrixRep nilpotent_part;
};
FittingDecomposition fitting_decomposition(const FiniteField& f,
                                           const MatrixRep& a);

/// Invertible P with P a P^{-1} = b, found by scanning all matrices. Only
/// supported while the general linear group has at most 10^6 elements;
/// throws Error beyond that.
std::optional<MatrixRep> similarity_witness(const FiniteField& f,
                                            const MatrixRep& a,
                                            const MatrixRep& b);

/// Similarity test: Jordan types when both sides are nilpotent, brute-force
/// witness search otherwise.
bool similar(const FiniteField& f, const MatrixRep& a, const MatrixRep& b);

/// Order of GL_n over the field, capped: empty when it exceeds 10^6.
std::optional<std::uint64_t> gl_order_capped(const FiniteField& f,
                                             std::uint32_t n);

} // namespace ccgraph
