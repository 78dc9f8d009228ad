#pragma once

// Kostka matrices and their inverses built by enumeration.

#include "kostka/core.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace kostka {

enum class IndexKind { Compositions, Partitions };

// Dense square matrix with rows and columns labelled by the same index list.
struct Matrix {
    IndexKind kind = IndexKind::Partitions;
    int degree = 0;
    std::vector<Sequence> labels;
    std::vector<std::int64_t> data;

    std::size_t dim() const { return labels.size(); }
    std::int64_t& at(std::size_t i, std::size_t j) { return data[i * dim() + j]; }
    std::int64_t at(std::size_t i, std::size_t j) const { return data[i * dim() + j]; }
    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix zero_matrix(IndexKind kind, int n);

// Entries are computed in parallel over rows when jobs > 1.
Matrix nsym_K(int n, int jobs = 1);
Matrix nsym_Kinv(int n, int jobs = 1);
Matrix sym_K(int n, int jobs = 1);
Matrix sym_Kinv(int n, int jobs = 1);
// Signed special rim hook tableaux of shape mu and content lambda.
Matrix sym_Kinv_srht(int n, int jobs = 1);
// Exact inverse by fraction-free elimination. Throws Domain when the matrix is
// singular or the inverse is not integral, Structural on overflow.
Matrix exact_inverse(const Matrix& a);

Matrix mat_mul(const Matrix& a, const Matrix& b);
bool is_identity(const Matrix& a);
bool is_upper_unitriangular(const Matrix& a);

struct JTTerm {
    int sign;
    Partition exponents;
    friend bool operator==(const JTTerm&, const JTTerm&) = default;
    friend auto operator<=>(const JTTerm&, const JTTerm&) = default;
};

// Nonzero terms of det(h_{lambda_i - i + j}), sorted.
std::vector<JTTerm> jacobi_trudi_terms(const Partition& shape);
// (sign(R), content(R)) over all special rim hook tableaux of the shape, sorted.
std::vector<JTTerm> srht_terms(const Partition& shape);

// Runs fn(i) for i in [0, count) over the given number of worker threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace kostka
