#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace wiretap {

bool is_prime(std::uint64_t n);
/// Smallest prime p with p > n.
std::uint64_t smallest_prime_above(std::uint64_t n);

/// Element of the prime field GF(q).
class FieldElem
{
public:
    FieldElem(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    /// Multiplicative inverse; DomainError for zero.
    FieldElem inverse() const;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

using FieldVector = std::vector<std::uint64_t>;

/// Row-major matrix over GF(q); entries are stored reduced.
class FieldMatrix
{
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t q);
    FieldMatrix(std::uint64_t q, const std::vector<FieldVector>& rows, std::size_t cols);

    static FieldMatrix identity(std::size_t n, std::uint64_t q);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint64_t modulus() const noexcept { return q_; }

    std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<FieldVector> row_list() const;

    void append_row(std::span<const std::uint64_t> row);
    /// Rows of `other` below this one; column counts must agree.
    void append_rows(const FieldMatrix& other);

    FieldVector multiply(std::span<const std::uint64_t> x) const;

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint64_t q_ = 2;
    std::vector<std::uint64_t> data_;
};

std::size_t ff_rank(const FieldMatrix& m);

/**
 * First vector b of GF(q)^n, scanning coordinates lexicographically, such that
 * prior ∪ basis_i ∪ {b} is linearly independent for every basis_i (and
 * prior ∪ {b} when there are no bases).
 *
 * Requires q > bases.size() and |prior| + |basis_i| + 1 <= n; throws
 * PreconditionViolated otherwise.
 */
FieldVector avoid_subspaces(std::size_t n, std::uint64_t q, const std::vector<FieldMatrix>& bases,
                            const FieldMatrix& prior);

/// d×n matrix V, full row rank, with V stacked on each basis_i still of full row rank.
FieldMatrix build_subspace(std::size_t n, std::size_t d, std::uint64_t q, const std::vector<FieldMatrix>& bases);

}  // namespace wiretap
