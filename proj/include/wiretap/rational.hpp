#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace wiretap {

/// Reduced fraction with a positive denominator. GMP keeps mpq values canonical.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
using RatVector = std::vector<BigRational>;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const BigRational& r);
BigRational parse_rational(const std::string& text);

/// A rational that may also be +infinity (infeasible covering, unbounded packing).
class ExtRational
{
public:
    ExtRational() = default;
    ExtRational(BigRational v) : value_(std::move(v)) {}

    static ExtRational infinity()
    {
        ExtRational r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const noexcept { return infinite_; }
    const BigRational& value() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b)
    {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b)
    {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

private:
    BigRational value_{0};
    bool infinite_ = false;
};

/// Serialized as "inf" when infinite.
std::string to_string(const ExtRational& r);

/// Dense row-major matrix of rationals.
class RatMatrix
{
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<BigRational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const BigRational> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }

    /// Rows picked by index, in the given order.
    RatMatrix select_rows(std::span<const std::size_t> indices) const;
    RatVector multiply(std::span<const BigRational> x) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

std::size_t rank(const RatMatrix& m);

/// Unique solution of s·x = b for square s; throws SingularMatrix when rank < d.
RatVector solve_square(const RatMatrix& s, std::span<const BigRational> b);
/// Same as solve_square but reports singularity with nullopt.
std::optional<RatVector> try_solve_square(const RatMatrix& s, std::span<const BigRational> b);

/// Least g > 0 such that g·v is integral.
BigInt lcm_of_denominators(std::span<const BigRational> v);

BigRational sum(std::span<const BigRational> v);

}  // namespace wiretap
