#include "wiretap/rational.hpp"

#include <utility>

#include "wiretap/error.hpp"

namespace wiretap {

std::string to_string(const BigRational& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigRational parse_rational(const std::string& text)
{
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return BigRational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return BigRational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    }
}

const BigRational& ExtRational::value() const
{
    if (infinite_) throw Error(ErrorCode::DomainError, "value() of an infinite quantity");
    return value_;
}

std::string to_string(const ExtRational& r)
{
    return r.is_infinite() ? std::string("inf") : to_string(r.value());
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigRational(0))
{
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<BigRational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const
{
    RatMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
    return out;
}

RatVector RatMatrix::multiply(std::span<const BigRational> x) const
{
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    RatVector out(rows_, BigRational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * x[c];
    return out;
}

namespace {

// Reduces `m` in place to row echelon form and returns the rank. When `rhs`
// is given it undergoes the same row operations.
std::size_t eliminate(RatMatrix& m, RatVector* rhs)
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col) == 0) ++found;
        if (found == m.rows()) continue;
        if (found != pivot_row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));
            if (rhs) std::swap((*rhs)[found], (*rhs)[pivot_row]);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col) == 0) continue;
            BigRational factor = m(r, col) / m(pivot_row, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
            if (rhs) (*rhs)[r] -= factor * (*rhs)[pivot_row];
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t rank(const RatMatrix& m)
{
    RatMatrix work = m;
    return eliminate(work, nullptr);
}

std::optional<RatVector> try_solve_square(const RatMatrix& s, std::span<const BigRational> b)
{
    if (s.rows() != s.cols() || b.size() != s.rows())
        throw Error(ErrorCode::DimensionMismatch, "solve_square expects a square system");
    RatMatrix work = s;
    RatVector rhs(b.begin(), b.end());
    if (eliminate(work, &rhs) < s.rows()) return std::nullopt;
    // Full rank: reduced form is diagonal with pivots on the diagonal.
    for (std::size_t i = 0; i < s.rows(); ++i) rhs[i] /= work(i, i);
    return rhs;
}

RatVector solve_square(const RatMatrix& s, std::span<const BigRational> b)
{
    auto x = try_solve_square(s, b);
    if (!x) throw Error(ErrorCode::SingularMatrix, "rank < dimension");
    return std::move(*x);
}

BigInt lcm_of_denominators(std::span<const BigRational> v)
{
    BigInt g = 1;
    for (const auto& x : v) g = boost::multiprecision::lcm(g, BigInt(denominator(x)));
    return g;
}

BigRational sum(std::span<const BigRational> v)
{
    BigRational total = 0;
    for (const auto& x : v) total += x;
    return total;
}

}  // namespace wiretap
