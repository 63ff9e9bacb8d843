#include "wiretap/finite_field.hpp"

#include <algorithm>

#include "wiretap/error.hpp"

namespace wiretap {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t smallest_prime_above(std::uint64_t n)
{
    std::uint64_t p = n + 1;
    while (!is_prime(p)) ++p;
    return p;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t q)
{
    std::uint64_t r = 1 % q;
    while (e) {
        if (e & 1) r = mul_mod(r, a, q);
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q)
{
    if (a % q == 0) throw Error(ErrorCode::DomainError, "zero has no inverse");
    return pow_mod(a, q - 2, q);
}

void check_modulus(std::uint64_t q)
{
    if (!is_prime(q)) throw Error(ErrorCode::PreconditionViolated, std::to_string(q) + " is not prime");
}

}  // namespace

FieldElem::FieldElem(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus)
{
    check_modulus(modulus);
    value_ = value % modulus;
}

FieldElem FieldElem::operator+(const FieldElem& o) const
{
    return {(value_ + o.value_) % modulus_, modulus_};
}

FieldElem FieldElem::operator-(const FieldElem& o) const
{
    return {(value_ + modulus_ - o.value_) % modulus_, modulus_};
}

FieldElem FieldElem::operator*(const FieldElem& o) const
{
    return {mul_mod(value_, o.value_, modulus_), modulus_};
}

FieldElem FieldElem::inverse() const
{
    return {inv_mod(value_, modulus_), modulus_};
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, std::uint64_t q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0)
{
    check_modulus(q);
}

FieldMatrix::FieldMatrix(std::uint64_t q, const std::vector<FieldVector>& rows, std::size_t cols)
    : FieldMatrix(0, cols, q)
{
    for (const auto& r : rows) append_row(r);
}

FieldMatrix FieldMatrix::identity(std::size_t n, std::uint64_t q)
{
    FieldMatrix m(n, n, q);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % q;
    return m;
}

std::vector<FieldVector> FieldMatrix::row_list() const
{
    std::vector<FieldVector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

void FieldMatrix::append_row(std::span<const std::uint64_t> row)
{
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length vs column count");
    for (auto v : row) data_.push_back(v % q_);
    ++rows_;
}

void FieldMatrix::append_rows(const FieldMatrix& other)
{
    if (other.cols_ != cols_ || other.q_ != q_)
        throw Error(ErrorCode::DimensionMismatch, "stacking matrices of different shape or field");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

FieldVector FieldMatrix::multiply(std::span<const std::uint64_t> x) const
{
    if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    FieldVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + mul_mod((*this)(r, c), x[c] % q_, q_)) % q_;
        out[r] = acc;
    }
    return out;
}

std::size_t ff_rank(const FieldMatrix& m)
{
    FieldMatrix w = m;
    const auto q = m.modulus();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < w.rows() && w(found, col) == 0) ++found;
        if (found == w.rows()) continue;
        for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w(found, c), w(pivot_row, c));
        const auto inv = inv_mod(w(pivot_row, col), q);
        for (std::size_t r = pivot_row + 1; r < w.rows(); ++r) {
            if (w(r, col) == 0) continue;
            const auto factor = mul_mod(w(r, col), inv, q);
            for (std::size_t c = col; c < w.cols(); ++c)
                w(r, c) = (w(r, c) + q - mul_mod(factor, w(pivot_row, c), q)) % q;
        }
        ++pivot_row;
    }
    return pivot_row;
}

FieldVector avoid_subspaces(std::size_t n, std::uint64_t q, const std::vector<FieldMatrix>& bases,
                            const FieldMatrix& prior)
{
    check_modulus(q);
    if (q <= bases.size())
        throw Error(ErrorCode::PreconditionViolated,
                    "field size " + std::to_string(q) + " must exceed the number of subspaces " +
                        std::to_string(bases.size()));
    if (prior.cols() != n || prior.modulus() != q)
        throw Error(ErrorCode::PreconditionViolated, "prior rows do not live in GF(q)^n");
    if (prior.rows() + 1 > n) throw Error(ErrorCode::PreconditionViolated, "no room for another vector");

    // Each candidate must be independent of prior ∪ basis_i for all i.
    std::vector<FieldMatrix> walls;
    if (bases.empty()) walls.push_back(prior);
    for (const auto& basis : bases) {
        if (basis.cols() != n || basis.modulus() != q)
            throw Error(ErrorCode::PreconditionViolated, "basis does not live in GF(q)^n");
        if (prior.rows() + basis.rows() + 1 > n)
            throw Error(ErrorCode::PreconditionViolated, "dimension bound |prior| + |basis| + 1 <= n fails");
        FieldMatrix wall = prior;
        wall.append_rows(basis);
        if (ff_rank(wall) != wall.rows())
            throw Error(ErrorCode::PreconditionViolated, "prior rows together with a basis are dependent");
        walls.push_back(std::move(wall));
    }

    FieldVector candidate(n, 0);
    // Odometer over GF(q)^n with the last coordinate fastest.
    auto advance = [&] {
        for (std::size_t i = n; i-- > 0;) {
            if (++candidate[i] < q) return true;
            candidate[i] = 0;
        }
        return false;
    };
    while (advance()) {
        bool ok = std::all_of(walls.begin(), walls.end(), [&](const FieldMatrix& wall) {
            FieldMatrix test = wall;
            test.append_row(candidate);
            return ff_rank(test) == test.rows();
        });
        if (ok) return candidate;
    }
    // Unreachable when the preconditions hold: at least q^{n-1}(q-m) vectors qualify.
    throw Error(ErrorCode::PreconditionViolated, "no vector avoids every subspace");
}

FieldMatrix build_subspace(std::size_t n, std::size_t d, std::uint64_t q, const std::vector<FieldMatrix>& bases)
{
    FieldMatrix v(0, n, q);
    for (const auto& basis : bases)
        if (d + basis.rows() > n)
            throw Error(ErrorCode::PreconditionViolated, "dimension bound d + dim(V_i) <= n fails");
    for (std::size_t j = 0; j < d; ++j) v.append_row(avoid_subspaces(n, q, bases, v));
    return v;
}

}  // namespace wiretap
