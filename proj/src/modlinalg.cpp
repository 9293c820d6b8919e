#include "rigidity_forge/modlinalg.hpp"

#include <algorithm>
#include <string>

#include "rigidity_forge/error.hpp"

namespace rigidity_forge {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1u) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t odd = n - 1;
    int twos = 0;
    while ((odd & 1u) == 0) {
        odd >>= 1;
        ++twos;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < twos; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p), mersenne_(p == kMersenne61) {
    if (p <= (std::uint64_t{1} << 32) || p >= (std::uint64_t{1} << 63))
        throw InvalidArgument("modulus " + std::to_string(p) + " must lie in (2^32, 2^63)");
    if (!is_prime_u64(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
    std::uint64_t result = 1;
    while (exp > 0) {
        if (exp & 1u) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw InvalidArgument("zero has no inverse");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_signed(long long value) const noexcept {
    if (value >= 0) return static_cast<std::uint64_t>(value) % p_;
    const std::uint64_t magnitude = static_cast<std::uint64_t>(-(value + 1)) + 1;
    return neg(magnitude % p_);
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw InvalidArgument("empty range");
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();
    // Reject the low (2^64 mod span) outputs so every residue is equally likely.
    const std::uint64_t threshold = (0 - span) % span;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) return lo + r % span;
    }
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<long long>>& rows, const PrimeField& field) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ModMatrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_signed(rows[r][c]);
    }
    return m;
}

ModMatrix ModMatrix::permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const {
    if (row_order.size() != rows_ || col_order.size() != cols_) throw InvalidArgument("permutation size mismatch");
    ModMatrix out(rows_, cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(r, c) = at(row_order[r], col_order[c]);
    return out;
}

void ModMatrix::append_row(std::span<const std::uint64_t> values) {
    if (values.size() != cols_) throw InvalidArgument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

namespace {

// Forward elimination on the first `pivot_cols` columns of `work`, applying
// every row operation to the full row. Row i' = pivot * row i - a * pivot row,
// which needs no inverses. Returns the number of pivots found; rows at and
// after that index are zero on the pivot columns.
std::size_t eliminate(ModMatrix& work, std::size_t pivot_cols) {
    const PrimeField& f = work.field();
    const std::size_t rows = work.rows();
    const std::size_t cols = work.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < pivot_cols && rank < rows; ++c) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && work.at(pivot_row, c) == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        if (pivot_row != rank) {
            auto a = work.row(pivot_row);
            auto b = work.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        const auto pivot = work.row(rank);
        const std::uint64_t pv = pivot[c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            auto target = work.row(r);
            const std::uint64_t a = target[c];
            if (a == 0) continue;
            for (std::size_t k = c; k < cols; ++k)
                target[k] = f.sub(f.mul(pv, target[k]), f.mul(a, pivot[k]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rank(const ModMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ModMatrix work = m;
    return eliminate(work, m.cols());
}

std::vector<std::vector<std::uint64_t>> left_kernel_basis(const ModMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    ModMatrix work(rows, cols + rows, m.field());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) work.at(r, c) = m.at(r, c);
        work.at(r, cols + r) = 1;
    }
    const std::size_t r0 = eliminate(work, cols);
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(rows - r0);
    for (std::size_t r = r0; r < rows; ++r) {
        auto tail = work.row(r).subspan(cols);
        basis.emplace_back(tail.begin(), tail.end());
    }
    return basis;
}

std::vector<std::uint64_t> left_kernel_sample(const ModMatrix& m, std::uint64_t seed) {
    const PrimeField& f = m.field();
    std::vector<std::uint64_t> w(m.rows(), 0);
    const auto basis = left_kernel_basis(m);
    if (basis.empty()) return w;

    Rng rng(seed);
    std::vector<std::uint64_t> coeffs(basis.size());
    do {
        for (auto& c : coeffs) c = rng.uniform(0, f.modulus() - 1);
    } while (std::all_of(coeffs.begin(), coeffs.end(), [](std::uint64_t c) { return c == 0; }));

    for (std::size_t b = 0; b < basis.size(); ++b) {
        if (coeffs[b] == 0) continue;
        for (std::size_t r = 0; r < w.size(); ++r) w[r] = f.add(w[r], f.mul(coeffs[b], basis[b][r]));
    }
    return w;
}

std::vector<std::uint64_t> left_multiply(std::span<const std::uint64_t> w, const ModMatrix& m) {
    if (w.size() != m.rows()) throw InvalidArgument("vector length must equal the row count");
    const PrimeField& f = m.field();
    std::vector<std::uint64_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (w[r] == 0) continue;
        const auto row = m.row(r);
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] = f.add(out[c], f.mul(w[r], row[c]));
    }
    return out;
}

}  // namespace rigidity_forge
