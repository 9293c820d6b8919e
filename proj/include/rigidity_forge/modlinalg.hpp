#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace rigidity_forge {

/// 2^61 - 1. Products of two residues fit in 122 bits and reduce by folding.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic in Z_p for a prime p in (2^32, 2^63).
class PrimeField {
public:
    /// Throws InvalidArgument unless p is a prime in (2^32, 2^63).
    explicit PrimeField(std::uint64_t p = kMersenne61);

    std::uint64_t modulus() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        const std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
        if (mersenne_) {
            const std::uint64_t folded = static_cast<std::uint64_t>(prod & p_) + static_cast<std::uint64_t>(prod >> 61);
            return folded >= p_ ? folded - p_ : folded;
        }
        return static_cast<std::uint64_t>(prod % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
    /// Inverse of a nonzero residue (Fermat).
    std::uint64_t inv(std::uint64_t a) const;
    /// Maps a signed integer into [0, p).
    std::uint64_t from_signed(long long value) const noexcept;

private:
    std::uint64_t p_;
    bool mersenne_;
};

/// Seeded generator used for every random choice in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on raw 64-bit outputs and
/// shuffles are an explicit Fisher-Yates pass, so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(uniform(0, i - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the `index`-th independent sub-task of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index));
}

/// Dense row-major matrix over Z_p.
class ModMatrix {
public:
    ModMatrix(std::size_t rows, std::size_t cols, const PrimeField& field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const PrimeField& field() const noexcept { return field_; }

    std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// Builds a matrix from signed integer rows (all rows must have equal length).
    static ModMatrix from_rows(const std::vector<std::vector<long long>>& rows, const PrimeField& field);

    /// Copy with rows reordered by `row_order` and columns by `col_order`.
    ModMatrix permuted(std::span<const std::size_t> row_order, std::span<const std::size_t> col_order) const;

    /// Appends one row; its length must equal cols().
    void append_row(std::span<const std::uint64_t> values);

    friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_.modulus() == b.field_.modulus() &&
               a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint64_t> data_;
};

/// Exact rank over Z_p by fraction-free (inverse-free) row reduction.
std::size_t rank(const ModMatrix& m);

/// Basis of {w : w * m = 0}, one vector of length rows() per basis element.
std::vector<std::vector<std::uint64_t>> left_kernel_basis(const ModMatrix& m);

/// Random element of the left kernel: a uniformly random nonzero combination of
/// a kernel basis. Returns the zero vector exactly when the kernel is trivial.
std::vector<std::uint64_t> left_kernel_sample(const ModMatrix& m, std::uint64_t seed);

/// Row vector times matrix.
std::vector<std::uint64_t> left_multiply(std::span<const std::uint64_t> w, const ModMatrix& m);

}  // namespace rigidity_forge
