// matrix.hpp -- the Parikh matrix mapping and M-equivalence

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parikh/alphabet.hpp"
#include "parikh/subword.hpp"
#include "parikh/word.hpp"

namespace parikh {

/// An (s+1) x (s+1) upper unitriangular matrix with nonnegative integer
/// entries, the image of a word over an s-letter alphabet under the
/// Parikh matrix mapping.
///
/// For a matrix computed from a word w, entry (i, j+1) counts the
/// occurrences of the ascending factor word a_i a_{i+1} ... a_j as a
/// scattered subword of w (0-based: entry (i, j) with i < j counts
/// a_i ... a_{j-1}).  The second diagonal carries the Parikh vector.
class ParikhMatrix {
public:
    /// Identity matrix of the given dimension (alphabet size + 1).
    explicit ParikhMatrix(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }

    std::uint64_t at(std::size_t row, std::size_t col) const
    {
        return entries_[row * dimension_ + col];
    }

    /// Right-multiplies by the elementary matrix of letter q: identity
    /// plus a single 1 at (q, q+1).  Checked arithmetic.
    void apply_letter(std::size_t q);

    /// Checked matrix product.
    ParikhMatrix operator*(const ParikhMatrix& rhs) const;

    bool operator==(const ParikhMatrix&) const = default;

    const std::vector<std::uint64_t>& entries() const { return entries_; }

private:
    std::size_t dimension_;
    std::vector<std::uint64_t> entries_;
};

/// The Parikh matrix mapping: product of the elementary matrices of the
/// letters of w, left to right.  Entry overflow raises OverflowError.
ParikhMatrix parikh_matrix(const OrderedAlphabet& alphabet, const Word& w);

/// Words are M-equivalent exactly when their Parikh matrices are equal.
bool m_equivalent(const OrderedAlphabet& alphabet, const Word& w, const Word& w2);

/// Checks every matrix entry of parikh_matrix(w) against an independent
/// scattered-subword count of the corresponding ascending factor word.
bool verify_matrix_entries(const OrderedAlphabet& alphabet, const Word& w);

/// Renders the matrix in an aligned bracket-per-row layout.
std::string format_matrix(const ParikhMatrix& m);

} // namespace parikh

template <>
struct std::hash<parikh::ParikhMatrix> {
    std::size_t operator()(const parikh::ParikhMatrix& m) const noexcept
    {
        std::size_t h = m.dimension();
        for (std::uint64_t e : m.entries())
            h = h * 1099511628211ULL + static_cast<std::size_t>(e + 0x9e3779b97f4a7c15ULL);
        return h;
    }
};
