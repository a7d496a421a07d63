#include "parikh/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "parikh/errors.hpp"

namespace parikh {

ParikhMatrix::ParikhMatrix(std::size_t dimension)
    : dimension_(dimension), entries_(dimension * dimension, 0)
{
    if (dimension < 2)
        throw std::invalid_argument("matrix dimension must be at least 2");
    for (std::size_t i = 0; i < dimension_; ++i)
        entries_[i * dimension_ + i] = 1;
}

void ParikhMatrix::apply_letter(std::size_t q)
{
    // Right-multiplying by I + E_{q,q+1} adds column q into column q+1.
    // Only rows 0..q can be nonzero in column q.
    for (std::size_t i = 0; i <= q; ++i) {
        std::uint64_t& target = entries_[i * dimension_ + q + 1];
        target = checked_add(target, entries_[i * dimension_ + q]);
    }
}

ParikhMatrix ParikhMatrix::operator*(const ParikhMatrix& rhs) const
{
    if (dimension_ != rhs.dimension_)
        throw std::invalid_argument("matrix dimension mismatch");
    ParikhMatrix out(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i)
        for (std::size_t j = 0; j < dimension_; ++j) {
            std::uint64_t sum = 0;
            for (std::size_t k = i; k <= j; ++k)
                sum = checked_add(sum, checked_mul(at(i, k), rhs.at(k, j)));
            out.entries_[i * dimension_ + j] = sum;
        }
    return out;
}

ParikhMatrix parikh_matrix(const OrderedAlphabet& alphabet, const Word& w)
{
    ParikhMatrix m(alphabet.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        m.apply_letter(w[i]);
    return m;
}

bool m_equivalent(const OrderedAlphabet& alphabet, const Word& w, const Word& w2)
{
    return parikh_matrix(alphabet, w) == parikh_matrix(alphabet, w2);
}

bool verify_matrix_entries(const OrderedAlphabet& alphabet, const Word& w)
{
    ParikhMatrix m = parikh_matrix(alphabet, w);
    std::size_t s = alphabet.size();
    for (std::size_t i = 0; i < s + 1; ++i)
        for (std::size_t j = 0; j < s + 1; ++j) {
            std::uint64_t expected;
            if (j < i)
                expected = 0;
            else if (j == i)
                expected = 1;
            else {
                // ascending factor word a_i .. a_{j-1}
                Word run;
                for (std::size_t q = i; q < j; ++q)
                    run.push_back(static_cast<std::uint8_t>(q));
                expected = count_subword(w, run);
            }
            if (m.at(i, j) != expected)
                return false;
        }
    return true;
}

std::string format_matrix(const ParikhMatrix& m)
{
    std::size_t dim = m.dimension();
    std::vector<std::size_t> width(dim, 1);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            std::size_t len = std::to_string(m.at(i, j)).size();
            if (len > width[j])
                width[j] = len;
        }
    std::ostringstream out;
    for (std::size_t i = 0; i < dim; ++i) {
        out << "[";
        for (std::size_t j = 0; j < dim; ++j) {
            std::string cell = std::to_string(m.at(i, j));
            out << ' ' << std::string(width[j] - cell.size(), ' ') << cell;
        }
        out << " ]\n";
    }
    return out.str();
}

} // namespace parikh
