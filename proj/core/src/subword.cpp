#include "parikh/subword.hpp"

#include "parikh/errors.hpp"

namespace parikh {

std::uint64_t count_subword(const Word& w, const Word& u)
{
    // dp[j] counts occurrences of u[0..j) in the processed prefix of w.
    std::vector<std::uint64_t> dp(u.size() + 1, 0);
    dp[0] = 1;
    const std::string& ws = w.indices();
    const std::string& us = u.indices();
    for (char c : ws)
        for (std::size_t j = us.size(); j >= 1; --j)
            if (us[j - 1] == c)
                dp[j] = checked_add(dp[j], dp[j - 1]);
    return dp[u.size()];
}

ParikhVector parikh_vector(const Word& w, std::size_t alphabet_size)
{
    ParikhVector counts(alphabet_size, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        ++counts.at(w[i]);
    return counts;
}

std::uint64_t vector_length(const ParikhVector& v)
{
    std::uint64_t n = 0;
    for (std::uint32_t c : v)
        n += c;
    return n;
}

std::uint64_t multinomial(const ParikhVector& v)
{
    // Interleaved multiply/divide keeps every intermediate value equal to
    // a binomial coefficient, so it is integral and as small as possible.
    std::uint64_t result = 1;
    std::uint64_t n = 0;
    for (std::uint32_t count : v)
        for (std::uint32_t i = 1; i <= count; ++i)
            result = checked_mul(result, ++n) / i;
    return result;
}

} // namespace parikh
