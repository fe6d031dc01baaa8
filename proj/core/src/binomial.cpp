#include "sobolab/binomial.hpp"

#include <array>
#include <cstdint>

namespace sobolab {

namespace {

// C(67, 33) ~ 1.4e19 is the largest central entry that fits in uint64.
constexpr int kExactRows = 68;

using PascalTable = std::array<std::array<std::uint64_t, kExactRows>, kExactRows>;

constexpr PascalTable make_pascal()
{
    PascalTable t{};
    for (int n = 0; n < kExactRows; ++n) {
        t[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
        }
    }
    return t;
}

constexpr PascalTable kPascal = make_pascal();

} // namespace

double binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    if (n < kExactRows) {
        return static_cast<double>(kPascal[n][k]);
    }
    if (k > n - k) {
        k = n - k;
    }
    double c = 1.0;
    for (int j = 1; j <= k; ++j) {
        c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return c;
}

} // namespace sobolab
