#pragma once

namespace sobolab {

/// C(n, k) as a double. Exact 64-bit integer Pascal table for n <= 67; beyond that
/// the double recurrence is used (not needed for sections up to order 64).
double binomial(int n, int k);

} // namespace sobolab
