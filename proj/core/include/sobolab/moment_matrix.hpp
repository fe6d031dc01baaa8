#pragma once

#include <functional>
#include <memory>
#include <string>

#include "sobolab/measures.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/types.hpp"

namespace sobolab {

/// Lazy infinite Hermitian matrix given by an entry rule (i, j) -> complex.
///
/// The rule is only ever evaluated on the upper triangle i <= j; sections mirror it into
/// the lower triangle so every section is exactly Hermitian. Copies share the rule.
class MomentMatrix {
public:
    using Rule = std::function<cplx(int, int)>;

    MomentMatrix(Rule rule, std::string label, bool hpd_hint);

    /// The moment matrix M(mu) of a measure.
    static MomentMatrix of_measure(const Measure& m);
    static MomentMatrix zero();
    static MomentMatrix identity(double scale = 1.0);

    /// entry(i, j); for i > j this is conj(entry(j, i)).
    cplx entry(int i, int j) const;

    /// The leading n x n section (n >= 1).
    Matrix section(int n) const;

    const std::string& label() const noexcept { return label_; }
    bool hpd_hint() const noexcept { return hpd_hint_; }

    /// v M v^* for the coefficient row v of p, i.e. the squared M-norm of p.
    double quadratic_form(const PolyCoeffs& p) const;

    friend MomentMatrix operator+(const MomentMatrix& a, const MomentMatrix& b);
    friend MomentMatrix operator*(double scale, const MomentMatrix& a);

private:
    std::shared_ptr<const Rule> rule_;
    std::string label_;
    bool hpd_hint_;
};

/// B = A M1 A^*: B_ij = i j M1_{i-1, j-1}, zero in row and column 0, so that
/// v B v^* is the squared M1-norm of p'.
MomentMatrix derivative_conjugate(const MomentMatrix& m1);

/// M^{(1,1)}: the rule (i, j) -> entry(i + 1, j + 1).
MomentMatrix delete_first(const MomentMatrix& m);

/// Gram matrix of the shifted monomials (z - a)^k under the inner product of m.
MomentMatrix recentered(const MomentMatrix& m, cplx a);

/// entry(i, j) == entry(i + 1, j + 1) for all i, j < n - 1, absolute tolerance 1e-13.
bool is_toeplitz(const MomentMatrix& m, int n);

inline constexpr double kStructureTolerance = 1e-13;

/// Row-major CSV of a dense matrix, one "re+imi" cell per entry, no header.
std::string section_csv(const Matrix& m);

/// Formats a complex number as "re+imi" with %.12e components.
std::string format_complex(cplx z);

} // namespace sobolab
