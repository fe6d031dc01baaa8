#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "sobolab/types.hpp"

namespace sobolab {

/// Polynomial in the monomial basis; index k holds the coefficient of z^k.
/// Trailing zero coefficients are always trimmed, so the zero polynomial is empty.
class PolyCoeffs {
public:
    PolyCoeffs() = default;
    PolyCoeffs(std::initializer_list<cplx> coeffs);
    explicit PolyCoeffs(std::vector<cplx> coeffs);
    explicit PolyCoeffs(std::span<const cplx> coeffs);

    static PolyCoeffs monomial(int k, cplx coeff = 1.0);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of z^k; zero past the degree.
    cplx operator[](int k) const noexcept;
    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Coefficient vector padded (or truncated) to length n.
    Vector padded(int n) const;

    cplx evaluate(cplx z) const;
    double max_abs_coeff() const;

    friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;

private:
    void trim();

    std::vector<cplx> coeffs_;
};

/// Coefficient action of d/dz: (vA)_k = (k+1) v_{k+1}.
PolyCoeffs derivative(const PolyCoeffs& p);

/// Coefficients of p in the basis (z - a)^k (Taylor expansion at a).
PolyCoeffs to_shifted_basis(const PolyCoeffs& p, cplx a);

/// Inverse of to_shifted_basis: coefficients b_k of sum b_k (z - a)^k back to monomials.
PolyCoeffs from_shifted_basis(const PolyCoeffs& shifted, cplx a);

/// Coefficients of z * p(z).
PolyCoeffs times_z(const PolyCoeffs& p);

} // namespace sobolab
