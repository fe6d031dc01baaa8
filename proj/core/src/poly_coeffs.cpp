#include "sobolab/poly_coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "sobolab/binomial.hpp"

namespace sobolab {

PolyCoeffs::PolyCoeffs(std::initializer_list<cplx> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

PolyCoeffs::PolyCoeffs(std::vector<cplx> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

PolyCoeffs::PolyCoeffs(std::span<const cplx> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end())
{
    trim();
}

PolyCoeffs PolyCoeffs::monomial(int k, cplx coeff)
{
    std::vector<cplx> c(static_cast<std::size_t>(k) + 1, cplx{});
    c.back() = coeff;
    return PolyCoeffs(std::move(c));
}

cplx PolyCoeffs::operator[](int k) const noexcept
{
    if (k < 0 || k > degree()) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Vector PolyCoeffs::padded(int n) const
{
    Vector v = Vector::Zero(n);
    for (int k = 0; k < std::min(n, degree() + 1); ++k) {
        v(k) = coeffs_[static_cast<std::size_t>(k)];
    }
    return v;
}

cplx PolyCoeffs::evaluate(cplx z) const
{
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

double PolyCoeffs::max_abs_coeff() const
{
    double m = 0.0;
    for (const auto& c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

void PolyCoeffs::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == cplx{}) {
        coeffs_.pop_back();
    }
}

PolyCoeffs derivative(const PolyCoeffs& p)
{
    if (p.degree() < 1) {
        return {};
    }
    std::vector<cplx> d(static_cast<std::size_t>(p.degree()));
    for (int k = 0; k < p.degree(); ++k) {
        d[static_cast<std::size_t>(k)] = static_cast<double>(k + 1) * p[k + 1];
    }
    return PolyCoeffs(std::move(d));
}

namespace {

// sum_k c_k z^k with z = w + shift  ->  coefficients in w.
PolyCoeffs translate(const PolyCoeffs& p, cplx shift)
{
    const int d = p.degree();
    if (d < 0) {
        return {};
    }
    std::vector<cplx> out(static_cast<std::size_t>(d) + 1, cplx{});
    for (int k = 0; k <= d; ++k) {
        cplx power = 1.0;
        for (int j = k; j >= 0; --j) {
            // term C(k, j) w^j shift^(k-j)
            out[static_cast<std::size_t>(j)] += p[k] * binomial(k, j) * power;
            power *= shift;
        }
    }
    return PolyCoeffs(std::move(out));
}

} // namespace

PolyCoeffs to_shifted_basis(const PolyCoeffs& p, cplx a)
{
    return translate(p, a);
}

PolyCoeffs from_shifted_basis(const PolyCoeffs& shifted, cplx a)
{
    return translate(shifted, -a);
}

PolyCoeffs times_z(const PolyCoeffs& p)
{
    if (p.is_zero()) {
        return {};
    }
    std::vector<cplx> c(static_cast<std::size_t>(p.degree()) + 2, cplx{});
    for (int k = 0; k <= p.degree(); ++k) {
        c[static_cast<std::size_t>(k) + 1] = p[k];
    }
    return PolyCoeffs(std::move(c));
}

} // namespace sobolab
