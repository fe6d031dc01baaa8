#include "sobolab/sobolev.hpp"

#include <algorithm>
#include <cmath>

#include "sobolab/errors.hpp"
#include "sobolab/numkernel.hpp"

namespace sobolab {

SobolevPencil::SobolevPencil(MomentMatrix m0, MomentMatrix m1, std::string label)
    : m0_(std::move(m0))
    , m1_(std::move(m1))
    , derivative_part_(derivative_conjugate(m1_))
    , label_(label.empty() ? "{" + m0_.label() + " | " + m1_.label() + "}" : std::move(label))
{
}

Matrix gram_section(const SobolevPencil& p, int n)
{
    return p.m0().section(n) + p.derivative_part().section(n);
}

Matrix checked_gram_section(const SobolevPencil& p, int n)
{
    Matrix g = gram_section(p, n);
    scaled_cholesky(g);
    const double cond = equilibrated_condition(g);
    if (cond > kConditionCap) {
        throw ConditioningError(cond, n);
    }
    return g;
}

double sobolev_norm(const SobolevPencil& p, const PolyCoeffs& v)
{
    if (v.is_zero()) {
        return 0.0;
    }
    const int n = v.degree() + 1;
    const Vector x = v.padded(n);
    const double q = (x.transpose() * gram_section(p, n) * x.conjugate())(0, 0).real();
    return std::sqrt(std::max(q, 0.0));
}

SobolevOPs orthonormal_polys(const SobolevPencil& p, int n)
{
    const Matrix g = checked_gram_section(p, n);
    const Matrix l = scaled_cholesky(g);
    const Matrix r = l.triangularView<Eigen::Lower>().solve(Matrix::Identity(n, n));

    SobolevOPs ops;
    ops.n = n;
    ops.polys.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> c(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            c[static_cast<std::size_t>(j)] = r(k, j);
        }
        // The diagonal of L^{-1} is real and positive by construction; drop rounding noise.
        c.back() = cplx{c.back().real(), 0.0};
        ops.polys.emplace_back(std::move(c));
    }
    return ops;
}

std::vector<cplx> sobolev_zeros(const SobolevPencil& p, int degree)
{
    if (degree < 1) {
        throw InvalidArgument("sobolev_zeros needs degree >= 1");
    }
    if (degree + 1 > kMaxSection) {
        throw InvalidArgument("degree exceeds the section cap");
    }
    const SobolevOPs ops = orthonormal_polys(p, degree + 1);
    return companion_roots(ops.polys[static_cast<std::size_t>(degree)]);
}

double mult_op_norm(const SobolevPencil& p, int n)
{
    if (n < 1) {
        throw InvalidArgument("mult_op_norm needs n >= 1");
    }
    const Matrix g = checked_gram_section(p, n);
    // ||z p||^2 for deg p < n is the form of G_{n+1} on indices 1..n.
    const Matrix shifted = gram_section(p, n + 1).bottomRightCorner(n, n);
    const RealVector ev = gen_eig_definite(shifted, g);
    return std::sqrt(std::max(ev(ev.size() - 1), 0.0));
}

std::string to_string(Quantity q)
{
    switch (q) {
    case Quantity::mult_op: return "mult_op";
    case Quantity::cond4: return "cond4";
    case Quantity::gen_eig_vs: return "gen_eig_vs";
    }
    return "unknown";
}

std::vector<SequenceEntry> norm_sequence(const SobolevPencil& p, int n_max, Quantity quantity,
                                         const SobolevPencil* other)
{
    if (n_max < 1 || n_max > kMaxSection) {
        throw InvalidArgument("n_max must lie in [1, 64]");
    }
    if (quantity == Quantity::gen_eig_vs && other == nullptr) {
        throw InvalidArgument("gen_eig_vs needs a second pencil");
    }
    std::vector<SequenceEntry> seq;
    seq.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        SequenceEntry e;
        e.n = n;
        try {
            switch (quantity) {
            case Quantity::mult_op: e.value = mult_op_norm(p, n); break;
            case Quantity::cond4: {
                const RealVector ev = gen_eig_definite(p.m1().section(n), checked_gram_section(p, n));
                e.value = ev(ev.size() - 1);
                break;
            }
            case Quantity::gen_eig_vs: {
                const RealVector ev = gen_eig_definite(gram_section(*other, n), checked_gram_section(p, n));
                e.value = ev(ev.size() - 1);
                break;
            }
            }
        } catch (const NumericError& err) {
            e.error = err.what();
        }
        seq.push_back(std::move(e));
    }
    return seq;
}

bool is_plateau(double at_half, double at_full, double tolerance)
{
    return std::abs(at_full - at_half) <= tolerance * std::abs(at_half);
}

bool is_plateau(const std::vector<SequenceEntry>& seq, double tolerance)
{
    if (seq.empty()) {
        return false;
    }
    const int n_max = seq.back().n;
    const auto find = [&](int n) -> std::optional<double> {
        for (const auto& e : seq) {
            if (e.n == n) {
                return e.value;
            }
        }
        return std::nullopt;
    };
    const auto half = find(std::max(1, n_max / 2));
    const auto full = find(n_max);
    return half && full && is_plateau(*half, *full, tolerance);
}

} // namespace sobolab
