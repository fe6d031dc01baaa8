#include "sobolab/moment_matrix.hpp"

#include <cstdio>
#include <sstream>

#include "sobolab/binomial.hpp"
#include "sobolab/errors.hpp"

namespace sobolab {

MomentMatrix::MomentMatrix(Rule rule, std::string label, bool hpd_hint)
    : rule_(std::make_shared<const Rule>(std::move(rule)))
    , label_(std::move(label))
    , hpd_hint_(hpd_hint)
{
}

MomentMatrix MomentMatrix::of_measure(const Measure& m)
{
    return MomentMatrix([m](int i, int j) { return moment(m, i, j); }, measure_label(m), m.infinite_support());
}

MomentMatrix MomentMatrix::zero()
{
    return MomentMatrix([](int, int) { return cplx{}; }, "zero", false);
}

MomentMatrix MomentMatrix::identity(double scale)
{
    return MomentMatrix([scale](int i, int j) { return i == j ? cplx{scale} : cplx{}; },
                        scale == 1.0 ? std::string("identity") : std::to_string(scale) + "*identity", scale > 0.0);
}

cplx MomentMatrix::entry(int i, int j) const
{
    if (i < 0 || j < 0) {
        throw InvalidArgument("matrix indices must be nonnegative");
    }
    if (i > j) {
        return std::conj((*rule_)(j, i));
    }
    if (i == j) {
        return {(*rule_)(i, i).real(), 0.0};
    }
    return (*rule_)(i, j);
}

Matrix MomentMatrix::section(int n) const
{
    if (n < 1) {
        throw InvalidArgument("section order must be positive");
    }
    Matrix s(n, n);
    for (int i = 0; i < n; ++i) {
        s(i, i) = entry(i, i);
        for (int j = i + 1; j < n; ++j) {
            s(i, j) = entry(i, j);
            s(j, i) = std::conj(s(i, j));
        }
    }
    return s;
}

double MomentMatrix::quadratic_form(const PolyCoeffs& p) const
{
    if (p.is_zero()) {
        return 0.0;
    }
    const int n = p.degree() + 1;
    const Vector v = p.padded(n);
    // v is the coefficient row; v M v^* = v^T M conj(v).
    return (v.transpose() * section(n) * v.conjugate())(0, 0).real();
}

MomentMatrix operator+(const MomentMatrix& a, const MomentMatrix& b)
{
    auto ra = a.rule_;
    auto rb = b.rule_;
    return MomentMatrix([ra, rb](int i, int j) { return (*ra)(i, j) + (*rb)(i, j); },
                        "(" + a.label_ + ")+(" + b.label_ + ")", a.hpd_hint_ || b.hpd_hint_);
}

MomentMatrix operator*(double scale, const MomentMatrix& a)
{
    auto ra = a.rule_;
    std::ostringstream label;
    label << scale << "*(" << a.label_ << ")";
    return MomentMatrix([ra, scale](int i, int j) { return scale * (*ra)(i, j); }, label.str(),
                        a.hpd_hint_ && scale > 0.0);
}

MomentMatrix derivative_conjugate(const MomentMatrix& m1)
{
    return MomentMatrix(
        [m1](int i, int j) {
            if (i == 0 || j == 0) {
                return cplx{};
            }
            return static_cast<double>(i) * static_cast<double>(j) * m1.entry(i - 1, j - 1);
        },
        "A(" + m1.label() + ")A*", false);
}

MomentMatrix delete_first(const MomentMatrix& m)
{
    return MomentMatrix([m](int i, int j) { return m.entry(i + 1, j + 1); }, "(" + m.label() + ")^(1,1)",
                        m.hpd_hint());
}

MomentMatrix recentered(const MomentMatrix& m, cplx a)
{
    // <(z-a)^i, (z-a)^j> = sum_{k,l} C(i,k) (-a)^{i-k} C(j,l) conj(-a)^{j-l} M_kl.
    return MomentMatrix(
        [m, a](int i, int j) {
            cplx sum{};
            cplx pa = 1.0;
            for (int k = i; k >= 0; --k) {
                const cplx left = binomial(i, k) * pa;
                cplx pb = 1.0;
                for (int l = j; l >= 0; --l) {
                    sum += left * binomial(j, l) * pb * m.entry(k, l);
                    pb *= std::conj(-a);
                }
                pa *= -a;
            }
            return sum;
        },
        "(" + m.label() + ") about " + format_complex(a), m.hpd_hint());
}

bool is_toeplitz(const MomentMatrix& m, int n)
{
    if (n < 2) {
        throw InvalidArgument("is_toeplitz needs n >= 2");
    }
    for (int i = 0; i + 1 < n; ++i) {
        for (int j = 0; j + 1 < n; ++j) {
            if (std::abs(m.entry(i, j) - m.entry(i + 1, j + 1)) > kStructureTolerance) {
                return false;
            }
        }
    }
    return true;
}

std::string format_complex(cplx z)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12e%+.12ei", z.real(), z.imag());
    return buf;
}

std::string section_csv(const Matrix& m)
{
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ',';
            }
            out += format_complex(m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace sobolab
