#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sobolab/moment_matrix.hpp"
#include "sobolab/poly_coeffs.hpp"
#include "sobolab/types.hpp"

namespace sobolab {

/// Gram sections whose equilibrated condition number exceeds this stop with ConditioningError.
inline constexpr double kConditionCap = 1e14;

/// Relative change over the last doubling of n below which a sequence counts as bounded.
inline constexpr double kPlateauTolerance = 0.01;

/// The pair {M0, M1} of the Sobolev inner product <p,q> = <p,q>_{M0} + <p',q'>_{M1}.
/// M0 must be HPD; M1 may be only semidefinite.
class SobolevPencil {
public:
    SobolevPencil(MomentMatrix m0, MomentMatrix m1, std::string label = {});

    const MomentMatrix& m0() const noexcept { return m0_; }
    const MomentMatrix& m1() const noexcept { return m1_; }
    /// A M1 A^*.
    const MomentMatrix& derivative_part() const noexcept { return derivative_part_; }
    const std::string& label() const noexcept { return label_; }

private:
    MomentMatrix m0_;
    MomentMatrix m1_;
    MomentMatrix derivative_part_;
    std::string label_;
};

/// G_n = section(M0, n) + section(A M1 A^*, n).
Matrix gram_section(const SobolevPencil& p, int n);

/// G_n checked for positive definiteness and for the conditioning cap.
/// Throws NotPositiveDefinite or ConditioningError.
Matrix checked_gram_section(const SobolevPencil& p, int n);

/// sqrt(v G_{d+1} v^*), d = degree(v); zero for the zero polynomial.
double sobolev_norm(const SobolevPencil& p, const PolyCoeffs& v);

struct SobolevOPs {
    std::vector<PolyCoeffs> polys; ///< polys[k] has exact degree k and positive leading coefficient
    int n = 0;
};

/// Orthonormal polynomials of degree < n: the rows of L^{-1} where G_n = L L^*.
SobolevOPs orthonormal_polys(const SobolevPencil& p, int n);

/// Zeros of the orthonormal polynomial of the given degree.
std::vector<cplx> sobolev_zeros(const SobolevPencil& p, int degree);

/// Norm of p -> z p restricted to degree < n: sqrt of the largest eigenvalue of the pencil
/// (G_{n+1} with first row and column removed, G_n).
double mult_op_norm(const SobolevPencil& p, int n);

enum class Quantity {
    mult_op,    ///< mult_op_norm(P, n)
    cond4,      ///< largest eigenvalue of (section(M1, n), G_n)
    gen_eig_vs, ///< largest eigenvalue of (G_n of the other pencil, G_n)
};

std::string to_string(Quantity q);

struct SequenceEntry {
    int n = 0;
    std::optional<double> value; ///< empty when the section failed
    std::string error;
};

/// The chosen quantity for n = 1..n_max; failures are recorded in-line rather than thrown.
std::vector<SequenceEntry> norm_sequence(const SobolevPencil& p, int n_max, Quantity quantity,
                                         const SobolevPencil* other = nullptr);

/// |at_full - at_half| <= tolerance * |at_half|.
bool is_plateau(double at_half, double at_full, double tolerance = kPlateauTolerance);

/// Plateau test on a sequence indexed by n: compares the entries at n_max / 2 and n_max.
/// False if either is missing.
bool is_plateau(const std::vector<SequenceEntry>& seq, double tolerance = kPlateauTolerance);

} // namespace sobolab
