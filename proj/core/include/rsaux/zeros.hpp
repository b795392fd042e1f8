#ifndef RSAUX_ZEROS_HPP
#define RSAUX_ZEROS_HPP

#include <string>
#include <vector>

#include "rsaux/ext_complex.hpp"

namespace rsaux {

struct Rectangle {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;

    bool valid() const { return sigma_min < sigma_max && t_min < t_max; }
    bool contains(const cplx& s) const {
        return s.real() >= sigma_min && s.real() <= sigma_max
            && s.imag() >= t_min && s.imag() <= t_max;
    }
};

enum class EvaluatorKind { oracle, expansion };

std::string to_string(EvaluatorKind k);

// Evaluator dispatch: contour oracle up to |Im s| = 300, the expansion for
// sigma < -10 beyond; range_error where neither applies.
EvaluatorKind pick_evaluator(const cplx& s);

// R(s) in log form under the chosen evaluator.
ExtComplex evaluate_r(const cplx& s, EvaluatorKind kind, double tol = 1e-10);

struct ZeroRecord {
    cplx location{0.0, 0.0};
    enum class Kind { trivial, nontrivial } kind = Kind::nontrivial;
    // |R / R'| / max(1, |s|): relative distance-to-zero certificate. The
    // raw |R| cannot serve directly because the natural scale
    // |chi eta^{s-1} e^{-pi i eta^2}| itself vanishes at the trivial zeros.
    double residual = 0.0;
    double abs_value = 0.0;        // raw |R(location)| (0 on underflow)
    EvaluatorKind evaluator = EvaluatorKind::oracle;
    int newton_iters = 0;
};

inline constexpr double trivial_zero_tolerance = 1e-4;
inline constexpr double residual_threshold = 1e-6;

/*
 * Zeros (with multiplicity) of R inside `rect` by the argument principle.
 * The boundary is walked with an adaptive step that keeps successive phase
 * changes below pi/2. Throws boundary_zero_error when |R| on the boundary
 * falls under 1e-9 of the boundary's median magnitude, and
 * convergence_error when the step underflows or the winding total is not
 * near an integer.
 */
long winding_count(const Rectangle& rect, double tol = 1e-10);

class boundary_zero_error : public std::runtime_error {
public:
    explicit boundary_zero_error(const std::string& what) : std::runtime_error(what) {}
};

/*
 * Newton refinement with central-difference derivative
 * (step 1e-5 * max(1, |s|)) until |ds| < tol or 50 iterations.
 */
ZeroRecord refine_zero(const cplx& seed, double tol = 1e-8);

// residual certificate under an explicitly chosen evaluator (cross-checks).
double residual_under(const cplx& location, EvaluatorKind kind, double tol = 1e-10);

/*
 * Subdivides `rect` into tiles of size <= grid_step, winding-counts each
 * tile (perturbing by 0.01 and retrying up to 3 times when a boundary
 * sample sits on a zero), Newton-refines every counted zero and
 * deduplicates within 1e-6. Tiles run in parallel; the result order is
 * lexicographic in (Re, Im) regardless of scheduling.
 */
std::vector<ZeroRecord> scan_region(const Rectangle& rect, double grid_step,
                                    double tol = 1e-8);

} // namespace rsaux

#endif
