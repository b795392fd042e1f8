#ifndef RSAUX_AUDIT_HPP
#define RSAUX_AUDIT_HPP

#include <string>
#include <vector>

namespace rsaux {

enum class Relation { equals, less_than, greater_than };

std::string to_string(Relation r);

/*
 * One re-derived scalar. For `equals` the check is
 * |computed - paper| <= tolerance; for the inequalities the margin
 * paper - computed (resp. computed - paper) must be >= 0. Items whose
 * name ends in "_log10" compare common logarithms (the underlying
 * quantities underflow binary64 by hundreds of orders).
 */
struct AuditItem {
    std::string name;
    double paper_value = 0.0;
    double computed_value = 0.0;
    Relation relation = Relation::equals;
    double tolerance = 0.0;
    bool pass = false;
    double margin = 0.0;
};

AuditItem make_audit_item(std::string name, double paper, double computed,
                          Relation rel, double tol);

/*
 * The absolute-value series with b = (1+i)/2,
 *
 *   sum_{n>=3} |(1/b^2)(1/n - 2/(n-1) + 1/(n-2)
 *               - (1-b)^n/n + 2(1-b)^{n-1}/(n-1) - (1-b)^{n-2}/(n-2))|,
 *
 * summed until the telescoping rational tail 2/((N-1)N) plus the
 * |1-b| = 2^{-1/2} geometric tail drop below 1e-9. Target 0.7439893.
 */
AuditItem audit_lemma_series();

// n = 3 term of the same series (hand-checkable single value).
double lemma_series_term3();

/*
 * Remainder-bound constants: the cubic-weight Gaussian integral, the
 * sup-integral scans, and the I coefficients with their two totals.
 * `oversample` multiplies grid densities and divides quadrature
 * tolerances; the defaults reproduce every constant to < 1e-6.
 */
std::vector<AuditItem> audit_quadrature_constants(int oversample = 1);

/*
 * Scalar inequalities on dense grids (>= 1e4 points) plus a closed-form
 * dominance check beyond each grid's right end, and the crossing point
 * x0 of e^x = 1 + 2x by bisection.
 */
std::vector<AuditItem> audit_scalar_inequalities(int oversample = 1);

/*
 * Staged region constants: the angular maximum on [pi/4, arctan 10]
 * (golden section refined by derivative bisection), the four bound
 * stages at eta2 = 5, |eta| = 52, and the wedge stages at |eta| = 42,
 * alpha = pi/8 (tiny ones in log10).
 */
std::vector<AuditItem> audit_region_constants(int oversample = 1);

// Entire default suite in a fixed order.
std::vector<AuditItem> run_all_audits(int oversample = 1);

// Plain-text table of the items.
std::string audit_table(const std::vector<AuditItem>& items);

} // namespace rsaux

#endif
