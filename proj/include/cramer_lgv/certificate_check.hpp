#ifndef CRAMER_LGV_CERTIFICATE_CHECK_HPP
#define CRAMER_LGV_CERTIFICATE_CHECK_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace cramer_lgv {

struct CertificateCheck {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/**
 * Re-validates a certificate document on its own terms, without touching the
 * graph or path-system code that produced it.
 *
 * Path weights are recomputed straight from "A" and "solution" (edge A_r -> B_c
 * weighs A[r][c], edge B_c -> X weighs x_c), permutation signs from the cycle
 * decomposition, and both determinants by elimination. Completeness is
 * checked by counting: with every A_r -> B_c edge present, each side has
 * exactly n! vertex-disjoint systems, one per permutation.
 */
CertificateCheck check_certificate(const nlohmann::json& doc);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_CERTIFICATE_CHECK_HPP
