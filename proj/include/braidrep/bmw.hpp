#pragma once

// The braid action on the T_{ij} basis of the (n-2)x1 summand of the BMW
// algebra C_n(l, m), and its comparison with the Lawrence-Krammer matrices.

#include "braidrep/laurent.hpp"
#include "braidrep/matrix.hpp"
#include "braidrep/report.hpp"

namespace braidrep {

/// kappa and l^{-1} must be units of the common ring.
struct BmwParams {
    LaurentPoly kappa;
    LaurentPoly m;
    LaurentPoly l_inv;

    BmwParams(LaurentPoly kappa, LaurentPoly m, LaurentPoly l_inv);

    const VarList& vars() const { return kappa.vars(); }

    /// Over (kappa, t): m = kappa + kappa^{-1}, l^{-1} = t*kappa^{-3}.
    static BmwParams identified();
    /// Over independent (kappa, m, l).
    static BmwParams generic();
};

/// ("kappa", "t")
const VarList& kappa_t_vars();
/// The image of q under the identification, -kappa^{-2}.
LaurentPoly q_in_kappa();

/// sigma_i acting as G_i / kappa on T_{jk}; columns hold images.
RingMatrix bmw_generator(int n, int i, const BmwParams& p);

/// Lawrence-Krammer generator rewritten over (kappa, t) and conjugated by
/// diag(kappa^{i+j+k_shift}); one item per generator, failing items carry
/// the first mismatching entry.
CheckReport theorem3_check(int n, int k_shift);

/// BMW defining relations on G = kappa * bmw_generator and
/// F = G + G^{-1} - m I (= m E), each multiplied through by m per E.
CheckReport bmw_relation_suite(int n);

/// (M - I)(M + qI)(M - tq^2 I) = 0 for each Lawrence-Krammer generator.
CheckReport eigen_structure_check(int n);

}  // namespace braidrep
