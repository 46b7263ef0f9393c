#pragma once

#include <cstddef>
#include <string>

namespace qrlab {

// Every numeric tolerance used by the library lives here so that a single
// profile controls the whole stack.  Values are absolute unless noted.
struct Tolerances {
    double hermiticity = 1e-12;        // |M - M^dag| entrywise
    double eig_reconstruct = 1e-10;    // Frobenius, U diag(l) U^dag vs input
    double eig_offdiag = 1e-13;        // Jacobi stop: off-diag Frobenius / input Frobenius
    int jacobi_max_sweeps = 100;
    double trace_one = 1e-10;          // density matrix trace
    double psd = 1e-9;                 // state / effect positivity slack
    double kraus_tp = 1e-9;            // |sum K^dag K - I|
    double matfun_roundtrip = 1e-9;    // sqrt(M)^2 vs M
    double zero_eig_tie = 1e-12;       // test-operator kernel inclusion
    double solver_gap = 1e-6;          // certified primal/dual gap bound
    double free_state_offdiag = 1e-10; // incoherent membership
    double membership_slack = 1e-9;    // lambda <= 1 + slack counts as free
    std::size_t dim_cap = 4096;        // tensor() refuses larger results

    // Parse overrides of the form "key=value,key=value".  The profile name
    // "default" (or empty) keeps everything as-is.  Unknown keys throw.
    static Tolerances from_profile(const std::string& profile);
};

// Process-wide default profile used when no explicit record is passed.
const Tolerances& default_tolerances();

} // namespace qrlab
