#pragma once

#include <string>
#include <vector>

#include "cayley/enumerate.hpp"

namespace cayley {

struct CaseFailure {
    std::string input;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    long long cases = 0;
    std::vector<CaseFailure> failures;
    double seconds = 0.0;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int max_vertices = 7;
    int max_d = 3;
    unsigned seed = 20240718u;
    int substitutions = 20;  // determinant suite
    EnumBounds bounds{};
};

// Suites, one per family of identities. Each cross-checks library
// operations against independent brute force at the given scale.
VerificationReport verify_unitype(const VerifyOptions& opt);
VerificationReport verify_multitype_gf(const VerifyOptions& opt);
VerificationReport verify_determinant(const VerifyOptions& opt);
VerificationReport verify_forests(const VerifyOptions& opt);
VerificationReport verify_counting(const VerifyOptions& opt);
VerificationReport verify_bijections(const VerifyOptions& opt);
VerificationReport verify_lagrange(const VerifyOptions& opt);
VerificationReport verify_cacti(const VerifyOptions& opt);
VerificationReport verify_plane_trees(const VerifyOptions& opt);

const std::vector<std::string>& verify_suite_names();
// Runs one suite by name, or all of them for "all" (reports concatenated
// into one).
std::vector<VerificationReport> run_suites(const std::string& name,
                                           const VerifyOptions& opt);

}  // namespace cayley
