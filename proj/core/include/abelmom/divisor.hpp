#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

#include "abelmom/profile.hpp"
#include "abelmom/value_table.hpp"

namespace abelmom {

// Sorted exponent tuple j = (j_1,...,j_t) defining
//   d(j;n) = #{(d_1,...,d_t) : d_1^{j_1} ... d_t^{j_t} = n}.
struct DivisorSignature {
    std::vector<int> exponents;

    void validate() const;  // t >= 1, sorted, all >= 1
    std::string label() const;

    // (1, ell, ..., ell) with k-1 copies of ell.
    static DivisorSignature theorem_shape(int ell, long long k);

    bool is_theorem_shape() const;  // (1, l, l, ..., l) with equal tail
};

// d(j;n) for n <= x_max by one additive pass per component.
ValueTable divisor_signature_values(const DivisorSignature& j, std::uint64_t x_max);

// (A*B)(n) = sum_{ab=n} A(a) B(b), exact.
ValueTable dirichlet_convolve(const ValueTable& a, const ValueTable& b);

// Result of checking f(n) = sum_{ab=n} d((1,ell,...,ell); a) v(b) exactly.
struct IdentityReport {
    bool ok = false;
    std::uint64_t x_max = 0;
    std::uint64_t first_counterexample = 0;  // 0 when ok
    mpz_class lhs, rhs;                      // values at the counterexample
    TheoremParams params;
};

IdentityReport convolution_identity_check(const Profile& profile, const TheoremParams& params,
                                          std::uint64_t x_max);

// sum_{n<=x} d(j;n) for shape (1, ell, ..., ell), evaluated as the floor sum
//   sum over (d_2..d_k), (d_2...d_k)^ell <= x of floor(x / (d_2...d_k)^ell).
// Independent of divisor_signature_values.
mpz_class exact_divisor_sum(const DivisorSignature& j, std::uint64_t x);

}  // namespace abelmom
