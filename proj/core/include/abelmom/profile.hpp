#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <vector>

namespace abelmom {

// Declared growth family of nu -> g(nu), used for rigorous profile-tail
// bounds in the Euler products (condition ii) checks).
//   constant:      g identically 1 beyond some index
//   polynomial:    g(nu) <= scale * nu^param
//   partition_pow: g(nu) <= e^{param * pi sqrt(2 nu / 3)}  (P(nu)^r bound)
//   unknown:       no declared bound; observed-ratio extrapolation applies
enum class Growth { constant, polynomial, partition_pow, unknown };

// A prime-independent multiplicative function: f(p^nu) = values[nu] for every
// prime p.  values[0] must be 1.  Everything the library sums or convolves is
// built from one of these.
struct Profile {
    std::vector<mpz_class> values;
    std::string name;
    std::string growth_note;
    Growth growth = Growth::unknown;
    int growth_param = 0;

    int nu_max() const { return static_cast<int>(values.size()) - 1; }

    // f(p^nu); throws ProfileTooShort past nu_max and MalformedProfile on
    // negative nu.
    const mpz_class& at(int nu) const;

    void validate() const;  // g(0)=1, nonempty
};

// Parameters of the reduction: g(1)=...=g(ell-1)=1 and g(ell)=k with
// ell, k >= 2.
struct TheoremParams {
    int ell = 0;
    long long k = 0;
};

// Least nu >= 1 with g(nu) != 1 and its value; throws InapplicableTheorem
// when the pattern fails (ell would be 1, all values 1, or k not an
// integer >= 2 fitting long long).
TheoremParams detect_params(const Profile& profile);

// Built-in registry: name in {abelian, exp_divisor, exp_totient, one};
// r-th powers of P(nu), d(nu), phi(nu), 1 respectively.  "custom" profiles
// are constructed with custom_profile.
Profile registry(const std::string& name, int r, int nu_max = 64);

Profile custom_profile(std::vector<mpz_class> values, std::string name = "custom",
                       std::string growth_note = "");

// Euler's totient of a small integer (used for the exp_totient profile).
std::uint64_t totient_u64(std::uint64_t n);

// Number of divisors of a small integer (used for the exp_divisor profile).
std::uint64_t divisor_count_u64(std::uint64_t n);

}  // namespace abelmom
