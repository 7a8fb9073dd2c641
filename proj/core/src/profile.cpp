#include "abelmom/profile.hpp"

#include "abelmom/errors.hpp"
#include "abelmom/partition.hpp"

namespace abelmom {

const mpz_class& Profile::at(int nu) const {
    if (nu < 0) throw MalformedProfile("profile index must be >= 0");
    if (nu >= static_cast<int>(values.size()))
        throw ProfileTooShort("profile '" + name + "' has nu_max=" +
                              std::to_string(nu_max()) + ", needs nu=" + std::to_string(nu));
    return values[static_cast<std::size_t>(nu)];
}

void Profile::validate() const {
    if (values.empty() || values[0] != 1)
        throw MalformedProfile("profile '" + name + "': g(0) must be 1");
}

TheoremParams detect_params(const Profile& profile) {
    profile.validate();
    int ell = 0;
    for (int nu = 1; nu <= profile.nu_max(); ++nu) {
        if (profile.values[static_cast<std::size_t>(nu)] != 1) {
            ell = nu;
            break;
        }
    }
    if (ell == 0)
        throw InapplicableTheorem("profile '" + profile.name +
                                  "': no index with g(nu) != 1 up to nu_max");
    if (ell == 1)
        throw InapplicableTheorem("profile '" + profile.name +
                                  "': g(1) != 1, so ell would be 1 (need ell >= 2)");
    const mpz_class& kz = profile.values[static_cast<std::size_t>(ell)];
    if (kz < 2 || !kz.fits_slong_p())
        throw InapplicableTheorem("profile '" + profile.name +
                                  "': g(ell) must be an integer in [2, 2^63)");
    return TheoremParams{ell, static_cast<long long>(kz.get_si())};
}

std::uint64_t totient_u64(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::uint64_t divisor_count_u64(std::uint64_t n) {
    std::uint64_t count = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            std::uint64_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            count *= e + 1;
        }
    }
    if (n > 1) count *= 2;
    return count;
}

namespace {

mpz_class pow_r(const mpz_class& base, int r) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(r));
    return out;
}

}  // namespace

Profile registry(const std::string& name, int r, int nu_max) {
    if (r < 1) throw UnknownFunction("registry: r must be >= 1");
    if (nu_max < 1) throw UnknownFunction("registry: nu_max must be >= 1");
    Profile out;
    out.values.reserve(static_cast<std::size_t>(nu_max) + 1);
    if (name == "abelian") {
        const auto p = partition_table(nu_max);
        for (const auto& v : p) out.values.push_back(pow_r(v, r));
        out.growth_note = "subexponential: P(nu)^r < e^{r pi sqrt(2 nu/3)}";
        out.growth = Growth::partition_pow;
        out.growth_param = r;
    } else if (name == "exp_divisor") {
        out.values.emplace_back(1);
        for (int nu = 1; nu <= nu_max; ++nu)
            out.values.push_back(pow_r(mpz_class(divisor_count_u64(static_cast<std::uint64_t>(nu))), r));
        out.growth_note = "polynomial: d(nu)^r <= nu^r";
        out.growth = Growth::polynomial;
        out.growth_param = r;
    } else if (name == "exp_totient") {
        out.values.emplace_back(1);
        for (int nu = 1; nu <= nu_max; ++nu)
            out.values.push_back(pow_r(mpz_class(totient_u64(static_cast<std::uint64_t>(nu))), r));
        out.growth_note = "polynomial: phi(nu)^r <= nu^r";
        out.growth = Growth::polynomial;
        out.growth_param = r;
    } else if (name == "one") {
        out.values.assign(static_cast<std::size_t>(nu_max) + 1, mpz_class(1));
        out.growth_note = "constant";
        out.growth = Growth::constant;
    } else {
        throw UnknownFunction("registry: unknown function '" + name + "'");
    }
    out.name = (r == 1) ? name : name + "^" + std::to_string(r);
    out.validate();
    return out;
}

Profile custom_profile(std::vector<mpz_class> values, std::string name, std::string growth_note) {
    Profile out;
    out.values = std::move(values);
    out.name = std::move(name);
    out.growth_note = std::move(growth_note);
    out.validate();
    return out;
}

}  // namespace abelmom
