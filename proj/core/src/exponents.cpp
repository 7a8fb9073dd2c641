#include "abelmom/exponents.hpp"

#include "abelmom/errors.hpp"

namespace abelmom {

namespace {

std::string containment_in(const mpq_class& v, int ell) {
    const mpq_class lo(1, ell + 1);
    const mpq_class hi(1, ell);
    if (v <= lo || v >= hi) {
        if (v == lo || v == hi) return "boundary";
        return "outside";
    }
    return "interior";
}

}  // namespace

ExponentEntry u_r(int r) {
    if (r < 2) throw CapacityError("u_r: r must be >= 2");
    if (r > 62) throw CapacityError("u_r: r too large for exact 2^{r+2}");
    mpz_class num = (mpz_class(1) << (r + 1)) - 1;
    mpz_class den = (mpz_class(1) << (r + 2)) + 1;
    ExponentEntry e;
    e.name = "u_" + std::to_string(r);
    e.value = mpq_class(num, den);
    e.value.canonicalize();
    e.containment = containment_in(e.value, 2);
    return e;
}

ExponentEntry u_kl(long long k, int ell) {
    if (k < 2 || ell < 2) throw CapacityError("u_kl: need k, ell >= 2");
    ExponentEntry e;
    e.name = "u_{" + std::to_string(k) + "," + std::to_string(ell) + "}";
    const mpz_class num = mpz_class(2) * static_cast<long>(k) - 1;
    const mpz_class den = num * ell + 3;
    e.value = mpq_class(num, den);
    e.value.canonicalize();
    e.containment = containment_in(e.value, ell);
    return e;
}

std::vector<ExponentEntry> known_exponents() {
    std::vector<ExponentEntry> out;
    ExponentEntry a;
    a.name = "delta2_bound";  // remainder exponent for the quadratic moment
    a.value = mpq_class(45, 127);
    a.log_power = 5;
    a.containment = containment_in(a.value, 2);
    out.push_back(a);
    ExponentEntry b;
    b.name = "quadratic_previous";  // the bound the quadratic moment improves on
    b.value = mpq_class(96, 245);
    out.push_back(b);
    ExponentEntry c;
    c.name = "first_moment_bound";  // R(x) exponent for sum a(n), up to epsilon
    c.value = mpq_class(1, 4);
    out.push_back(c);
    return out;
}

std::vector<ExponentEntry> reference_exponents_r(int r) {
    std::vector<ExponentEntry> out;
    out.push_back(u_r(r));
    if (r <= 60) {
        // u_r coincides with u_{k,ell} at k = 2^r, ell = 2
        out.push_back(u_kl(1LL << r, 2));
    }
    if (r == 2)
        for (auto& e : known_exponents()) out.push_back(e);
    return out;
}

std::vector<ExponentEntry> reference_exponents_kl(long long k, int ell) {
    return {u_kl(k, ell)};
}

}  // namespace abelmom
