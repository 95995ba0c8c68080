#include "campana/eulerprod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace campana {

namespace {

// B_{2k}/(2k)! for k = 1..8
constexpr double kBernoulliOverFact[] = {
    1.0 / 12.0,                      // B2/2!
    -1.0 / 720.0,                    // B4/4!
    1.0 / 30240.0,                   // B6/6!
    -1.0 / 1209600.0,                // B8/8!
    1.0 / 47900160.0,                // B10/10!
    -691.0 / 1307674368000.0,        // B12/12!
    7.0 / 74724249600.0,             // B14/14!
    -3617.0 / 10670622842880000.0,   // B16/16!
};

double euler_maclaurin_hurwitz(double s, double x, int direct_terms) {
    double sum = 0.0;
    for (int n = direct_terms - 1; n >= 0; --n)  // small terms first
        sum += std::pow(n + x, -s);
    const double T = direct_terms + x;
    double result = sum + std::pow(T, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(T, -s);
    double poch = s;               // s(s+1)...(s+2k-2)
    double tpow = std::pow(T, -s - 1.0);
    for (int k = 1; k <= 8; ++k) {
        result += kBernoulliOverFact[k - 1] * poch * tpow;
        poch *= (s + 2 * k - 1) * (s + 2 * k);
        tpow /= T * T;
    }
    return result;
}

}  // namespace

double zeta(double s) {
    if (s <= 1.0) throw std::invalid_argument("zeta: s <= 1");
    return euler_maclaurin_hurwitz(s, 1.0, 10'000);
}

double hurwitz_zeta(double s, double x) {
    if (s <= 1.0) throw std::invalid_argument("hurwitz_zeta: s <= 1");
    if (!(x > 0.0 && x <= 1.0)) throw std::invalid_argument("hurwitz_zeta: x outside (0,1]");
    return euler_maclaurin_hurwitz(s, x, 64);
}

// ---------------------------------------------------------------------

PolyQ PolyQ::binomial(int m, int sign) {
    PolyQ p;
    p.c.assign(m + 1, Rational(0));
    p.c[0] = Rational(1);
    p.c[m] = Rational(sign);
    return p;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    PolyQ r;
    if (c.empty() || o.c.empty()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].num == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            if (o.c[j].num != 0) r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    return r;
}

double PolyQ::eval(double q) const {
    double r = 0.0;
    for (size_t i = c.size(); i-- > 0;) r = r * q + c[i].to_double();
    return r;
}

double RationalFnQ::eval_at_prime(i64 p) const {
    double q = 1.0 / std::sqrt(static_cast<double>(p));
    return num.eval(q) / den.eval(q);
}

namespace {

// Taylor coefficients of num/den (den[0] must be 1), exact.
std::vector<Rational> series_quotient(const PolyQ& num, const PolyQ& den, int order) {
    if (den.coeff(0).num != den.coeff(0).den)
        throw std::invalid_argument("series_quotient: den(0) != 1");
    std::vector<Rational> t(order + 1, Rational(0));
    for (int k = 0; k <= order; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= k; ++j)
            acc = acc - den.coeff(j) * t[k - j];
        t[k] = acc;
    }
    return t;
}

ResidualBound residual_bound_from(const PolyQ& num, const PolyQ& den, i64 valid_from) {
    // residual - 1 = (num - den)/den; bound each side by coefficient sums
    // at q0 = valid_from^{-1/2}
    int deg = std::max(num.degree(), den.degree());
    int k0 = -1;
    for (int k = 0; k <= deg; ++k) {
        Rational d = num.coeff(k) - den.coeff(k);
        if (d.num != 0) { k0 = k; break; }
    }
    if (k0 < 0) return {0.0, 3.0, valid_from};  // residual identically 1
    if (k0 < 6)
        throw std::logic_error("accelerated residual is not 1 + O(p^{-3})");
    const double q0 = 1.0 / std::sqrt(static_cast<double>(valid_from));
    double numer = 0.0;
    for (int k = k0; k <= deg; ++k) {
        Rational d = num.coeff(k) - den.coeff(k);
        numer += std::abs(d.to_double()) * std::pow(q0, k - k0);
    }
    double den_min = 1.0;
    for (int k = 1; k <= den.degree(); ++k)
        den_min -= std::abs(den.coeff(k).to_double()) * std::pow(q0, k);
    if (den_min <= 0.0)
        throw std::logic_error("residual denominator bound failed");
    return {numer / den_min, 0.5 * k0, valid_from};
}

}  // namespace

EulerProductSpec accelerated_spec(const RationalFnQ& local,
                                  std::vector<ZetaAccelerator> accelerators,
                                  i64 prime_cutoff,
                                  std::vector<i64> excluded_primes) {
    PolyQ num = local.num;
    PolyQ den = local.den;
    for (const auto& acc : accelerators) {
        int m = static_cast<int>(std::lround(2.0 * acc.s));
        if (std::abs(2.0 * acc.s - m) > 1e-12 || acc.s <= 1.0)
            throw std::invalid_argument("accelerator s must be a half-integer > 1");
        PolyQ f = PolyQ::binomial(m, -1);  // 1 - q^{2s}
        for (int i = 0; i < std::abs(acc.exponent); ++i) {
            if (acc.exponent > 0) num = num * f;
            else den = den * f;
        }
    }
    // normalize so den(0) = 1; local factors here always have num(0)=den(0)=1
    auto t = series_quotient(num, den, 5);
    if (!(t[0] == Rational(1)))
        throw std::logic_error("residual series does not start at 1");
    for (int k = 1; k <= 5; ++k)
        if (t[k].num != 0)
            throw std::logic_error("residual series has a term below q^6");
    ResidualBound bound = residual_bound_from(num, den, 11);

    EulerProductSpec spec;
    RationalFnQ residual{num, den};
    spec.residual_factor = [residual](i64 p) { return residual.eval_at_prime(p); };
    spec.zeta_accelerators = std::move(accelerators);
    spec.excluded_primes = std::move(excluded_primes);
    spec.prime_cutoff = prime_cutoff;
    spec.bound = bound;
    return spec;
}

ProductResult eval_product(const EulerProductSpec& spec) {
    if (spec.prime_cutoff < spec.bound.valid_from)
        throw std::invalid_argument("eval_product: cutoff below bound validity range");
    double value = 1.0;
    for (const auto& acc : spec.zeta_accelerators)
        value *= std::pow(zeta(acc.s), acc.exponent);
    std::size_t used = 0;
    const auto& primes = prime_table();
    if (spec.prime_cutoff > primes.back())
        throw std::invalid_argument("eval_product: cutoff beyond prime table");
    for (i64 p : primes) {
        if (p > spec.prime_cutoff) break;
        if (std::find(spec.excluded_primes.begin(), spec.excluded_primes.end(), p) !=
            spec.excluded_primes.end())
            continue;
        double f = spec.residual_factor(p);
        if (f <= 0.0) throw std::domain_error("eval_product: nonpositive local factor");
        value *= f;
        ++used;
    }
    // sum_{p > P} |log residual| <= C/(1-eps) sum_{n > P} n^-kappa
    //                            <= C/(1-eps) P^{1-kappa}/(kappa-1)
    const double P = static_cast<double>(spec.prime_cutoff);
    const double kappa = spec.bound.exponent;
    double eps = spec.bound.coeff * std::pow(P, -kappa);
    double tail_factor = 0.0;
    if (spec.bound.coeff > 0.0) {
        if (eps >= 0.5) throw std::domain_error("eval_product: tail bound out of range");
        double log_sum = spec.bound.coeff / (1.0 - eps) * std::pow(P, 1.0 - kappa) / (kappa - 1.0);
        tail_factor = std::exp(log_sum) - 1.0;
    }
    return {value, std::abs(value) * tail_factor, used};
}

// ---------------------------------------------------------------------

PeriodicCharacter jacobi_top_character(i64 m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("jacobi_top_character: m must be odd positive");
    PeriodicCharacter chi;
    chi.modulus = m;
    chi.values.resize(static_cast<size_t>(m));
    for (i64 r = 0; r < m; ++r) chi.values[r] = jacobi(r, m);
    return chi;
}

PeriodicCharacter twisted_character(i64 m, i64 t) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("twisted_character: m must be odd positive");
    i64 at = t < 0 ? -t : t;
    if (at % m != 0)
        throw std::invalid_argument("twisted_character: need m | |t| for periodicity");
    PeriodicCharacter chi;
    chi.modulus = 4 * at;
    chi.values.resize(static_cast<size_t>(chi.modulus));
    for (i64 r = 0; r < chi.modulus; ++r)
        chi.values[r] = (r % 2 == 0) ? 0 : jacobi(r, m) * jacobi(t, r);
    return chi;
}

double dirichlet_l(double s, const PeriodicCharacter& chi) {
    const i64 M = chi.modulus;
    double sum = 0.0;
    for (i64 r = 1; r <= M; ++r) {
        int v = chi.values[static_cast<size_t>(r % M)];
        if (v != 0) sum += v * hurwitz_zeta(s, static_cast<double>(r) / M);
    }
    return sum * std::pow(static_cast<double>(M), -s);
}

// ---------------------------------------------------------------------

namespace {

// worst-case bound over the sign patterns of the twisted residual
const ResidualBound& twisted_residual_bound() {
    static const ResidualBound bound = [] {
        double coeff = 0.0;
        double kappa = 1e9;
        for (int chi : {-1, 1}) {
            for (int psi : {-1, 1}) {
                int cp = chi * psi;
                PolyQ base;
                base.c = {Rational(1), Rational(0), Rational(1), Rational(chi * (1 + psi))};
                PolyQ num = base * PolyQ::binomial(3, -chi) * PolyQ::binomial(3, -cp);
                PolyQ den = PolyQ::binomial(2, 1) * PolyQ::binomial(5, -chi) *
                            PolyQ::binomial(5, -cp);
                ResidualBound b = residual_bound_from(num, den, 11);
                coeff = std::max(coeff, b.coeff);
                kappa = std::min(kappa, b.exponent);
            }
        }
        return ResidualBound{coeff, kappa, 11};
    }();
    return bound;
}

double tail_factor_for(const ResidualBound& b, i64 cutoff) {
    const double P = static_cast<double>(cutoff);
    double eps = b.coeff * std::pow(P, -b.exponent);
    if (eps >= 0.5) throw std::domain_error("tail bound out of range");
    double log_sum = b.coeff / (1.0 - eps) * std::pow(P, 1.0 - b.exponent) / (b.exponent - 1.0);
    return std::exp(log_sum) - 1.0;
}

}  // namespace

ProductResult twisted_product(const BinaryFormParams& params, i64 k, i64 l,
                              i64 prime_cutoff) {
    params.require_valid();
    if (k < 1 || params.a % k != 0) throw std::invalid_argument("twisted_product: k must divide a");
    if (l < 1 || params.b % l != 0) throw std::invalid_argument("twisted_product: l must divide b");
    const i64 ab = checked_mul(params.a, params.b);
    const i64 kl = checked_mul(k, l);
    const int eps_sign = jacobi(params.b, k) * jacobi(params.a, l);

    PeriodicCharacter chi_p = jacobi_top_character(kl);
    PeriodicCharacter chi_q = twisted_character(kl, -ab);

    double prefactor = 1.0;
    for (double s : {1.5, 2.5}) {
        double lp = dirichlet_l(s, chi_p);
        double lq = dirichlet_l(s, chi_q);
        // remove Euler factors at p | 2ab so the L-values match the
        // restricted product
        for (const auto& pp : factorize(2 * ab).factors) {
            int cp = chi_p(pp.prime);
            if (cp != 0) lp *= 1.0 - cp * std::pow(static_cast<double>(pp.prime), -s);
            if (chi_q(pp.prime) != 0)
                throw std::logic_error("twisted character should vanish at p | 2ab");
        }
        if (s == 1.5) prefactor *= lp * lq;
        else prefactor /= lp * lq;
    }

    double prod = 1.0;
    std::size_t used = 0;
    const auto& primes = prime_table();
    if (prime_cutoff > primes.back())
        throw std::invalid_argument("twisted_product: cutoff beyond prime table");
    for (i64 p : primes) {
        if (p > prime_cutoff) break;
        if (p == 2 || ab % p == 0) continue;
        int chi = chi_p(p);
        int psi = jacobi(-ab, p);
        int cp = chi * psi;
        double q = 1.0 / std::sqrt(static_cast<double>(p));
        double q2 = q * q, q3 = q2 * q, q5 = q3 * q2;
        double fac = 1.0 + chi * (1 + psi) * q3 / (1.0 + q2);
        double res = fac * (1.0 - chi * q3) * (1.0 - cp * q3) /
                     ((1.0 - chi * q5) * (1.0 - cp * q5));
        prod *= res;
        ++used;
    }
    double value = eps_sign * prefactor * prod;
    double tail = std::abs(value) * tail_factor_for(twisted_residual_bound(), prime_cutoff);
    return {value, tail, used};
}

double cor16_ratio(std::optional<i64> max_p, i64 prime_cutoff) {
    auto g = [](i64 p) {
        double q = 1.0 / std::sqrt(static_cast<double>(p));
        double q2 = q * q, q3 = q2 * q;
        return (1.0 + q2 + 2.0 * q3) / (1.0 + q2 - 2.0 * q3);
    };
    if (max_p) {
        double prod = 1.0;
        for (i64 p : prime_table()) {
            if (p > *max_p) break;
            prod *= g(p);
        }
        return prod;
    }
    RationalFnQ local;
    local.num.c = {Rational(1), Rational(0), Rational(1), Rational(2)};
    local.den.c = {Rational(1), Rational(0), Rational(1), Rational(-2)};
    auto spec = accelerated_spec(local, {{1.5, 4}, {2.5, -4}}, prime_cutoff);
    return eval_product(spec).value;
}

ConstantReport c_pstva_three(i64 prime_cutoff) {
    // (1-1/p) sigma_p = 1 + 3q^3 - q^4 - 3q^5
    RationalFnQ local;
    local.num.c = {Rational(1), Rational(0), Rational(0), Rational(3), Rational(-1), Rational(-3)};
    local.den.c = {Rational(1)};
    auto spec = accelerated_spec(local, {{1.5, 3}, {4.0, 1}, {2.0, -1}, {5.0, 3}, {2.5, -3}},
                                 prime_cutoff);
    ProductResult tam = eval_product(spec);

    ConstantReport rep;
    rep.name = "c_pstva_three";
    rep.alpha = 0.125;
    rep.beta = 1.0;
    rep.sigma_inf = sigma_inf_three();
    rep.exponent_a = Rational(1, 2);
    rep.exponent_b = Rational(1);
    rep.value = 0.25 * rep.sigma_inf * tam.value;
    rep.tail_estimate = 0.25 * rep.sigma_inf * tam.tail_estimate;
    rep.truncation = "euler product over primes <= " + std::to_string(prime_cutoff) +
                     ", accelerators zeta(3/2)^3 zeta(4)/zeta(2) (zeta(5)/zeta(5/2))^3";
    rep.breakdown = {
        {"tamagawa_product", tam.value},
        {"sigma_inf", rep.sigma_inf},
        {"value_over_3", rep.value / 3.0},
    };
    return rep;
}

double c_pstva_three_product_route(i64 prime_cutoff) {
    // (9/2pi) prod_p (1 + 3 q^3 / (1+q^2))
    RationalFnQ local;
    local.num.c = {Rational(1), Rational(0), Rational(1), Rational(3)};
    local.den.c = {Rational(1), Rational(0), Rational(1)};
    auto spec = accelerated_spec(local, {{1.5, 3}, {5.0, 3}, {2.5, -3}}, prime_cutoff);
    ProductResult pr = eval_product(spec);
    return 4.5 / std::numbers::pi * pr.value;
}

ConstantReport c_pstva_binary(const BinaryFormParams& params, i64 prime_cutoff) {
    params.require_valid();
    ProductResult tp = twisted_product(params, 1, 1, prime_cutoff);
    double si = sigma_inf_binary(params);
    double R = 2.0 * si * gamma_factor(checked_mul(params.a, params.b)).to_double() /
               (std::numbers::pi * std::numbers::pi);
    ConstantReport rep;
    rep.name = "c_pstva_binary";
    rep.alpha = 0.5;
    rep.beta = 1.0;
    rep.sigma_inf = si;
    rep.exponent_a = Rational(1);
    rep.exponent_b = Rational(1);
    rep.value = R * tp.value;
    rep.tail_estimate = R * tp.tail_estimate;
    rep.truncation = "character-accelerated euler product over primes <= " +
                     std::to_string(prime_cutoff);
    rep.breakdown = {
        {"R_prefactor", R},
        {"euler_product", tp.value},
        {"sigma_inf", si},
    };
    return rep;
}

}  // namespace campana
