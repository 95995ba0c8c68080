#include "campana/localdensity.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace campana {

bool FiberIndex::valid() const {
    if (y0 == 0 || y1 == 0 || y2 == 0) return false;
    i64 n = checked_mul(checked_mul(y0 < 0 ? -y0 : y0, y1 < 0 ? -y1 : y1),
                        y2 < 0 ? -y2 : y2);
    return is_squarefree(n);
}

bool BinaryFormParams::valid() const {
    return a > 0 && b > 0 && a % 4 == 1 && b % 4 == 1 && is_squarefree(checked_mul(a, b));
}

void BinaryFormParams::require_valid() const {
    if (a <= 0 || b <= 0) throw std::invalid_argument("a, b must be positive");
    if (!is_squarefree(a)) throw std::invalid_argument("a must be squarefree");
    if (!is_squarefree(b)) throw std::invalid_argument("b must be squarefree");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("a, b must be coprime");
    if (a % 4 != 1) throw std::invalid_argument("a must be 1 mod 4");
    if (b % 4 != 1) throw std::invalid_argument("b must be 1 mod 4");
}

Rational gamma_factor(i64 d) {
    if (d < 1) throw std::invalid_argument("gamma_factor: d < 1");
    Rational r(1);
    for (const auto& pp : factorize(d).factors)
        if (pp.prime > 2) r = r * Rational(pp.prime, pp.prime + 1);
    return r;
}

i64 rho_y(const FiberIndex& y) {
    if (!y.valid()) throw std::invalid_argument("rho_y: mu^2(y0 y1 y2) != 1");
    i64 a0 = y.y0 < 0 ? -y.y0 : y.y0;
    i64 a1 = y.y1 < 0 ? -y.y1 : y.y1;
    i64 a2 = y.y2 < 0 ? -y.y2 : y.y2;
    i64 r = 1;
    auto fold = [&r](i64 modulus_src, i64 symbol_arg) {
        for (const auto& pp : factorize(modulus_src).factors) {
            if (pp.prime <= 2) continue;
            r *= 1 + jacobi(symbol_arg % pp.prime, pp.prime);
            if (r == 0) return;
        }
    };
    fold(a0, checked_mul(a1, a2));
    if (r != 0) fold(a1, checked_mul(a0, a2));
    if (r != 0) fold(a2, -checked_mul(a0, a1));
    return r;
}

int sigma_2y_closed(const FiberIndex& y) {
    if (!y.valid()) throw std::invalid_argument("sigma_2y_closed: invalid fiber");
    i64 y0 = y.y0 < 0 ? -y.y0 : y.y0;
    i64 y1 = y.y1 < 0 ? -y.y1 : y.y1;
    i64 y2 = y.y2 < 0 ? -y.y2 : y.y2;
    int even = (y0 % 2 == 0) + (y1 % 2 == 0) + (y2 % 2 == 0);
    if (even > 1) throw std::invalid_argument("sigma_2y_closed: two even coordinates");
    if (even == 0) {
        bool all_cong = (y0 % 4 == y1 % 4) && (y0 % 4 == (4 - y2 % 4) % 4);
        return all_cong ? 0 : 1;
    }
    if (y0 % 2 == 0 && (y1 - y2) % 8 == 0) return 2;
    if (y1 % 2 == 0 && (y0 - y2) % 8 == 0) return 2;
    if (y2 % 2 == 0 && (y0 + y1) % 8 == 0) return 2;
    return 0;
}

Rational sigma_2y_limit(const FiberIndex& y, int r) {
    if (!y.valid()) throw std::invalid_argument("sigma_2y_limit: invalid fiber");
    if (r < 1 || r > 14) throw std::invalid_argument("sigma_2y_limit: r outside [1,14]");
    const i64 M = i64(1) << r;
    const i64 mask = M - 1;
    i64 y0 = y.y0 < 0 ? -y.y0 : y.y0;
    i64 y1 = y.y1 < 0 ? -y.y1 : y.y1;
    i64 y2 = y.y2 < 0 ? -y.y2 : y.y2;
    auto cube_mod = [&](i64 v) { return (((i128(v) * v) % M) * v) % M; };
    const i64 c0 = cube_mod(y0), c1 = cube_mod(y1), c2 = cube_mod(y2);

    auto v2_res = [&](i64 x) {  // truncated valuation of a residue
        if (x == 0) return r;
        int v = 0;
        while ((x & 1) == 0) { x >>= 1; ++v; }
        return v;
    };
    const int v2y0 = y0 % 2 == 0 ? 1 : 0;
    const int v2y1 = y1 % 2 == 0 ? 1 : 0;
    const int v2y2 = y2 % 2 == 0 ? 1 : 0;

    // x2 residue tables: all solutions of c2 x2^2 = w, and those with
    // nu_2(x2 y2) = 0
    std::vector<i64> cnt_all(M, 0), cnt_unit(M, 0);
    for (i64 x2 = 0; x2 < M; ++x2) {
        i64 w = i64((i128(c2) * x2 % M) * x2 % M);
        cnt_all[w]++;
        if (v2_res(x2) + v2y2 == 0) cnt_unit[w]++;
    }
    std::vector<i64> sq1(M);
    std::vector<unsigned char> unit1(M);
    for (i64 x1 = 0; x1 < M; ++x1) {
        sq1[x1] = i64((i128(c1) * x1 % M) * x1 % M);
        unit1[x1] = (v2_res(x1) + v2y1 == 0);
    }

    i64 total = 0;
    for (i64 x0 = 0; x0 < M; ++x0) {
        i64 t0 = i64((i128(c0) * x0 % M) * x0 % M);
        bool unit0 = (v2_res(x0) + v2y0 == 0);
        if (unit0) {
            for (i64 x1 = 0; x1 < M; ++x1) total += cnt_all[(t0 + sq1[x1]) & mask];
        } else {
            for (i64 x1 = 0; x1 < M; ++x1) {
                i64 w = (t0 + sq1[x1]) & mask;
                total += unit1[x1] ? cnt_all[w] : cnt_unit[w];
            }
        }
    }
    return Rational(total, (i64(1) << (2 * r)));
}

double sigma_p_three(i64 p) {
    if (p < 2) throw std::invalid_argument("sigma_p_three: p < 2");
    double dp = static_cast<double>(p);
    return 1.0 + 1.0 / dp + 3.0 * std::pow(dp, -1.5);
}

double sigma_inf_three() { return 3.0 * std::numbers::pi; }

double sigma_p_binary(i64 p, const BinaryFormParams& params) {
    params.require_valid();
    if (p == 2 || params.a % p == 0 || params.b % p == 0) return 1.0;
    double dp = static_cast<double>(p);
    i64 ab = checked_mul(params.a, params.b);
    int chi = jacobi(-ab, p);
    return 1.0 + 1.0 / dp + (1.0 + chi) * std::pow(dp, -1.5);
}

double sigma_inf_binary(const BinaryFormParams& params) {
    params.require_valid();
    double a = static_cast<double>(params.a), b = static_cast<double>(params.b);
    return 2.0 * (std::asinh(std::sqrt(a / b)) / std::sqrt(a) +
                  std::asinh(std::sqrt(b / a)) / std::sqrt(b));
}

namespace {

i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

int val_of_residue(i64 w, i64 p, int cap) {
    // valuation of a residue mod p^cap; w != 0 assumed
    int v = 0;
    while (w % p == 0 && v < cap) { w /= p; ++v; }
    return v;
}

void check_oracle_budget(i64 p, int depth) {
    if (depth < 1 || depth > 8) throw std::invalid_argument("oracle: depth outside [1,8]");
    double cost = std::pow(static_cast<double>(p), depth + 1);
    if (cost > 2.5e8) throw std::invalid_argument("oracle: p^(depth+1) outside budget");
}

}  // namespace

DensityValue sigma_p_three_oracle(i64 p, int depth) {
    check_oracle_budget(p, depth);
    const int d1 = depth + 1;
    const i64 M = ipow(p, d1);
    const double scale = 1.0 / static_cast<double>(M);
    std::vector<double> half_pow(2 * d1 + 2);
    for (size_t k = 0; k < half_pow.size(); ++k)
        half_pow[k] = std::pow(static_cast<double>(p), 0.5 * k);

    double total = 0.0;
    // nonnegative-valuation chart: integrand p^{(nu(t)+nu(1+t))/2}
    for (i64 t = 0; t < M; ++t) {
        i64 u = t + 1 == M ? 0 : t + 1;
        if (t == 0 || u == 0) continue;  // valuation beyond depth: tail
        int a = val_of_residue(t, p, d1);
        int b = val_of_residue(u, p, d1);
        if (a == 1 || b == 1) continue;  // Campana condition
        total += half_pow[a + b] * scale;
    }
    // t = 1/s substitution covers nu(t) <= -2: integrand p^{nu(s)/2} ds
    // over nu(s) >= 2
    const i64 p2 = p * p;
    for (i64 s = p2; s < M; s += p2) {
        int j = val_of_residue(s, p, d1);
        total += half_pow[j] * scale;
    }
    double rt = 1.0 / std::sqrt(static_cast<double>(p));
    double tail = 3.0 * (1.0 - 1.0 / p) * std::pow(rt, d1) / (1.0 - rt);
    return {total, tail};
}

DensityValue sigma_p_binary_oracle(i64 p, const BinaryFormParams& params, int depth) {
    params.require_valid();
    check_oracle_budget(p, depth);
    const int d1 = depth + 1;
    const i64 M = ipow(p, d1);
    const double scale = 1.0 / static_cast<double>(M);
    const i64 a = params.a % M, b = params.b % M;
    std::vector<double> half_pow(d1 + 1);
    for (int k = 0; k <= d1; ++k) half_pow[k] = std::pow(static_cast<double>(p), 0.5 * k);

    double total = 0.0;
    i64 omitted = 0;
    // chart |z|_p <= 1: integrand p^{nu(a z^2 + b)/2}, excluded when nu = 1
    for (i64 z = 0; z < M; ++z) {
        i64 w = i64((i128(a) * z % M * z + b) % M);
        if (w == 0) { ++omitted; continue; }
        int m = val_of_residue(w, p, d1);
        if (m == 1) continue;
        total += half_pow[m] * scale;
    }
    // z = 1/s substitution covers nu(z) < 0: integrand p^{nu(a + b s^2)/2} ds
    // over nu(s) >= 1, excluded when nu(a + b s^2) is odd
    for (i64 s = 0; s < M; s += p) {
        i64 w = i64((i128(b) * s % M * s + a) % M);
        if (w == 0) { ++omitted; continue; }
        int m = val_of_residue(w, p, d1);
        if (m % 2 == 1) continue;
        total += half_pow[m] * scale;
    }
    double rt = 1.0 / std::sqrt(static_cast<double>(p));
    double tail = static_cast<double>(omitted) * std::pow(rt, d1) / (1.0 - rt);
    return {total, tail};
}

}  // namespace campana
