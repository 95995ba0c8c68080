#include "campana/counting.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace campana {

namespace {

i64 isqrt64(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::vector<bool> squareful_marks(i64 B, const std::vector<i64>& list) {
    if (B > i64(2'000'000'000))
        throw std::invalid_argument("squareful membership table: B too large");
    std::vector<bool> mark(static_cast<size_t>(B) + 1, false);
    for (i64 z : list) mark[static_cast<size_t>(z)] = true;
    return mark;
}

}  // namespace

std::vector<i64> squareful_list(i64 B) {
    if (B < 1) throw std::invalid_argument("squareful_list: B < 1");
    std::vector<i64> out;
    for (i64 y = 1;; ++y) {
        i128 y3 = i128(y) * y * y;
        if (y3 > B) break;
        if (!is_squarefree(y)) continue;
        i64 c = static_cast<i64>(y3);
        for (i64 x = 1; x * x <= B / c; ++x) {
            i64 z = x * x * c;
            if (z <= B) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CountRecord count_N1_tilde(i64 B) {
    if (B < 1) throw std::invalid_argument("count_N1_tilde: B < 1");
    auto S = squareful_list(B);
    auto mark = squareful_marks(B, S);
    i64 raw = 0;
    for (i64 z0 : S) {
        for (i64 z1 : S) {
            i64 z2 = z0 + z1;
            if (z2 > B) break;
            if (mark[static_cast<size_t>(z2)] && std::gcd(z0, z1) == 1) ++raw;
        }
    }
    return {B, raw, 1};
}

CountRecord count_N1(i64 B) {
    if (B < 1) throw std::invalid_argument("count_N1: B < 1");
    auto S = squareful_list(B);
    auto mark = squareful_marks(B, S);
    std::vector<i64> signed_vals;
    signed_vals.reserve(2 * S.size());
    for (i64 s : S) signed_vals.push_back(s);
    for (i64 s : S) signed_vals.push_back(-s);
    i64 raw = 0;
    for (i64 z0 : signed_vals) {
        for (i64 z1 : signed_vals) {
            i64 z2 = z0 + z1;
            if (z2 == 0) continue;
            i64 a2 = z2 < 0 ? -z2 : z2;
            if (a2 > B || !mark[static_cast<size_t>(a2)]) continue;
            i64 a0 = z0 < 0 ? -z0 : z0;
            i64 a1 = z1 < 0 ? -z1 : z1;
            if (std::gcd(a0, a1) == 1) ++raw;
        }
    }
    return {B, raw, 2};
}

i64 height_H(i64 z0, i64 z1) {
    if (z0 == 0 || z1 == 0) throw std::invalid_argument("height_H: zero coordinate");
    if (std::gcd(z0 < 0 ? -z0 : z0, z1 < 0 ? -z1 : z1) != 1)
        throw std::invalid_argument("height_H: coordinates not coprime");
    i64 s = z0 + z1;
    return std::max({z0 < 0 ? -z0 : z0, z1 < 0 ? -z1 : z1, s < 0 ? -s : s});
}

CountRecord count_conic_plus(const FiberIndex& y, double T,
                             std::vector<std::array<i64, 3>>* points) {
    if (y.y0 < 1 || y.y1 < 1 || y.y2 < 1)
        throw std::invalid_argument("count_conic_plus: fiber must lie in N^3");
    if (!y.valid()) throw std::invalid_argument("count_conic_plus: invalid fiber");
    if (!(T >= 1.0) || T > 1.0e8) throw std::invalid_argument("count_conic_plus: bad T");
    const i64 T2 = static_cast<i64>(T * T + 1e-9);
    const i64 c0 = y.y0 * y.y0 * y.y0;
    const i64 c1 = y.y1 * y.y1 * y.y1;
    const i64 c2 = y.y2 * y.y2 * y.y2;
    const i64 x0max = isqrt64(T2 / c0);
    const i64 x1max = isqrt64(T2 / c1);
    const bool symmetric = (y.y0 == y.y1) && points == nullptr;

    auto scan_rows = [&](i64 lo, i64 hi, std::vector<std::array<i64, 3>>* out) {
        i64 cnt = 0;
        for (i64 x0 = lo; x0 < hi; ++x0) {
            const i64 A = c0 * x0 * x0;
            const i64 x1_hi = symmetric ? std::min(x0, x1max) : x1max;
            i64 first = (A + c1) / c2;
            i64 x2 = isqrt64(first);
            if (x2 < 1) x2 = 1;
            for (i64 x1 = 1; x1 <= x1_hi; ++x1) {
                const i64 n = A + c1 * x1 * x1;
                if (n > T2) break;
                while (c2 * x2 * x2 < n) ++x2;
                if (c2 * x2 * x2 == n) {
                    i64 g = std::gcd(std::gcd(x0 * y.y0, x1 * y.y1), x2 * y.y2);
                    if (g == 1) {
                        i64 mult = (symmetric && x1 != x0) ? 8 : 4;
                        cnt += mult;
                        if (out) {
                            out->push_back({x0, x1, x2});
                            out->push_back({x0, -x1, x2});
                            out->push_back({x0, x1, -x2});
                            out->push_back({x0, -x1, -x2});
                        }
                    }
                }
            }
        }
        return cnt;
    };

    i64 raw = 0;
    unsigned hw = std::thread::hardware_concurrency();
    if (points == nullptr && x0max >= 4096 && hw > 1) {
        unsigned nthreads = std::min(hw, 8u);
        std::vector<i64> partial(nthreads, 0);
        std::vector<std::thread> workers;
        i64 chunk = (x0max + nthreads) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            i64 lo = 1 + t * chunk;
            i64 hi = std::min(x0max + 1, lo + chunk);
            if (lo > x0max) break;
            workers.emplace_back(
                [&, lo, hi, t] { partial[t] = scan_rows(lo, hi, nullptr); });
        }
        for (auto& w : workers) w.join();
        for (i64 c : partial) raw += c;  // fixed association order
    } else {
        raw = scan_rows(1, x0max + 1, points);
    }
    return {static_cast<i64>(T), raw, 1};
}

FiberDecomposition campana_fiber_decomposition(i64 B) {
    if (B < 1) throw std::invalid_argument("campana_fiber_decomposition: B < 1");
    auto S = squareful_list(B);
    auto mark = squareful_marks(B, S);
    std::unordered_map<i64, i64> kernel;  // squareful value -> its squarefree y
    kernel.reserve(S.size() * 2);
    for (i64 z : S) kernel[z] = squareful_decompose(z).y;

    FiberDecomposition fd;
    std::vector<i64> signed_vals;
    for (i64 s : S) signed_vals.push_back(s);
    for (i64 s : S) signed_vals.push_back(-s);
    for (i64 z0 : signed_vals) {
        i64 a0 = z0 < 0 ? -z0 : z0;
        for (i64 z1 : signed_vals) {
            i64 z2 = z0 + z1;
            if (z2 == 0) continue;
            i64 a2 = z2 < 0 ? -z2 : z2;
            if (a2 > B || !mark[static_cast<size_t>(a2)]) continue;
            i64 a1 = z1 < 0 ? -z1 : z1;
            if (std::gcd(a0, a1) != 1) continue;
            std::array<i64, 3> prof{kernel[a0], kernel[a1], kernel[a2]};
            fd.raw_by_fiber[prof] += 1;
            fd.total_raw += 1;
        }
    }
    return fd;
}

FiberDecomposition tilde_fiber_decomposition(i64 B) {
    if (B < 1) throw std::invalid_argument("tilde_fiber_decomposition: B < 1");
    auto S = squareful_list(B);
    auto mark = squareful_marks(B, S);
    std::unordered_map<i64, i64> kernel;
    kernel.reserve(S.size() * 2);
    for (i64 z : S) kernel[z] = squareful_decompose(z).y;
    FiberDecomposition fd;
    for (i64 z0 : S) {
        for (i64 z1 : S) {
            i64 z2 = z0 + z1;
            if (z2 > B) break;
            if (!mark[static_cast<size_t>(z2)] || std::gcd(z0, z1) != 1) continue;
            fd.raw_by_fiber[{kernel[z0], kernel[z1], kernel[z2]}] += 1;
            fd.total_raw += 1;
        }
    }
    return fd;
}

CountRecord thin_fiber_count(const FiberIndex& y, i64 B) {
    if (y.y0 < 1 || y.y1 < 1 || y.y2 < 1)
        throw std::invalid_argument("thin_fiber_count: fiber must lie in N^3");
    if (!y.valid()) throw std::invalid_argument("thin_fiber_count: invalid fiber");
    auto fd = campana_fiber_decomposition(B);
    auto it = fd.raw_by_fiber.find({y.y0, y.y1, y.y2});
    return {B, it == fd.raw_by_fiber.end() ? 0 : it->second, 2};
}

CountRecord thin_set_count(i64 M, i64 B) {
    if (M < 1) throw std::invalid_argument("thin_set_count: M < 1");
    auto fd = campana_fiber_decomposition(B);
    i64 raw = 0;
    for (const auto& [prof, cnt] : fd.raw_by_fiber)
        if (prof[0] <= M && prof[1] <= M && prof[2] <= M) raw += cnt;
    return {B, raw, 2};
}

namespace {

// shared row scan: for each primitive (x,y) in the positive quadrant with
// ax^2+by^2 squareful, call back with (x, y, n)
template <typename F>
void scan_binary_quadrant(const BinaryFormParams& params, i64 B,
                          const std::vector<i64>& S, F&& on_hit) {
    const i64 a = params.a, b = params.b;
    for (i64 x = 1; x <= B; ++x) {
        const i64 ax2 = a * x * x;
        size_t ptr = static_cast<size_t>(
            std::lower_bound(S.begin(), S.end(), ax2 + b) - S.begin());
        for (i64 yy = 1; yy <= B && ptr < S.size(); ++yy) {
            const i64 n = ax2 + b * yy * yy;
            while (ptr < S.size() && S[ptr] < n) ++ptr;
            if (ptr < S.size() && S[ptr] == n && std::gcd(x, yy) == 1)
                on_hit(x, yy, n);
        }
    }
}

}  // namespace

CountRecord count_N_binary(const BinaryFormParams& params, i64 B) {
    params.require_valid();
    if (B < 1) throw std::invalid_argument("count_N_binary: B < 1");
    const i64 nmax = checked_mul(params.a + params.b, checked_mul(B, B));
    auto S = squareful_list(nmax);
    i64 quadrant = 0;
    scan_binary_quadrant(params, B, S, [&](i64, i64, i64) { ++quadrant; });
    i64 raw = 4 * quadrant;
    // axis pairs (0,+-1) and (+-1,0)
    if (is_squareful(params.b)) raw += 2;
    if (is_squareful(params.a)) raw += 2;
    return {B, raw, 2};
}

CountRecord count_Nv_binary(const BinaryFormParams& params, i64 v, i64 B) {
    params.require_valid();
    if (B < 1 || v < 1) throw std::invalid_argument("count_Nv_binary: bad arguments");
    if (!is_squarefree(checked_mul(checked_mul(params.a, params.b), v)))
        throw std::invalid_argument("count_Nv_binary: mu^2(abv) != 1");
    const i64 nmax = checked_mul(params.a + params.b, checked_mul(B, B));
    auto S = squareful_list(nmax);
    std::unordered_map<i64, i64> kernel;
    kernel.reserve(S.size() * 2);
    for (i64 z : S) kernel[z] = squareful_decompose(z).y;

    i64 quadrant = 0;
    scan_binary_quadrant(params, B, S,
                         [&](i64, i64, i64 n) { if (kernel[n] == v) ++quadrant; });
    i64 pairs = 4 * quadrant;
    if (kernel.count(params.b) && kernel[params.b] == v) pairs += 2;
    if (kernel.count(params.a) && kernel[params.a] == v) pairs += 2;
    // two sign choices of u per pair
    return {B, 2 * pairs, 2};
}

std::optional<std::array<i64, 3>> small_coprime_solution(const BinaryFormParams& params,
                                                         i64 v, i64 search_bound) {
    params.require_valid();
    if (v < 1 || search_bound < 1)
        throw std::invalid_argument("small_coprime_solution: bad arguments");
    const i64 a = params.a, b = params.b;
    const i128 v3 = i128(v) * v * v;
    std::optional<std::array<i64, 3>> best;
    i64 best_sup = search_bound + 1;

    auto consider = [&](i64 x1, i64 x2) {
        if (std::gcd(x1, x2) != 1) return;
        i128 n = i128(a) * x1 * x1 + i128(b) * x2 * x2;
        if (n % v3 != 0) return;
        i64 t = static_cast<i64>(n / v3);
        i64 x3 = isqrt64(t);
        if (x3 < 1 || x3 * x3 != t) return;
        i64 sup = std::max({x1, x2, x3});
        if (sup > search_bound) return;
        std::array<i64, 3> cand{x1, x2, x3};
        if (sup < best_sup || (sup == best_sup && best && cand < *best)) {
            best = cand;
            best_sup = sup;
        }
    };

    for (i64 m = 1; m <= search_bound && m <= best_sup; ++m) {
        for (i64 x2 = 1; x2 <= m; ++x2) consider(m, x2);
        for (i64 x1 = 1; x1 < m; ++x1) consider(x1, m);
    }
    return best;
}

SlopeReport slope(const std::vector<CountRecord>& records, const Rational& exponent) {
    if (records.empty()) throw std::invalid_argument("slope: no records");
    for (size_t i = 1; i < records.size(); ++i)
        if (records[i].B <= records[i - 1].B)
            throw std::invalid_argument("slope: records must have increasing B");
    SlopeReport rep;
    const double e = exponent.to_double();
    for (const auto& r : records)
        rep.ratios.push_back({r.B, r.value() / std::pow(static_cast<double>(r.B), e)});
    rep.final_ratio = rep.ratios.back().second;
    return rep;
}

// ---------------------------------------------------------------------

std::vector<CountRecord> cache_load(const std::string& dir, const std::string& key) {
    std::filesystem::path path = std::filesystem::path(dir) / (key + ".csv");
    std::vector<CountRecord> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    if (!std::getline(in, line)) return out;
    if (line != "B,raw_count,divisor")
        throw std::runtime_error("cache_load: bad header in " + path.string());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        CountRecord r;
        char c1, c2;
        if (!(ss >> r.B >> c1 >> r.raw >> c2 >> r.divisor) || c1 != ',' || c2 != ',')
            throw std::runtime_error("cache_load: bad row in " + path.string());
        out.push_back(r);
    }
    return out;
}

void cache_store(const std::string& dir, const std::string& key,
                 const std::vector<CountRecord>& records) {
    std::filesystem::create_directories(dir);
    auto existing = cache_load(dir, key);
    std::map<i64, CountRecord> by_B;
    for (const auto& r : existing) by_B[r.B] = r;
    for (const auto& r : records) by_B[r.B] = r;
    std::filesystem::path path = std::filesystem::path(dir) / (key + ".csv");
    std::ofstream out(path, std::ios::trunc);
    out << "B,raw_count,divisor\n";
    for (const auto& [B, r] : by_B)
        out << r.B << "," << r.raw << "," << r.divisor << "\n";
}

std::string cache_key_n1() { return "n1"; }
std::string cache_key_n1_tilde() { return "n1_tilde"; }

std::string cache_key_binary(const BinaryFormParams& params) {
    return "binary_a" + std::to_string(params.a) + "_b" + std::to_string(params.b);
}

std::string cache_key_binary_v(const BinaryFormParams& params, i64 v) {
    return cache_key_binary(params) + "_v" + std::to_string(v);
}

std::string cache_key_conic(const FiberIndex& y) {
    return "conic_y" + std::to_string(y.y0) + "_" + std::to_string(y.y1) + "_" +
           std::to_string(y.y2);
}

}  // namespace campana
