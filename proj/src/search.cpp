#include "supell/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace supell {

namespace {

// monic polynomial of the given degree from an index in [0, q^deg)
Poly monic_from_index(const FieldPtr& f, int deg, std::uint64_t idx) {
    std::vector<felem> c(deg + 1, 0);
    const std::uint64_t q = f->q();
    for (int i = 0; i < deg; ++i) {
        c[i] = idx % q;
        idx /= q;
    }
    c[deg] = 1;
    return Poly(f, std::move(c));
}

std::uint64_t count_monic_upto(std::uint64_t q, std::int64_t max_deg) {
    std::uint64_t n = 0, pw = 1;
    for (std::int64_t i = 0; i <= max_deg; ++i) {
        n += pw;
        if (pw > (1ull << 62) / q) throw error("candidate count overflow");
        pw *= q;
    }
    return n;
}

std::vector<Poly> all_monic_upto(const FieldPtr& f, std::int64_t max_deg) {
    std::vector<Poly> out;
    for (std::int64_t dg = 0; dg <= max_deg; ++dg) {
        std::uint64_t cnt = 1;
        for (std::int64_t i = 0; i < dg; ++i) cnt *= f->q();
        for (std::uint64_t idx = 0; idx < cnt; ++idx)
            out.push_back(monic_from_index(f, static_cast<int>(dg), idx));
    }
    return out;
}

void require_xs1(const SearchConfig& config) {
    if (!config.params.s || !config.params.generic_a)
        throw error("pruned search requires the h = x^s + 1 family with a = t^d");
}

struct PairCounters {
    std::atomic<std::uint64_t> examined{0};
    std::atomic<std::uint64_t> pruned{0};
};

bool found_less(const FoundPoint& a, const FoundPoint& b) {
    if (a.x != b.x) return ratfunc_canon_less(a.x, b.x);
    return ratfunc_canon_less(a.y, b.y);
}

bool found_eq(const FoundPoint& a, const FoundPoint& b) {
    return a.x == b.x && a.y == b.y;
}

}  // namespace

SearchConfig default_search_config(CurveParams params) {
    SearchConfig cfg;
    std::uint64_t g = genus_x(params);
    cfg.delta_cap = height_bound(params.d, g).pth_power_bound;
    cfg.params = std::move(params);
    return cfg;
}

PthClass classify_pth_power(const RatFunc& x) {
    if (x.is_zero()) throw x_is_zero();
    return x.is_pth_power() ? PthClass::pth_power : PthClass::not_pth_power;
}

std::vector<RatFunc> y_solutions(const CurveParams& params, const RatFunc& x) {
    if (x.is_zero()) throw x_is_zero();
    const FieldPtr& f = params.field;
    RatFunc F;
    if (params.s && params.generic_a) {
        // h(x) h(t^d/x) = (u^s + v^s)(u^s + t^(ds) v^s) / (u^s v^s)
        const std::uint64_t s = *params.s;
        Poly us = x.num().pow(s);
        Poly vs = x.den().pow(s);
        Poly shifted = vs * Poly::monomial(f, params.d * s, 1);
        F = RatFunc::reduce((us + vs) * (us + shifted), us * vs);
    } else {
        F = poly_at(params.h, x) * poly_at(params.h, params.a() / x);
    }
    if (F.is_zero()) return {RatFunc::zero(f)};
    if (!F.is_rth_power(params.r)) return {};
    return F.all_rth_roots(params.r);
}

std::uint64_t candidate_estimate(const SearchConfig& config) {
    const std::uint64_t q = config.params.field->q();
    const std::uint64_t cap = config.delta_cap;
    if (config.pruned) {
        const std::uint64_t r = config.params.r;
        std::uint64_t nv = count_monic_upto(q, static_cast<std::int64_t>(cap / r));
        std::uint64_t nu = 0;
        for (std::uint64_t j = 0; j < r && j <= cap; ++j)
            nu += count_monic_upto(q, static_cast<std::int64_t>((cap - j) / r));
        nu *= (q - 1);
        if (nu != 0 && nv > ~0ull / nu) return ~0ull;
        return nv * nu;
    }
    std::uint64_t nv = count_monic_upto(q, static_cast<std::int64_t>(cap));
    std::uint64_t nu = 1;
    for (std::uint64_t i = 0; i <= cap; ++i) {
        if (nu > (1ull << 62) / q) return ~0ull;
        nu *= q;
    }
    nu -= 1;  // nonzero u only
    if (nu != 0 && nv > ~0ull / nu) return ~0ull;
    return nv * nu;
}

std::vector<RatFunc> candidate_x_list(const SearchConfig& config) {
    require_xs1(config);
    std::vector<RatFunc> out;
    const FieldPtr& f = config.params.field;
    const std::uint64_t q = f->q();
    const std::uint64_t r = config.params.r;
    const std::uint64_t cap = config.delta_cap;
    auto v0s = all_monic_upto(f, static_cast<std::int64_t>(cap / r));
    for (const auto& v0 : v0s) {
        Poly v = v0.pow(r);
        for (std::uint64_t j = 0; j < r && j <= cap; ++j) {
            auto u0s = all_monic_upto(f, static_cast<std::int64_t>((cap - j) / r));
            for (const auto& u0 : u0s) {
                Poly u_monic = u0.pow(r) * Poly::monomial(f, j, 1);
                if (poly_gcd(u_monic, v).deg() != 0) continue;
                for (felem c = 1; c < q; ++c)
                    out.push_back(RatFunc::reduce(u_monic.scaled(c), v));
            }
        }
    }
    return out;
}

namespace {

// Shared enumeration core: calls sink(x) for every candidate x assigned to
// this worker (outer loop strided by job count).
void run_pruned(const SearchConfig& config, unsigned worker, unsigned jobs,
                PairCounters& counters,
                const std::function<void(const RatFunc&)>& sink) {
    const FieldPtr& f = config.params.field;
    const std::uint64_t q = f->q();
    const std::uint64_t r = config.params.r;
    const std::uint64_t cap = config.delta_cap;
    auto v0s = all_monic_upto(f, static_cast<std::int64_t>(cap / r));
    // monic u candidates t^j * u0^r, shared across all v
    std::vector<Poly> u_monics;
    for (std::uint64_t j = 0; j < r && j <= cap; ++j)
        for (const auto& u0 :
             all_monic_upto(f, static_cast<std::int64_t>((cap - j) / r)))
            u_monics.push_back(u0.pow(r) * Poly::monomial(f, j, 1));
    std::uint64_t examined = 0, pruned = 0;
    for (std::size_t vi = worker; vi < v0s.size(); vi += jobs) {
        Poly v = v0s[vi].pow(r);
        {
            for (const auto& u_monic : u_monics) {
                if (poly_gcd(u_monic, v).deg() != 0) {
                    pruned += q - 1;
                    continue;
                }
                for (felem c = 1; c < q; ++c) {
                    ++examined;
                    sink(RatFunc::reduce(u_monic.scaled(c), v));
                }
            }
        }
    }
    counters.examined += examined;
    counters.pruned += pruned;
}

void run_oracle(const SearchConfig& config, unsigned worker, unsigned jobs,
                PairCounters& counters,
                const std::function<void(const RatFunc&)>& sink) {
    const FieldPtr& f = config.params.field;
    const std::uint64_t q = f->q();
    const std::uint64_t cap = config.delta_cap;
    auto vs = all_monic_upto(f, static_cast<std::int64_t>(cap));
    std::uint64_t ucount = 1;
    for (std::uint64_t i = 0; i <= cap; ++i) ucount *= q;
    std::uint64_t examined = 0, pruned = 0;
    for (std::size_t vi = worker; vi < vs.size(); vi += jobs) {
        const Poly& v = vs[vi];
        for (std::uint64_t code = 1; code < ucount; ++code) {
            std::vector<felem> uc;
            std::uint64_t x = code;
            while (x) {
                uc.push_back(x % q);
                x /= q;
            }
            Poly u(f, std::move(uc));
            if (poly_gcd(u, v).deg() != 0) {
                ++pruned;
                continue;
            }
            ++examined;
            sink(RatFunc::reduce(u, v));
        }
    }
    counters.examined += examined;
    counters.pruned += pruned;
}

}  // namespace

SearchReport enumerate_points(const SearchConfig& config) {
    if (config.pruned) require_xs1(config);
    std::uint64_t estimate = candidate_estimate(config);
    if (estimate > config.budget) throw cap_too_large(estimate, config.budget);

    auto t0 = std::chrono::steady_clock::now();
    unsigned jobs = std::max(1u, config.jobs);
    PairCounters counters;
    std::vector<std::vector<FoundPoint>> partial(jobs);

    auto work = [&](unsigned w) {
        auto sink = [&](const RatFunc& x) {
            for (const RatFunc& y : y_solutions(config.params, x)) {
                FoundPoint pt;
                pt.x = x;
                pt.y = y;
                pt.cls = classify_pth_power(x);
                pt.height = x.height();
                partial[w].push_back(std::move(pt));
            }
        };
        if (config.pruned)
            run_pruned(config, w, jobs, counters, sink);
        else
            run_oracle(config, w, jobs, counters, sink);
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    SearchReport report;
    for (auto& part : partial)
        for (auto& pt : part) report.points.push_back(std::move(pt));
    std::sort(report.points.begin(), report.points.end(), found_less);
    report.points.erase(
        std::unique(report.points.begin(), report.points.end(), found_eq),
        report.points.end());
    report.candidates_examined = counters.examined;
    report.pruned_out = counters.pruned;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

GcdStructure gcd_structure_check(const Poly& u, const Poly& v, std::uint64_t d,
                                 std::uint64_t s) {
    if (u.is_zero() || v.is_zero() || poly_gcd(u, v).deg() != 0)
        throw not_coprime();
    const FieldPtr& f = u.field();
    Poly us = u.pow(s);
    Poly vs = v.pow(s);
    Poly a_s = Poly::monomial(f, d * s, 1);
    Poly s1 = us + vs;
    Poly s2 = us + a_s * vs;
    auto divides = [](const Poly& g, const Poly& target) {
        return poly_mod(target, g).is_zero();
    };
    GcdStructure out;
    out.divides_a_s = divides(poly_gcd(us, s2), a_s);
    out.divides_a_s_minus_1 =
        divides(poly_gcd(s1, s2), a_s - Poly::one(f));
    out.pairwise_coprime =
        poly_gcd(us, vs).deg() == 0 && poly_gcd(us, s1).deg() == 0 &&
        poly_gcd(vs, s1).deg() == 0 && poly_gcd(vs, s2).deg() == 0;
    out.all_hold =
        out.divides_a_s && out.divides_a_s_minus_1 && out.pairwise_coprime;
    return out;
}

}  // namespace supell
