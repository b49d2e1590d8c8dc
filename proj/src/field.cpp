#include "supell/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace supell {

namespace {

constexpr std::uint64_t kMaxPrime = 1ull << 20;
constexpr std::uint32_t kMaxDegree = 8;
constexpr std::uint64_t kMaxExtOrder = 1ull << 32;
constexpr std::uint64_t kTableOrderLimit = 256;

void decode(felem a, std::uint64_t p, std::uint32_t k, std::uint64_t* out) {
    for (std::uint32_t i = 0; i < k; ++i) {
        out[i] = a % p;
        a /= p;
    }
}

felem encode(const std::uint64_t* digits, std::uint64_t p, std::uint32_t k) {
    felem a = 0;
    for (std::uint32_t i = k; i-- > 0;) a = a * p + digits[i];
    return a;
}

// --- minimal poly arithmetic over F_p on raw digit vectors, used only for
// --- irreducibility testing during modulus selection.

using DVec = std::vector<std::uint64_t>;

void dtrim(DVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

DVec dmulmod(const DVec& a, const DVec& b, const DVec& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    DVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // mod is monic of degree m
    std::size_t m = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > m;) {
        std::uint64_t coef = c[i];
        if (coef == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < m; ++j)
            c[i - m + j] = (c[i - m + j] + coef * (p - mod[j]) % p) % p;
    }
    c.resize(std::min(c.size(), m));
    dtrim(c);
    return c;
}

DVec dpowmod(DVec base, std::uint64_t e, const DVec& mod, std::uint64_t p) {
    DVec r = {1};
    while (e) {
        if (e & 1) r = dmulmod(r, base, mod, p);
        base = dmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

DVec dsub(DVec a, const DVec& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    dtrim(a);
    return a;
}

DVec dgcd(DVec a, DVec b, std::uint64_t p) {
    auto dmod = [&](DVec x, const DVec& y) {
        // y nonzero
        std::uint64_t inv_lead = 1;
        {  // Fermat inverse of y's leading coefficient
            std::uint64_t base = y.back(), e = p - 2, r = 1;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            inv_lead = r;
        }
        while (x.size() >= y.size()) {
            std::uint64_t c = x.back() * inv_lead % p;
            std::size_t off = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i)
                x[off + i] = (x[off + i] + p - c * y[i] % p) % p;
            dtrim(x);
            if (x.empty()) break;
        }
        return x;
    };
    while (!b.empty()) {
        DVec r = dmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool is_irreducible_fp(const DVec& f, std::uint64_t p) {
    std::size_t k = f.size() - 1;
    DVec x = {0, 1};
    // x^(p^k) == x mod f
    DVec xp = x;
    for (std::size_t i = 0; i < k; ++i) xp = dpowmod(xp, p, f, p);
    if (dsub(xp, x, p) != DVec{}) return false;
    // gcd(x^(p^(k/l)) - x, f) == const for every prime l | k
    for (std::size_t l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool lprime = true;
        for (std::size_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        DVec xq = x;
        for (std::size_t i = 0; i < k / l; ++i) xq = dpowmod(xq, p, f, p);
        DVec g = dgcd(f, dsub(xq, x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow_u64(std::uint64_t q, std::uint32_t n) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (r > (1ull << 62) / q) throw error("q^n overflows the supported range");
        r *= q;
    }
    return r;
}

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, std::uint32_t k) {
    if (!is_prime_u64(p)) throw error("p is not prime");
    if (k == 0) throw error("k must be positive");
    if (k == 1) return {0, 1};  // the variable itself: F_p directly
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
        DVec f(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible_fp(f, p)) return f;
    }
    throw error("no irreducible found");  // unreachable
}

Field::Field(std::uint64_t p, std::uint32_t k)
    : p_(p), k_(k), modulus_(find_irreducible(p, k)) {
    init();
}

Field::Field(std::uint64_t p, std::uint32_t k, std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p_)) throw error("p is not prime");
    if (modulus_.size() != k_ + 1 || modulus_.back() != 1)
        throw error("modulus must be monic of degree k");
    for (auto c : modulus_)
        if (c >= p_) throw error("modulus coefficients must be reduced mod p");
    if (k_ > 1) {
        DVec f(modulus_.begin(), modulus_.end());
        if (!is_irreducible_fp(f, p_)) throw error("modulus is reducible");
    }
    init();
}

void Field::init() {
    if (p_ > kMaxPrime) throw error("p exceeds supported bound 2^20");
    if (k_ == 0 || k_ > kMaxDegree) throw error("k out of supported range 1..8");
    q_ = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (k_ > 1 && q_ > kMaxExtOrder / p_)
            throw error("p^k exceeds supported extension order 2^32");
        q_ *= p_;
    }
    if (k_ > 1 && q_ <= kTableOrderLimit) {
        mul_table_.resize(q_ * q_);
        add_table_.resize(q_ * q_);
        for (felem a = 0; a < q_; ++a)
            for (felem b = 0; b < q_; ++b) {
                mul_table_[a * q_ + b] = mul_slow(a, b);
                std::uint64_t da[kMaxDegree], db[kMaxDegree];
                decode(a, p_, k_, da);
                decode(b, p_, k_, db);
                for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
                add_table_[a * q_ + b] = encode(da, p_, k_);
            }
    }
}

felem Field::add(felem a, felem b) const {
    if (k_ == 1) {
        felem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    std::uint64_t da[kMaxDegree], db[kMaxDegree];
    decode(a, p_, k_, da);
    decode(b, p_, k_, db);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return encode(da, p_, k_);
}

felem Field::neg(felem a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    std::uint64_t da[kMaxDegree];
    decode(a, p_, k_, da);
    for (std::uint32_t i = 0; i < k_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
    return encode(da, p_, k_);
}

felem Field::sub(felem a, felem b) const { return add(a, neg(b)); }

felem Field::mul_slow(felem a, felem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t da[kMaxDegree], db[kMaxDegree];
    std::uint64_t dc[2 * kMaxDegree - 1] = {0};
    decode(a, p_, k_, da);
    decode(b, p_, k_, db);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j)
            dc[i + j] = (dc[i + j] + da[i] * db[j]) % p_;
    for (std::uint32_t i = 2 * k_ - 2; i >= k_ && i < 2 * kMaxDegree; --i) {
        std::uint64_t c = dc[i];
        if (c == 0) continue;
        dc[i] = 0;
        for (std::uint32_t j = 0; j < k_; ++j) {
            std::uint64_t m = modulus_[j];
            if (m) dc[i - k_ + j] = (dc[i - k_ + j] + c * (p_ - m)) % p_;
        }
    }
    return encode(dc, p_, k_);
}

felem Field::mul(felem a, felem b) const {
    if (k_ == 1) return a * b % p_;
    if (!mul_table_.empty()) return mul_table_[a * q_ + b];
    return mul_slow(a, b);
}

felem Field::pow(felem a, std::uint64_t e) const {
    felem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

felem Field::inv(felem a) const {
    if (a == 0) throw division_by_zero();
    return pow(a, q_ - 2);
}

felem Field::div(felem a, felem b) const { return mul(a, inv(b)); }

bool Field::unit_is_rth_power(felem c, std::uint64_t r) const {
    if (c == 0) throw zero_input("unit r-th power test");
    std::uint64_t m = gcd_u64(r, q_ - 1);
    return pow(c, (q_ - 1) / m) == 1;
}

felem Field::unit_rth_root(felem c, std::uint64_t r) const {
    if (c == 0) throw zero_input("unit r-th root");
    for (felem b = 1; b < q_; ++b)
        if (pow(b, r) == c) return b;
    throw not_an_rth_power("unit " + to_string(c));
}

std::vector<felem> Field::roots_of_unity(std::uint64_t m) const {
    std::vector<felem> out;
    for (felem b = 1; b < q_; ++b)
        if (pow(b, m) == 1) out.push_back(b);
    return out;
}

std::string Field::to_string(felem a) const {
    if (k_ == 1) return std::to_string(a);
    std::uint64_t d[kMaxDegree];
    decode(a, p_, k_, d);
    std::string s = "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

felem Field::parse(const std::string& s) const {
    if (k_ == 1) {
        std::uint64_t v = std::stoull(s);
        if (v >= p_) throw error("field element out of range: " + s);
        return v;
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw error("bad field element: " + s);
    std::uint64_t d[kMaxDegree] = {0};
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    std::uint32_t i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= k_) throw error("too many coefficients in " + s);
        std::uint64_t v = std::stoull(tok);
        if (v >= p_) throw error("field element digit out of range: " + s);
        d[i++] = v;
    }
    if (i != k_) throw error("expected " + std::to_string(k_) + " digits in " + s);
    return encode(d, p_, k_);
}

FieldPtr make_field(std::uint64_t p, std::uint32_t k) {
    return std::make_shared<Field>(p, k);
}

FieldPtr make_field(std::uint64_t p, std::uint32_t k,
                    std::vector<std::uint64_t> modulus) {
    return std::make_shared<Field>(p, k, std::move(modulus));
}

}  // namespace supell
