#include "offsetsing/zpoly.hpp"

#include <algorithm>
#include <cstdint>

namespace offsetsing {

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::constant(const Int& c) { return ZPoly(std::vector<Int>{c}); }

ZPoly ZPoly::monomial(const Int& c, int deg)
{
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return ZPoly(std::move(v));
}

void ZPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int ZPoly::coeff(int i) const
{
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

const Int& ZPoly::lead() const
{
    if (c_.empty()) throw InvariantError("leading coefficient of zero polynomial");
    return c_.back();
}

ZPoly ZPoly::operator-() const
{
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator*=(const Int& k)
{
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ZPoly(std::move(r));
}

ZPoly ZPoly::pow(unsigned e) const
{
    ZPoly result = constant(1);
    ZPoly base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Int ZPoly::content() const
{
    Int g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::div_exact_scalar(const Int& k) const
{
    ZPoly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

ZPoly ZPoly::primitive() const
{
    if (is_zero()) return {};
    Int g = content();
    if (lead() < 0) g = -g;
    if (g == 1) return *this;
    return div_exact_scalar(g);
}

Int ZPoly::eval(const Int& x) const
{
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

int ZPoly::sign_at(const Int& num, const Int& den) const
{
    if (is_zero()) return 0;
    Int r = c_.back();
    Int dpow = 1;
    for (int i = degree() - 1; i >= 0; --i) {
        dpow *= den;
        r *= num;
        mpz_addmul(r.get_mpz_t(), c_[static_cast<std::size_t>(i)].get_mpz_t(), dpow.get_mpz_t());
    }
    return sgn(r);
}

ZPoly ZPoly::taylor_shift_one() const
{
    std::vector<Int> a = c_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += a[j];
    return ZPoly(std::move(a));
}

ZPoly ZPoly::reversed() const
{
    std::vector<Int> a(c_.rbegin(), c_.rend());
    return ZPoly(std::move(a));
}

ZPoly ZPoly::negate_variable() const
{
    ZPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

ZPoly ZPoly::scale_down_pow2(unsigned k) const
{
    ZPoly r = *this;
    const int n = degree();
    for (int i = 0; i < n; ++i) {
        auto& x = r.c_[static_cast<std::size_t>(i)];
        mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * static_cast<mp_bitcnt_t>(n - i));
    }
    return r;
}

ZPoly ZPoly::scale_up_pow2(unsigned k) const
{
    ZPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
        auto& x = r.c_[i];
        mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(k) * i);
    }
    return r;
}

ZPoly ZPoly::strip_zero_roots(int* removed) const
{
    std::size_t m = 0;
    while (m < c_.size() && c_[m] == 0) ++m;
    if (removed) *removed = static_cast<int>(m);
    if (m == 0) return *this;
    return ZPoly(std::vector<Int>(c_.begin() + static_cast<std::ptrdiff_t>(m), c_.end()));
}

std::size_t ZPoly::max_bits() const
{
    std::size_t b = 0;
    for (const auto& x : c_) b = std::max(b, bit_length(x));
    return b;
}

std::size_t ZPoly::sign_variations() const
{
    std::size_t v = 0;
    int last = 0;
    for (const auto& x : c_) {
        int s = sgn(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b)
{
    if (b.is_zero()) throw InvariantError("division by zero polynomial");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - db) + 1);
    Int rem;
    for (int k = a.degree() - db; k >= 0; --k) {
        auto& top = r[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        mpz_tdiv_qr(q[static_cast<std::size_t>(k)].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(),
                    b.lead().get_mpz_t());
        if (rem != 0) return std::nullopt;
        const auto& qk = q[static_cast<std::size_t>(k)];
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (int j = 0; j < db; ++j)
        if (r[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    return ZPoly(std::move(q));
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b)
{
    auto q = try_divide(a, b);
    if (!q) throw InvariantError("polynomial division expected to be exact");
    return *q;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b)
{
    if (b.is_zero()) throw InvariantError("pseudo-remainder by zero polynomial");
    std::vector<Int> r = a.coeffs();
    const int db = b.degree();
    const auto& bc = b.coeffs();
    const Int& lb = b.lead();
    int dr = a.degree();
    int steps = std::max(0, a.degree() - db + 1);
    while (dr >= db && dr >= 0) {
        Int lr = r[static_cast<std::size_t>(dr)];
        for (int i = 0; i < dr; ++i) r[static_cast<std::size_t>(i)] *= lb;
        for (int j = 0; j < db; ++j)
            mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), lr.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        r[static_cast<std::size_t>(dr)] = 0;
        --steps;
        --dr;
        while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    }
    r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
    ZPoly res(std::move(r));
    if (steps > 0) {
        Int f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        res *= f;
    }
    return res;
}

// ---------------------------------------------------------------------------
// multi-modular gcd

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p)
{
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % sp == 0) return n == sp;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Deterministic descending sequence of primes below 2^62.
class PrimeStream {
public:
    u64 next()
    {
        do {
            cur_ -= 2;
        } while (!is_prime_u64(cur_));
        return cur_;
    }

private:
    u64 cur_ = (1ull << 62) + 1;
};

void mod_trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& a, u64 p)
{
    ModPoly r(a.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
    mod_trim(r);
    return r;
}

// In-place a <- a mod b (b monic not required).
void mod_rem(ModPoly& a, const ModPoly& b, u64 p)
{
    const std::size_t db = b.size() - 1;
    const u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        u64 f = mulmod(a.back(), inv, p);
        const std::size_t shift = a.size() - b.size();
        if (f != 0)
            for (std::size_t j = 0; j <= db; ++j) {
                u64 sub = mulmod(f, b[j], p);
                u64& x = a[shift + j];
                x = x >= sub ? x - sub : x + p - sub;
            }
        a.pop_back();
        mod_trim(a);
    }
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p)
{
    while (!b.empty()) {
        mod_rem(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

}  // namespace

ZPoly gcd(const ZPoly& a0, const ZPoly& b0)
{
    if (a0.is_zero()) return b0.primitive();
    if (b0.is_zero()) return a0.primitive();
    ZPoly a = a0.primitive();
    ZPoly b = b0.primitive();
    if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(1);
    if (a.degree() < b.degree()) std::swap(a, b);

    Int lcg;
    mpz_gcd(lcg.get_mpz_t(), a.lead().get_mpz_t(), b.lead().get_mpz_t());

    PrimeStream primes;
    int best_deg = b.degree() + 1;
    std::vector<Int> acc;  // CRT accumulator, coefficients in [0, M)
    Int modulus = 1;
    ZPoly last_candidate;
    bool have_candidate = false;

    for (int iter = 0;; ++iter) {
        if (iter > 100000) throw InvariantError("modular gcd failed to converge");
        u64 p = primes.next();
        if (mpz_fdiv_ui(a.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lead().get_mpz_t(), p) == 0) continue;
        ModPoly g = mod_gcd(reduce(a, p), reduce(b, p), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return ZPoly::constant(1);
        if (dg > best_deg) continue;  // unlucky prime
        u64 lcg_p = mpz_fdiv_ui(lcg.get_mpz_t(), p);
        for (auto& x : g) x = mulmod(x, lcg_p, p);
        if (dg < best_deg) {
            best_deg = dg;
            acc.assign(g.size(), Int(0));
            for (std::size_t i = 0; i < g.size(); ++i) acc[i] = g[i];
            modulus = p;
            have_candidate = false;
            continue;
        }
        // CRT: x = acc + M * ((g - acc) * M^{-1} mod p)
        u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < g.size(); ++i) {
            u64 ai = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
            u64 diff = g[i] >= ai ? g[i] - ai : g[i] + p - ai;
            u64 k = mulmod(diff, minv, p);
            mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), k);
        }
        mpz_mul_ui(modulus.get_mpz_t(), modulus.get_mpz_t(), p);
        Int half = modulus / 2;
        std::vector<Int> sym(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) sym[i] = acc[i] > half ? Int(acc[i] - modulus) : acc[i];
        ZPoly candidate = ZPoly(std::move(sym)).primitive();
        if (have_candidate && candidate == last_candidate) {
            if (try_divide(a, candidate) && try_divide(b, candidate)) return candidate;
        }
        last_candidate = std::move(candidate);
        have_candidate = true;
    }
}

}  // namespace offsetsing
