#include "offsetsing/numeric.hpp"

#include <cctype>

namespace offsetsing {

std::size_t bit_length(const Int& n)
{
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Int parse_int(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InputError("malformed number '" + std::string(s) + "'");
    Int v(std::string(s), 10);
    return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InputError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text[0] == '-') throw InputError("denominator must be positive");
        Int den = parse_int(den_text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
        if (whole.empty()) whole = "0";
        if (frac.empty() || !all_digits(frac) || !all_digits(whole))
            throw InputError("malformed decimal '" + std::string(text) + "'");
        Int den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        Int num = parse_int(whole) * den + parse_int(frac);
        Rat q(neg ? Int(-num) : num, den);
        q.canonicalize();
        return q;
    }
    return Rat(parse_int(text));
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rat& q)
{
    // mpq_get_d truncates; good enough for reporting approximations.
    return mpq_get_d(q.get_mpq_t());
}

Rat round_down(const Rat& q, unsigned bits)
{
    Int scaled = q.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Int den;
    mpz_setbit(den.get_mpz_t(), bits);
    Rat r(fl, den);
    r.canonicalize();
    return r;
}

Rat round_up(const Rat& q, unsigned bits)
{
    Int scaled = q.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), bits);
    Int cl;
    mpz_cdiv_q(cl.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Int den;
    mpz_setbit(den.get_mpz_t(), bits);
    Rat r(cl, den);
    r.canonicalize();
    return r;
}

int sign(const Int& n) { return sgn(n); }
int sign(const Rat& q) { return sgn(q); }

}  // namespace offsetsing
