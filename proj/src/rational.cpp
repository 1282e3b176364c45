#include "epsnet/rational.hpp"

#include <cctype>
#include <sstream>

namespace epsnet {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string s, const std::string& full) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    if (!all_digits(s)) throw InvalidInput("not a rational number: '" + full + "'");
    mpz_class z(s, 10);
    return neg ? mpz_class(-z) : z;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Scalar parse_scalar(const std::string& raw) {
    std::string text = trim(raw);
    if (text.empty()) throw InvalidInput("empty number");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class num = parse_integer(text.substr(0, slash), text);
        mpz_class den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }

    std::string s = text;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mpz_class e = parse_integer(s.substr(epos + 1), text);
        if (!e.fits_slong_p() || abs(e) > 100000) throw InvalidInput("exponent out of range in '" + text + "'");
        exp10 = e.get_si();
        s = s.substr(0, epos);
    }
    std::string intpart = s, frac;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        intpart = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if (intpart.empty() && frac.empty()) throw InvalidInput("not a rational number: '" + text + "'");
    if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac)))
        throw InvalidInput("not a rational number: '" + text + "'");
    mpz_class digits(intpart + frac == "" ? "0" : intpart + frac, 10);
    exp10 -= static_cast<long>(frac.size());
    mpz_class pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    Scalar q = exp10 < 0 ? Scalar(digits, pow) : Scalar(digits * pow);
    q.canonicalize();
    return neg ? Scalar(-q) : q;
}

std::string format_scalar(const Scalar& s) { return s.get_str(); }

long long floor_times(const Scalar& eps, long long n) {
    Scalar v = eps * Scalar(static_cast<long>(n));
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si();
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
    if (out.empty()) throw InvalidInput("empty list of numbers");
    return out;
}

}  // namespace epsnet
