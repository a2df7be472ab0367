#include <dicrit/error.hpp>
#include <dicrit/rational.hpp>

#include <cctype>

namespace dicrit
{
    Rational::Rational(long long num, long long den)
    {
        if (den == 0)
            throw InvalidArgument("zero denominator");
        _q = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        _q.canonicalize();
    }

    auto Rational::parse(std::string_view text) -> Rational
    {
        auto valid_integer = [](std::string_view s, bool allow_sign) {
            if (allow_sign && ! s.empty() && (s.front() == '-' || s.front() == '+'))
                s.remove_prefix(1);
            if (s.empty())
                return false;
            for (char c : s)
                if (! std::isdigit(static_cast<unsigned char>(c)))
                    return false;
            return true;
        };

        auto slash = text.find('/');
        auto num = text.substr(0, slash);
        auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        if (! valid_integer(num, true) || ! valid_integer(den, false))
            throw InvalidArgument("malformed rational '" + std::string(text) + "', expected num/den");

        std::string n(num);
        if (n.front() == '+')
            n.erase(0, 1);
        mpz_class d(std::string{den});
        if (d == 0)
            throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(mpq_class(mpz_class(n), d));
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (b._q == 0)
            throw InvalidArgument("division by zero");
        return Rational(mpq_class(a._q / b._q));
    }

    auto Rational::str() const -> std::string
    {
        return numerator() + "/" + denominator();
    }

    auto Rational::floor() const -> long long
    {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), _q.get_num_mpz_t(), _q.get_den_mpz_t());
        return f.get_si();
    }
}
