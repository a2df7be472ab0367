#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace dicrit
{
    // Exact arbitrary-precision rational, always reduced with positive denominator.
    class Rational
    {
    public:
        Rational() = default;
        Rational(long long value) : _q(std::to_string(value)) {} // NOLINT: implicit from integers is intended
        Rational(long long num, long long den);

        // Accepts "a", "a/b" and "-a/b". Throws InvalidArgument otherwise.
        [[nodiscard]] static auto parse(std::string_view text) -> Rational;

        [[nodiscard]] auto numerator() const -> std::string { return _q.get_num().get_str(); }
        [[nodiscard]] auto denominator() const -> std::string { return _q.get_den().get_str(); }
        [[nodiscard]] auto is_integer() const -> bool { return _q.get_den() == 1; }
        [[nodiscard]] auto sign() const -> int { return sgn(_q); }
        // Always "num/den", e.g. "4/1", "-3/2".
        [[nodiscard]] auto str() const -> std::string;
        [[nodiscard]] auto floor() const -> long long;
        [[nodiscard]] auto to_double() const -> double { return _q.get_d(); }

        friend auto operator+(const Rational & a, const Rational & b) -> Rational { return Rational(mpq_class(a._q + b._q)); }
        friend auto operator-(const Rational & a, const Rational & b) -> Rational { return Rational(mpq_class(a._q - b._q)); }
        friend auto operator*(const Rational & a, const Rational & b) -> Rational { return Rational(mpq_class(a._q * b._q)); }
        friend auto operator/(const Rational & a, const Rational & b) -> Rational;
        friend auto operator-(const Rational & a) -> Rational { return Rational(mpq_class(-a._q)); }

        auto operator+=(const Rational & b) -> Rational & { _q += b._q; return *this; }
        auto operator-=(const Rational & b) -> Rational & { _q -= b._q; return *this; }

        friend auto operator==(const Rational & a, const Rational & b) -> bool { return a._q == b._q; }
        friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
        {
            auto c = cmp(a._q, b._q);
            return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
        }

    private:
        explicit Rational(mpq_class q) : _q(std::move(q)) { _q.canonicalize(); }
        mpq_class _q;
    };

    inline auto operator<<(std::ostream & os, const Rational & r) -> std::ostream & { return os << r.str(); }
}
