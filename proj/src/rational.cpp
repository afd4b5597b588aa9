#include "polylin/rational.hpp"

#include <cctype>

#include "polylin/error.hpp"

namespace polylin {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) bad(text);

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad(text);
        BigInt d{std::string(den)};
        if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        value = Rational(BigInt(std::string(num)), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        num *= scale;
        if (!frac.empty()) num += BigInt(std::string(frac));
        value = Rational(num, scale);
    } else {
        if (!all_digits(s)) bad(text);
        value = Rational(BigInt(std::string(s)));
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

std::optional<std::string> to_exact_decimal(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    BigInt den = v.get_den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return std::nullopt;

    int digits = std::max(twos, fives);
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = v.get_num() * scale / v.get_den();

    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
        s.insert(s.size() - digits, ".");
    }
    return negative ? "-" + s : s;
}

} // namespace polylin
