#include "hamnf/rational.hpp"

#include "hamnf/errors.hpp"

#include <cctype>

namespace hamnf {

namespace {

bool is_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_text(num) || !is_integer_text(den))
        fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0)
        fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

} // namespace hamnf
