#include "cagegen/rational.hpp"

#include "cagegen/errors.hpp"

namespace cagegen {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const boost::bad_rational&) {
        throw Error("bad rational '" + s + "'");
    } catch (const std::logic_error&) {
        throw Error("bad rational '" + s + "'");
    }
}

} // namespace cagegen
