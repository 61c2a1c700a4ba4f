#include "tropdiv/rat.hpp"

#include <cstdlib>

#include "tropdiv/errors.hpp"

namespace tropdiv {

std::string to_string(const Rat& r) {
    std::string s = std::to_string(r.num());
    if (r.den() != 1) {
        s += '/';
        s += std::to_string(r.den());
    }
    return s;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::BadInput, "malformed rational: " + s);
    } catch (const std::domain_error&) {
        throw Error(ErrorCode::BadInput, "malformed rational: " + s);
    } catch (const std::out_of_range&) {
        throw RatOverflow();
    }
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = (__int128)(a / std::gcd(a, b)) * b;
    if (l > INT64_MAX || l < INT64_MIN) throw RatOverflow();
    long long r = (long long)l;
    return r < 0 ? -r : r;
}

}  // namespace tropdiv
