#include "advicelab/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace advicelab {

std::uint64_t ceil_pow(std::uint64_t base, const Rational& e) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    if (base == 0) throw std::invalid_argument("base must be >= 1");
    if (e.num == 0) return 1;
    cpp_int target = pow(cpp_int(base), static_cast<unsigned>(e.num));
    std::uint64_t lo = 1, hi = 1;
    while (pow(cpp_int(hi), static_cast<unsigned>(e.den)) < target) {
        if (hi > (std::uint64_t(1) << 62)) throw std::overflow_error("ceil_pow result out of range");
        hi *= 2;
    }
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (pow(cpp_int(mid), static_cast<unsigned>(e.den)) >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

}  // namespace advicelab
