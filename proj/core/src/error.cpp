#include "bizeta/error.hpp"

#include <limits>

namespace bizeta {

void requireCapacity(const Limits& limits, std::uint64_t amount, const std::string& what) {
    if (amount > limits.maxWork) {
        throw CapacityError(what + " needs " + std::to_string(amount) + " steps, above the bound " +
                            std::to_string(limits.maxWork));
    }
}

std::uint64_t saturatingPow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

}  // namespace bizeta
