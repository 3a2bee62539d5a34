#include "burau/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace burau {

std::int64_t to_int64(const BigInt& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
    }
    return x.convert_to<std::int64_t>();
}

BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    for (std::size_t k = i; k < text.size(); ++k) {
        if (text[k] < '0' || text[k] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
    }
    BigInt v(text[0] == '+' ? text.substr(1) : text);
    return v;
}

}  // namespace burau
