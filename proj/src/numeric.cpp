#include "hsjack/numeric.hpp"

#include <cmath>

namespace hsjack {

namespace {
unsigned g_bits = 53;
}

void set_working_precision(unsigned bits)
{
    if (bits < 53) bits = 53;
    g_bits = bits;
    const unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
    MpReal::default_precision(digits10);
}

unsigned working_precision() { return g_bits; }

}  // namespace hsjack
