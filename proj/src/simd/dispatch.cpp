#include "graphevt/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace graphevt::simd {
namespace {

const KernelTable& select() {
    if (const char* env = std::getenv("GRAPHEVT_SIMD"); env && std::string_view(env) == "scalar")
        return scalar_kernels();
    if (const KernelTable* t = avx2_kernels())
        return *t;
    return scalar_kernels();
}

} // namespace

const KernelTable& kernels() {
    static const KernelTable& active = select();
    return active;
}

} // namespace graphevt::simd
