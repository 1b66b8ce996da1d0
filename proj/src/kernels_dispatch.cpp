#include "qgame/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qgame::kernels {

#ifdef QGAME_HAVE_AVX2
namespace detail {
const Backend& avx2_impl();
}
#endif

const Backend* avx2() {
#ifdef QGAME_HAVE_AVX2
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (supported)
        return &detail::avx2_impl();
#endif
    return nullptr;
}

namespace {

const Backend& choose() {
    if (const char* env = std::getenv("QGAME_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0)
            return scalar();
        if (std::strcmp(env, "avx2") == 0 && avx2() != nullptr)
            return *avx2();
        // unrecognized or unavailable: fall through to auto-detection
    }
    if (const Backend* b = avx2())
        return *b;
    return scalar();
}

} // namespace

const Backend& active() {
    static const Backend& b = choose();
    return b;
}

}
