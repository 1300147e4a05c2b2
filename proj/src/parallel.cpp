#include "nsdecay/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

namespace nsdecay {

namespace {

thread_local kernels::ExecMode g_mode = kernels::ExecMode::parallel;

int env_thread_cap() {
    const char* env = std::getenv("NSDECAY_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        const int v = std::stoi(env);
        return v > 0 ? v : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

}  // namespace

int configured_threads() {
    const int cap = env_thread_cap();
    const int avail = omp_get_max_threads();
    return cap > 0 && cap < avail ? cap : avail;
}

void apply_thread_cap() {
    static std::once_flag once;
    std::call_once(once, [] {
        const int cap = env_thread_cap();
        if (cap > 0) omp_set_num_threads(cap);
    });
}

namespace kernels {

ExecMode exec_mode() noexcept { return g_mode; }

ScopedExec::ScopedExec(ExecMode mode) noexcept : previous_(g_mode) { g_mode = mode; }

ScopedExec::~ScopedExec() { g_mode = previous_; }

}  // namespace kernels
}  // namespace nsdecay
