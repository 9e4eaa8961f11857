#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "besov/error.hpp"

namespace besov::detail {

namespace {

// Plans are created once per (shape, direction) and reused. Planning is not
// thread safe in FFTW, execution with the new-array interface is.
class PlanCache {
public:
    fftw_plan get(std::size_t nx, std::size_t ny, int sign) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_tuple(nx, ny, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::vector<std::complex<double>> scratch(nx * ny);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        const int dir = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
        fftw_plan plan = ny == 1 ? fftw_plan_dft_1d(static_cast<int>(nx), buf, buf, dir, flags)
                                 : fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), buf, buf, dir, flags);
        if (plan == nullptr) throw Error("FFT planning failed");
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

} // namespace

void fft(std::complex<double>* data, std::size_t n, int sign) {
    if (n == 0) return;
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(cache().get(n, 1, sign), buf, buf);
}

void fft2(std::complex<double>* data, std::size_t nx, std::size_t ny, int sign) {
    if (nx == 0 || ny == 0) return;
    if (ny == 1) return fft(data, nx, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(cache().get(nx, ny, sign), buf, buf);
}

} // namespace besov::detail
