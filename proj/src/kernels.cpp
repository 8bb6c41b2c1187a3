#include "emden/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace emden::kernels {

namespace {

void sturm_counts_scalar(const double* diag, const double* off_sq, std::size_t n,
                         const double* shifts, int* counts, std::size_t m, double pivmin) {
    for (std::size_t s = 0; s < m; ++s) {
        const double shift = shifts[s];
        int neg = 0;
        double q = diag[0] - shift;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++neg;
        for (std::size_t i = 1; i < n; ++i) {
            q = (diag[i] - shift) - off_sq[i - 1] / q;
            if (std::abs(q) < pivmin) q = -pivmin;
            if (q < 0.0) ++neg;
        }
        counts[s] = neg;
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

const detail::Ops kScalarOps{&sturm_counts_scalar, &dot_scalar};

Backend detect_backend() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    if (detail::avx2_ops() != nullptr && __builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

std::atomic<const detail::Ops*> g_ops{nullptr};
std::atomic<Backend> g_backend{Backend::Scalar};

const detail::Ops* ops() {
    const detail::Ops* p = g_ops.load(std::memory_order_acquire);
    if (p == nullptr) {
        const Backend b = detect_backend();
        p = (b == Backend::Avx2) ? detail::avx2_ops() : &kScalarOps;
        g_backend.store(b, std::memory_order_relaxed);
        g_ops.store(p, std::memory_order_release);
    }
    return p;
}

}  // namespace

namespace detail {
const Ops* scalar_ops() { return &kScalarOps; }
}  // namespace detail

Backend active_backend() {
    ops();
    return g_backend.load(std::memory_order_relaxed);
}

bool set_backend(Backend b) {
    const detail::Ops* p = nullptr;
    if (b == Backend::Scalar) {
        p = &kScalarOps;
    } else {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
        if (detail::avx2_ops() != nullptr && __builtin_cpu_supports("avx2"))
            p = detail::avx2_ops();
#endif
    }
    if (p == nullptr) return false;
    g_ops.store(p, std::memory_order_release);
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

const char* backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  std::span<const double> shifts, std::span<int> counts) {
    if (diag.empty()) throw std::invalid_argument("sturm_counts: empty matrix");
    if (off_sq.size() + 1 != diag.size())
        throw std::invalid_argument("sturm_counts: off_sq must have size diag.size()-1");
    if (shifts.size() != counts.size())
        throw std::invalid_argument("sturm_counts: shifts/counts size mismatch");
    double e2max = 1.0;
    for (double e2 : off_sq) e2max = std::max(e2max, e2);
    const double pivmin = std::numeric_limits<double>::min() * e2max;
    ops()->sturm_counts(diag.data(), off_sq.data(), diag.size(), shifts.data(), counts.data(),
                        shifts.size(), pivmin);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    return ops()->dot(a.data(), b.data(), a.size());
}

}  // namespace emden::kernels
