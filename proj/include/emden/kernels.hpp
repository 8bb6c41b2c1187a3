#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the eigensolver and quadrature code.
// A scalar reference implementation always exists; on x86-64 an AVX2 variant
// is selected at runtime. The two are equivalence-tested: Sturm counts must
// agree exactly (identical IEEE operations per lane), dot products to within
// reduction-order round-off.

namespace emden::kernels {

enum class Backend { Scalar, Avx2 };

/// Backend currently in use.
Backend active_backend();

/// Force a backend; returns false (and leaves the selection unchanged) if
/// the requested backend is not supported on this machine.
bool set_backend(Backend b);

const char* backend_name(Backend b);

/// For each shift s in `shifts`, the number of eigenvalues of the symmetric
/// tridiagonal matrix (diag; off-diagonal squares off_sq) strictly below s,
/// by Sturm sequence / LDL^T pivot signs. off_sq.size() == diag.size() - 1.
void sturm_counts(std::span<const double> diag, std::span<const double> off_sq,
                  std::span<const double> shifts, std::span<int> counts);

/// Inner product sum a[i]*b[i].
double dot(std::span<const double> a, std::span<const double> b);

namespace detail {
struct Ops {
    void (*sturm_counts)(const double*, const double*, std::size_t,
                         const double*, int*, std::size_t, double pivmin);
    double (*dot)(const double*, const double*, std::size_t);
};
const Ops* scalar_ops();
const Ops* avx2_ops();  // nullptr when unavailable
}  // namespace detail

}  // namespace emden::kernels
