#pragma once

#include <cstddef>

#include "meshkit/kernels.hpp"

namespace meshkit::kernels {

struct KernelTable {
    float (*dot_f32)(const float*, const float*, size_t);
    float (*l2sq_f32)(const float*, const float*, size_t);
    void (*scale_f32)(float*, size_t, float);
    void (*clamp_f32)(float*, size_t, float, float);
    void (*minmax3_f32)(const float*, size_t, float*, float*);
    void (*affine3_f32)(float*, size_t, float, const float*);
    void (*tri_dist2_batch_f64)(const double*, const TriSoA&, size_t, double*);
    double (*solid_angle_sum_f64)(const double*, const TriSoA&, size_t);
};

const KernelTable& scalar_table();

#if defined(__x86_64__) || defined(_M_X64)
#define MESHKIT_HAVE_AVX2_SOURCES 1
const KernelTable& avx2_table();
#endif

#if defined(__aarch64__)
#define MESHKIT_HAVE_NEON_SOURCES 1
const KernelTable& neon_table();
#endif

// Scalar reference for one triangle; shared by the scalar table and the
// vector variants' tail/fallback paths.
double tri_dist2_scalar_one(const double q[3], double ax, double ay, double az, double bx,
                            double by, double bz, double cx, double cy, double cz);

}  // namespace meshkit::kernels
