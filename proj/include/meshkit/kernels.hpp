#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace meshkit::kernels {

// Data-parallel inner loops shared by the oracle, grid, and descriptor code.
// Every entry point has a scalar reference implementation plus optional
// vector variants; the active variant is chosen once at startup from CPU
// features and can be overridden with MESHKIT_SIMD=scalar|avx2|neon or
// force_isa(). Vector variants must agree with the scalar reference (exact
// for maps, within reassociation tolerance for reductions); the kernel
// equivalence tests enforce this.

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);

// Variants compiled in and runnable on this CPU. scalar is always present.
std::vector<Isa> available_isas();

Isa active_isa();

// Selects a variant explicitly; throws meshkit::ConfigError when the
// requested variant is unavailable. Intended for tests and benchmarks.
void force_isa(Isa isa);

// ---- float32 maps and reductions ----

float dot_f32(const float* a, const float* b, size_t n);
float l2sq_f32(const float* a, const float* b, size_t n);
void scale_f32(float* a, size_t n, float s);
void clamp_f32(float* a, size_t n, float lo, float hi);

// Componentwise min/max of n packed xyz triples.
void minmax3_f32(const float* xyz, size_t n, float out_min[3], float out_max[3]);

// In-place p = p * scale + t over n packed xyz triples.
void affine3_f32(float* xyz, size_t n, float scale, const float t[3]);

// ---- float64 geometry batches (structure-of-arrays triangle soup) ----

struct TriSoA {
    const double* ax;
    const double* ay;
    const double* az;
    const double* bx;
    const double* by;
    const double* bz;
    const double* cx;
    const double* cy;
    const double* cz;
};

// Squared distance from query point q to each triangle.
void tri_dist2_batch_f64(const double q[3], const TriSoA& tris, size_t n, double* out_d2);

// Sum of signed solid angles subtended at q (generalized winding number
// before the 1/4pi normalization).
double solid_angle_sum_f64(const double q[3], const TriSoA& tris, size_t n);

}  // namespace meshkit::kernels
