#include <algorithm>
#include <cmath>

#include "kernel_table.hpp"

namespace meshkit::kernels {

namespace {

float dot_scalar(const float* a, const float* b, size_t n) {
    float acc = 0.0f;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

float l2sq_scalar(const float* a, const float* b, size_t n) {
    float acc = 0.0f;
    for (size_t i = 0; i < n; ++i) {
        float d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void scale_scalar(float* a, size_t n, float s) {
    for (size_t i = 0; i < n; ++i) a[i] *= s;
}

void clamp_scalar(float* a, size_t n, float lo, float hi) {
    for (size_t i = 0; i < n; ++i) a[i] = std::min(hi, std::max(lo, a[i]));
}

void minmax3_scalar(const float* xyz, size_t n, float* out_min, float* out_max) {
    float mn[3] = {xyz[0], xyz[1], xyz[2]};
    float mx[3] = {xyz[0], xyz[1], xyz[2]};
    for (size_t i = 1; i < n; ++i) {
        for (int c = 0; c < 3; ++c) {
            float v = xyz[3 * i + c];
            mn[c] = std::min(mn[c], v);
            mx[c] = std::max(mx[c], v);
        }
    }
    for (int c = 0; c < 3; ++c) {
        out_min[c] = mn[c];
        out_max[c] = mx[c];
    }
}

void affine3_scalar(float* xyz, size_t n, float scale, const float* t) {
    for (size_t i = 0; i < n; ++i) {
        xyz[3 * i + 0] = xyz[3 * i + 0] * scale + t[0];
        xyz[3 * i + 1] = xyz[3 * i + 1] * scale + t[1];
        xyz[3 * i + 2] = xyz[3 * i + 2] * scale + t[2];
    }
}

void tri_dist2_scalar(const double* q, const TriSoA& t, size_t n, double* out_d2) {
    for (size_t i = 0; i < n; ++i)
        out_d2[i] = tri_dist2_scalar_one(q, t.ax[i], t.ay[i], t.az[i], t.bx[i], t.by[i], t.bz[i],
                                         t.cx[i], t.cy[i], t.cz[i]);
}

double solid_angle_scalar(const double* q, const TriSoA& t, size_t n) {
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double ax = t.ax[i] - q[0], ay = t.ay[i] - q[1], az = t.az[i] - q[2];
        double bx = t.bx[i] - q[0], by = t.by[i] - q[1], bz = t.bz[i] - q[2];
        double cx = t.cx[i] - q[0], cy = t.cy[i] - q[1], cz = t.cz[i] - q[2];
        double la = std::sqrt(ax * ax + ay * ay + az * az);
        double lb = std::sqrt(bx * bx + by * by + bz * bz);
        double lc = std::sqrt(cx * cx + cy * cy + cz * cz);
        // det[a b c] and the van Oosterom-Strackee denominator
        double det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
        double ab = ax * bx + ay * by + az * bz;
        double bc = bx * cx + by * cy + bz * cz;
        double ca = cx * ax + cy * ay + cz * az;
        double denom = la * lb * lc + ab * lc + bc * la + ca * lb;
        total += 2.0 * std::atan2(det, denom);
    }
    return total;
}

}  // namespace

// Closest-point-on-triangle squared distance (Voronoi region walk). This is
// the reference the vector variants are validated against.
double tri_dist2_scalar_one(const double q[3], double ax, double ay, double az, double bx,
                            double by, double bz, double cx, double cy, double cz) {
    double abx = bx - ax, aby = by - ay, abz = bz - az;
    double acx = cx - ax, acy = cy - ay, acz = cz - az;
    double apx = q[0] - ax, apy = q[1] - ay, apz = q[2] - az;

    double d1 = abx * apx + aby * apy + abz * apz;
    double d2 = acx * apx + acy * apy + acz * apz;
    if (d1 <= 0.0 && d2 <= 0.0) return apx * apx + apy * apy + apz * apz;

    double bpx = q[0] - bx, bpy = q[1] - by, bpz = q[2] - bz;
    double d3 = abx * bpx + aby * bpy + abz * bpz;
    double d4 = acx * bpx + acy * bpy + acz * bpz;
    if (d3 >= 0.0 && d4 <= d3) return bpx * bpx + bpy * bpy + bpz * bpz;

    double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        double denom = d1 - d3;
        double v = denom != 0.0 ? d1 / denom : 0.0;
        double px = ax + v * abx - q[0], py = ay + v * aby - q[1], pz = az + v * abz - q[2];
        return px * px + py * py + pz * pz;
    }

    double cpx = q[0] - cx, cpy = q[1] - cy, cpz = q[2] - cz;
    double d5 = abx * cpx + aby * cpy + abz * cpz;
    double d6 = acx * cpx + acy * cpy + acz * cpz;
    if (d6 >= 0.0 && d5 <= d6) return cpx * cpx + cpy * cpy + cpz * cpz;

    double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        double denom = d2 - d6;
        double w = denom != 0.0 ? d2 / denom : 0.0;
        double px = ax + w * acx - q[0], py = ay + w * acy - q[1], pz = az + w * acz - q[2];
        return px * px + py * py + pz * pz;
    }

    double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        double denom = (d4 - d3) + (d5 - d6);
        double w = denom != 0.0 ? (d4 - d3) / denom : 0.0;
        double px = bx + w * (cx - bx) - q[0];
        double py = by + w * (cy - by) - q[1];
        double pz = bz + w * (cz - bz) - q[2];
        return px * px + py * py + pz * pz;
    }

    double sum = va + vb + vc;
    if (sum != 0.0) {
        double denom = 1.0 / sum;
        double v = vb * denom, w = vc * denom;
        double px = ax + abx * v + acx * w - q[0];
        double py = ay + aby * v + acy * w - q[1];
        double pz = az + abz * v + acz * w - q[2];
        return px * px + py * py + pz * pz;
    }
    // degenerate (zero-area) triangle: nearest of the three edges as segments
    auto seg_d2 = [&](double sx, double sy, double sz, double ex, double ey, double ez) {
        double dx = ex - sx, dy = ey - sy, dz = ez - sz;
        double len2 = dx * dx + dy * dy + dz * dz;
        double tpar = 0.0;
        if (len2 > 0.0)
            tpar = std::clamp(
                ((q[0] - sx) * dx + (q[1] - sy) * dy + (q[2] - sz) * dz) / len2, 0.0, 1.0);
        double px = sx + tpar * dx - q[0], py = sy + tpar * dy - q[1], pz = sz + tpar * dz - q[2];
        return px * px + py * py + pz * pz;
    };
    return std::min({seg_d2(ax, ay, az, bx, by, bz), seg_d2(bx, by, bz, cx, cy, cz),
                     seg_d2(cx, cy, cz, ax, ay, az)});
}

const KernelTable& scalar_table() {
    static const KernelTable table = {
        dot_scalar,    l2sq_scalar,       scale_scalar,     clamp_scalar,
        minmax3_scalar, affine3_scalar,   tri_dist2_scalar, solid_angle_scalar,
    };
    return table;
}

}  // namespace meshkit::kernels
