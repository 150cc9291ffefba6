#pragma once

#include <omp.h>

#include <cstdint>

namespace fwgan::kernels {

// Runtime switch between the OpenMP kernels and the serial path. Both paths
// compute every output element with the same per-element loop order, so
// results are bit-identical for any thread count.
void set_parallel(bool on);
bool parallel_enabled();

template <class F>
inline void parallel_for(int64_t n, F&& body) {
  if (n <= 0) return;
  if (!parallel_enabled() || n < 4096) {
    body(int64_t{0}, n);
    return;
  }
#pragma omp parallel
  {
    int nt = omp_get_num_threads();
    int t = omp_get_thread_num();
    int64_t chunk = (n + nt - 1) / nt;
    int64_t b = t * chunk;
    int64_t e = b + chunk < n ? b + chunk : n;
    if (b < e) body(b, e);
  }
}

// C[i,j] = sum_k opA(A)[i,k] * opB(B)[k,j]; row-major, C is m x n.
// trans_a: A stored [k,m]; trans_b: B stored [n,k].
void gemm(int m, int k, int n, bool trans_a, bool trans_b, const float* a,
          const float* b, float* c, bool accumulate);

struct Conv2dGeom {
  int batch = 0;
  int in_c = 0, in_h = 0, in_w = 0;
  int out_c = 0, out_h = 0, out_w = 0;
  int kh = 0, kw = 0;
  int stride_h = 1, stride_w = 1;
  int pad_h = 0, pad_w = 0;
  int groups = 1;
};

void conv2d_forward(const Conv2dGeom& g, const float* x, const float* w, float* y);
// Accumulates into gx / gw (callers zero the buffers).
void conv2d_dgrad(const Conv2dGeom& g, const float* gy, const float* w, float* gx);
void conv2d_wgrad(const Conv2dGeom& g, const float* gy, const float* x, float* gw);

// Unnormalized 2D DFT of each [h,w] plane of x[planes,h,w].
// out[plane, 0, u, v] = Re X, out[plane, 1, u, v] = Im X.
void dft2_forward(int planes, int h, int w, const float* x, float* out);
// Adjoint: gx[plane,h,w] += sum_uv gRe*cos - gIm*sin.
void dft2_adjoint(int planes, int h, int w, const float* gout, float* gx);

}  // namespace fwgan::kernels
