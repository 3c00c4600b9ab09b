// SPDX-License-Identifier: Apache-2.0
#include "corb/blas.hpp"

#include <cblas.h>

extern "C" void openblas_set_num_threads(int);

namespace corb {

namespace {
int g_blas_threads = 1;
}

void set_blas_threads(int n) {
  if (n < 1) n = 1;
  g_blas_threads = n;
  openblas_set_num_threads(n);
}

int blas_threads() { return g_blas_threads; }

namespace detail {

void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha, const float* a, int lda,
          const float* b, int ldb, float beta, float* c, int ldc) {
  cblas_sgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc) {
  cblas_dgemm(CblasRowMajor, trans_a ? CblasTrans : CblasNoTrans,
              trans_b ? CblasTrans : CblasNoTrans, m, n, k, alpha, a, lda, b, ldb, beta, c, ldc);
}

}  // namespace detail
}  // namespace corb
