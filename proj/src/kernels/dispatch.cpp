#include "wright_stein/errors.hpp"
#include "wright_stein/kernels.hpp"

namespace wright_stein::kernels {

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(WRIGHT_STEIN_AVX2_KERNEL)
  static const bool has = __builtin_cpu_supports("avx2");
  return has;
#else
  return false;
#endif
}

Isa best_isa() { return avx2_available() ? Isa::avx2 : Isa::scalar; }

void stein_operator_batch(const UniformTable& table, const double* s, std::size_t count,
                          double* out, Isa isa) {
  if (table.n < 4 || !(table.step > 0.0))
    throw DomainError("stein_operator_batch: table needs at least 4 nodes and a positive step");
  if (isa == Isa::avx2) {
    if (!avx2_available()) throw DomainError("stein_operator_batch: AVX2 not supported here");
#if defined(WRIGHT_STEIN_AVX2_KERNEL)
    detail::stein_operator_avx2(table, s, count, out);
    return;
#endif

  }
  detail::stein_operator_scalar(table, s, count, out);
}

}  // namespace wright_stein::kernels
