#pragma once

// Deterministic chunked reductions.  Chunk boundaries are fixed (independent
// of the thread count), partials are exact modular values, and the combine
// runs in chunk order, so results are byte-identical for any thread count.

#include <gmpxx.h>

#include <functional>

namespace padlab {
namespace par {

// worker threads used for chunked reductions; resolved from
// set_thread_count() if called, else PADIC_LAB_THREADS, else 1
long thread_count();
void set_thread_count(long n);

inline constexpr long kChunk = 1L << 15;

// product over i in [lo, hi) of term(i), modulo mod; term(i) must be
// independent of evaluation order
mpz_class chunked_product_mod(long lo, long hi, const std::function<mpz_class(long)>& term,
                              const mpz_class& mod);

// generic: block_fn(b_lo, b_hi) -> partial; partials combined left-to-right
mpz_class chunked_block_product_mod(long lo, long hi,
                                    const std::function<mpz_class(long, long, const mpz_class&)>& block_fn,
                                    const mpz_class& mod);

}  // namespace par
}  // namespace padlab
