#include "padlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "padlab/nt.hpp"

namespace padlab {
namespace par {

namespace {
std::atomic<long> g_threads{0};  // 0 = unresolved
}

void set_thread_count(long n) { g_threads.store(n < 1 ? 1 : n); }

long thread_count() {
    long t = g_threads.load();
    if (t > 0) return t;
    if (const char* env = std::getenv("PADIC_LAB_THREADS")) {
        long n = std::atol(env);
        if (n >= 1) return n;
    }
    return 1;
}

mpz_class chunked_block_product_mod(long lo, long hi,
                                    const std::function<mpz_class(long, long, const mpz_class&)>& block_fn,
                                    const mpz_class& mod) {
    if (hi <= lo) return mpz_class(1) % mod;
    long nblocks = (hi - lo + kChunk - 1) / kChunk;
    long nthreads = std::min(thread_count(), nblocks);
    std::vector<mpz_class> partial(static_cast<size_t>(nblocks));
    if (nthreads <= 1) {
        for (long b = 0; b < nblocks; ++b) {
            long a = lo + b * kChunk;
            partial[static_cast<size_t>(b)] = block_fn(a, std::min(hi, a + kChunk), mod);
        }
    } else {
        std::atomic<long> next{0};
        auto work = [&] {
            for (;;) {
                long b = next.fetch_add(1);
                if (b >= nblocks) return;
                long a = lo + b * kChunk;
                partial[static_cast<size_t>(b)] = block_fn(a, std::min(hi, a + kChunk), mod);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nthreads));
        for (long i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    mpz_class acc = 1;
    for (auto& pp : partial) acc = mod_reduce(acc * pp, mod);
    return acc;
}

mpz_class chunked_product_mod(long lo, long hi, const std::function<mpz_class(long)>& term,
                              const mpz_class& mod) {
    return chunked_block_product_mod(
        lo, hi,
        [&term](long a, long b, const mpz_class& m) {
            mpz_class acc = 1;
            for (long i = a; i < b; ++i) acc = mod_reduce(acc * term(i), m);
            return acc;
        },
        mod);
}

}  // namespace par
}  // namespace padlab
