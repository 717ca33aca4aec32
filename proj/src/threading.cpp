#include "lfdepth/threading.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lfdepth {

namespace {
int g_num_threads = 0;  // 0 = hardware concurrency
}

void set_num_threads(int n) { g_num_threads = n < 0 ? 0 : n; }

int num_threads() {
  if (g_num_threads > 0) return g_num_threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Chunk layout depends only on n so that reduction order is stable across
// thread counts.
int64_t chunk_count(int64_t n) {
  if (n <= 0) return 0;
  const int64_t max_chunks = 64;
  return std::min(n, max_chunks);
}

void chunk_bounds(int64_t n, int64_t chunk, int64_t* begin, int64_t* end) {
  const int64_t chunks = chunk_count(n);
  *begin = chunk * n / chunks;
  *end = (chunk + 1) * n / chunks;
}

void parallel_for_chunks(int64_t n, const std::function<void(int64_t, int64_t, int64_t)>& fn) {
  const int64_t chunks = chunk_count(n);
  if (chunks == 0) return;
  const int workers = std::min<int64_t>(num_threads(), chunks);

  if (workers <= 1) {
    for (int64_t c = 0; c < chunks; ++c) {
      int64_t begin, end;
      chunk_bounds(n, c, &begin, &end);
      fn(c, begin, end);
    }
    return;
  }

  std::atomic<int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        int64_t begin, end;
        chunk_bounds(n, c, &begin, &end);
        fn(c, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int i = 0; i < workers - 1; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

void parallel_for(int64_t n, const std::function<void(int64_t)>& fn) {
  parallel_for_chunks(n, [&](int64_t, int64_t begin, int64_t end) {
    for (int64_t i = begin; i < end; ++i) fn(i);
  });
}

double parallel_sum(int64_t n, const std::function<double(int64_t)>& term) {
  const int64_t chunks = chunk_count(n);
  std::vector<double> partial(static_cast<size_t>(chunks), 0.0);
  parallel_for_chunks(n, [&](int64_t c, int64_t begin, int64_t end) {
    double acc = 0.0;
    for (int64_t i = begin; i < end; ++i) acc += term(i);
    partial[static_cast<size_t>(c)] = acc;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace lfdepth
