#include "qarena/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qarena {

namespace {
std::atomic<int> g_max_threads{0};

int effective_threads() {
  const int cap = g_max_threads.load();
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int def = hw > 0 ? hw : 1;
  return cap > 0 ? std::min(cap, def) : def;
}
}  // namespace

void set_max_threads(int n) { g_max_threads.store(n > 0 ? n : 0); }

int max_threads() { return effective_threads(); }

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn) {
  if (count <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(effective_threads(), count));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto body = [&]() {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();

  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qarena
