#include "deltak/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace deltak {

int default_jobs() {
  if (const char* env = std::getenv("DELTAK_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::uint64_t count, int jobs,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > count) jobs = count == 0 ? 1 : static_cast<int>(count);
  if (jobs == 1) {
    body(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = count / jobs;
  const std::uint64_t extra = count % jobs;
  std::uint64_t begin = 0;
  for (int w = 0; w < jobs; ++w) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace deltak
