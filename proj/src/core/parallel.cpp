#include "quatkrylov/core/parallel.hpp"

#include <cstdlib>
#include <future>
#include <string>
#include <vector>

namespace quatkrylov {

int thread_count() {
  const char* env = std::getenv("QUATKRYLOV_THREADS");
  if (!env) return 1;
  try {
    const int n = std::stoi(env);
    return n < 1 ? 1 : n;
  } catch (const std::exception&) {
    return 1;
  }
}

void for_each_part(const std::function<void(int)>& fn) {
  if (thread_count() == 1) {
    for (int c = 0; c < 4; ++c) fn(c);
    return;
  }
  std::vector<std::future<void>> jobs;
  for (int c = 1; c < 4; ++c) jobs.push_back(std::async(std::launch::async, fn, c));
  fn(0);
  for (auto& j : jobs) j.get();
}

}  // namespace quatkrylov
