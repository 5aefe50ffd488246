#include "convexlab/coverage.hpp"

#include <mutex>

namespace convexlab::coverage {
namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::set<std::string>& registry() {
  static std::set<std::string> ops;
  return ops;
}

}  // namespace

void touch(const char* op) {
  std::lock_guard lock(registry_mutex());
  registry().emplace(op);
}

std::set<std::string> touched() {
  std::lock_guard lock(registry_mutex());
  return registry();
}

void reset() {
  std::lock_guard lock(registry_mutex());
  registry().clear();
}

}  // namespace convexlab::coverage
