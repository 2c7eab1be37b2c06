#include "opforge/catalog/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace opforge {

namespace {

std::mutex memo_mutex;
std::map<std::string, RewriteSystem>& memo() {
  static std::map<std::string, RewriteSystem> m;
  return m;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string completion_key(const Presentation& p, const OrderSpec& order, int max_arity) {
  std::ostringstream text;
  text << canonical_text(p) << to_json(order).dump() << "|" << max_arity;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(text.str())));
  return buf;
}

void clear_completion_memo() {
  std::lock_guard lock(memo_mutex);
  memo().clear();
}

RewriteSystem completed(const Presentation& p, const OrderSpec& order, const CompletionOptions& options,
                        CompletionReport* report, bool* from_cache) {
  const std::string key = completion_key(p, order, options.max_arity);
  if (from_cache) *from_cache = false;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo().find(key); it != memo().end()) {
      if (from_cache) *from_cache = true;
      if (report) *report = CompletionReport{0, 0, options.max_arity, {}, 0, 0, true};
      return it->second;
    }
  }
  std::filesystem::path file;
  if (const char* dir = std::getenv(kCacheEnv); dir && *dir) {
    file = std::filesystem::path(dir) / ("system-" + key + ".json");
    std::ifstream in(file);
    if (in) {
      try {
        RewriteSystem sys = system_from_json(nlohmann::json::parse(in));
        if (sys.signature == p.signature() && sys.order == order && sys.truncation_arity == options.max_arity) {
          std::lock_guard lock(memo_mutex);
          memo().emplace(key, sys);
          if (from_cache) *from_cache = true;
          if (report) *report = CompletionReport{0, 0, options.max_arity, {}, 0, 0, true};
          return sys;
        }
      } catch (const std::exception&) {
        // unreadable cache entries are recomputed and overwritten
      }
    }
  }
  RewriteSystem sys = complete(p, order, options, report);
  if (!file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    const auto tmp = file.string() + ".tmp";
    std::ofstream(tmp) << dump(sys);
    std::filesystem::rename(tmp, file, ec);
  }
  std::lock_guard lock(memo_mutex);
  memo().emplace(key, sys);
  return sys;
}

}  // namespace opforge
