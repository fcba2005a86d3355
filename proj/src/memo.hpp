#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace soncoup::detail {

/// Thread-safe memo table. Concurrent misses on one key may both compute;
/// the first insert wins and both callers see equal values.
template <class Key, class Value>
class Memo {
public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value v = compute();
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(v)).first->second;
  }

private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

} // namespace soncoup::detail
