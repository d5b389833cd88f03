#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

namespace bk {

// A small thread-safe memo table keyed by strings. Law suites evaluate in
// parallel, so the underlying procedures must stay pure.
template <class V>
class Memo {
public:
  V get(const std::string& key, const std::function<V()>& compute) const {
    {
      std::lock_guard<std::mutex> lock(m_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    V value = compute();
    std::lock_guard<std::mutex> lock(m_);
    return map_.emplace(key, std::move(value)).first->second;
  }

private:
  mutable std::mutex m_;
  mutable std::unordered_map<std::string, V> map_;
};

template <class V>
using MemoPtr = std::shared_ptr<Memo<V>>;

} // namespace bk
