#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace burnside {

// Process-lifetime memo cache. The first caller for a key computes the value
// outside the lock while later callers block on a shared future, so each
// computation runs once even with concurrent workers. Entries are never
// evicted; values hold the owning shared_ptrs of whatever their key points
// at, which keeps raw-pointer keys from being reused.
template <class K, class V, class Less = std::less<K>>
class Memo {
 public:
  template <class F>
  V get(const K& key, F&& compute) {
    std::shared_future<V> fut;
    std::shared_ptr<std::promise<V>> mine;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(key);
      if (it == map_.end()) {
        mine = std::make_shared<std::promise<V>>();
        fut = mine->get_future().share();
        map_.emplace(key, fut);
      } else {
        fut = it->second;
      }
    }
    if (mine) {
      try {
        mine->set_value(compute(key));
      } catch (...) {
        mine->set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  std::mutex mu_;
  std::map<K, std::shared_future<V>, Less> map_;
};

}  // namespace burnside
