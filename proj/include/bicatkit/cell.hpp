#pragma once

#include <any>
#include <memory>
#include <string>
#include <utility>

namespace bk {

// A type-erased object / 1-cell / 2-cell value. Every cell carries a
// canonical key string computed by the instance that built it; equality,
// ordering and rendering all go through the key. The payload holds the
// instance's concrete representation.
class Cell {
public:
  Cell() = default;

  template <class T>
  static Cell make(std::string key, T payload) {
    Cell c;
    c.key_ = std::make_shared<const std::string>(std::move(key));
    c.payload_ = std::make_shared<const std::any>(std::move(payload));
    return c;
  }

  bool valid() const { return static_cast<bool>(key_); }
  const std::string& key() const {
    static const std::string empty;
    return key_ ? *key_ : empty;
  }

  template <class T>
  const T& as() const {
    return std::any_cast<const T&>(*payload_);
  }

  template <class T>
  const T* try_as() const {
    return payload_ ? std::any_cast<T>(payload_.get()) : nullptr;
  }

  friend bool operator==(const Cell& a, const Cell& b) { return a.key() == b.key(); }
  friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
  friend bool operator<(const Cell& a, const Cell& b) { return a.key() < b.key(); }

private:
  std::shared_ptr<const std::string> key_;
  std::shared_ptr<const std::any> payload_;
};

} // namespace bk
