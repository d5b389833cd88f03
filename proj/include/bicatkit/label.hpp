#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bk {

// Structured element labels: atoms, pairs "(x,y)" and tagged values "tag:x".
// Labels are immutable; ordering is structural (atoms < pairs < tags, then
// componentwise). The printed form is parseable, so serialization round-trips.
class Label {
public:
  enum class Kind { Atom, Pair, Tag };

  Label() : kind_(Kind::Atom) {}

  static Label atom(std::string text);
  static Label pair(Label first, Label second);
  static Label tag(std::string name, Label inner);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_pair() const { return kind_ == Kind::Pair; }
  bool is_tag() const { return kind_ == Kind::Tag; }

  const std::string& text() const;         // Atom text or Tag name
  const Label& first() const;              // Pair components
  const Label& second() const;
  const Label& inner() const;              // Tag payload

  std::string str() const;

  friend bool operator==(const Label& a, const Label& b);
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);

  // Parses the printed form back; throws std::invalid_argument on junk.
  static Label parse(std::string_view s);

private:
  Kind kind_ = Kind::Atom;
  std::string text_;
  std::shared_ptr<const Label> a_, b_;
};

using Labels = std::vector<Label>;

} // namespace bk
