#include "bicatkit/label.hpp"

namespace bk {

Label Label::atom(std::string text) {
  for (char c : text)
    if (c == '(' || c == ')' || c == ',' || c == ':')
      throw std::invalid_argument("Label::atom: reserved character in '" + text + "'");
  Label v;
  v.kind_ = Kind::Atom;
  v.text_ = std::move(text);
  return v;
}

Label Label::tag(std::string name, Label inner) {
  for (char c : name)
    if (c == '(' || c == ')' || c == ',' || c == ':')
      throw std::invalid_argument("Label::tag: reserved character in '" + name + "'");
  Label v;
  v.kind_ = Kind::Tag;
  v.text_ = std::move(name);
  v.a_ = std::make_shared<const Label>(std::move(inner));
  return v;
}

Label Label::pair(Label first, Label second) {
  Label v;
  v.kind_ = Kind::Pair;
  v.a_ = std::make_shared<const Label>(std::move(first));
  v.b_ = std::make_shared<const Label>(std::move(second));
  return v;
}

const std::string& Label::text() const { return text_; }

const Label& Label::first() const {
  if (kind_ != Kind::Pair) throw std::logic_error("Label::first on non-pair");
  return *a_;
}

const Label& Label::second() const {
  if (kind_ != Kind::Pair) throw std::logic_error("Label::second on non-pair");
  return *b_;
}

const Label& Label::inner() const {
  if (kind_ != Kind::Tag) throw std::logic_error("Label::inner on non-tag");
  return *a_;
}

std::string Label::str() const {
  switch (kind_) {
    case Kind::Atom: return text_;
    case Kind::Pair: return "(" + a_->str() + "," + b_->str() + ")";
    case Kind::Tag: return text_ + ":" + a_->str();
  }
  return {};
}

bool operator==(const Label& a, const Label& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Label::Kind::Atom: return a.text_ <=> b.text_;
    case Label::Kind::Pair:
      if (auto c = *a.a_ <=> *b.a_; c != 0) return c;
      return *a.b_ <=> *b.b_;
    case Label::Kind::Tag:
      if (auto c = a.text_ <=> b.text_; c != 0) return c;
      return *a.a_ <=> *b.a_;
  }
  return std::strong_ordering::equal;
}

namespace {

// grammar: value := pair | tagged | atom
//          pair  := '(' value ',' value ')'
//          tagged:= name ':' value
//          atom  := [^(),:]*
struct Parser {
  std::string_view s;
  size_t i = 0;

  char peek() const { return i < s.size() ? s[i] : '\0'; }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("Label::parse: " + why + " at offset " +
                                std::to_string(i) + " in '" + std::string(s) + "'");
  }

  std::string name() {
    size_t start = i;
    while (i < s.size() && s[i] != '(' && s[i] != ')' && s[i] != ',' && s[i] != ':') ++i;
    return std::string(s.substr(start, i - start));
  }

  Label value() {
    if (peek() == '(') {
      ++i;
      Label a = value();
      if (peek() != ',') fail("expected ','");
      ++i;
      Label b = value();
      if (peek() != ')') fail("expected ')'");
      ++i;
      return Label::pair(std::move(a), std::move(b));
    }
    std::string n = name();
    if (peek() == ':') {
      ++i;
      return Label::tag(std::move(n), value());
    }
    return Label::atom(std::move(n));
  }
};

} // namespace

Label Label::parse(std::string_view s) {
  Parser p{s};
  Label v = p.value();
  if (p.i != s.size()) p.fail("trailing input");
  return v;
}

} // namespace bk
