#include "wq/word.hpp"

#include <cassert>

#include "wq/cayley_table.hpp"

namespace wq {

Word Word::leaf(Letter l) {
  auto n = std::make_shared<Node>();
  n->letter = static_cast<int8_t>(l);
  n->leaves = 1;
  return Word(std::move(n));
}

Word Word::pair(Word left, Word right) {
  auto n = std::make_shared<Node>();
  n->letter = -1;
  n->leaves = left.length() + right.length();
  n->left = std::move(left.node_);
  n->right = std::move(right.node_);
  return Word(std::move(n));
}

Letter Word::letter() const {
  assert(is_leaf());
  return static_cast<Letter>(node_->letter);
}

Word Word::left() const {
  assert(!is_leaf());
  return Word(node_->left);
}

Word Word::right() const {
  assert(!is_leaf());
  return Word(node_->right);
}

std::string Word::render() const {
  if (is_leaf()) return node_->letter == 0 ? "f" : "g";
  return "(" + left().render() + " " + right().render() + ")";
}

bool Word::operator==(const Word& other) const {
  if (node_ == other.node_) return true;
  if (is_leaf() != other.is_leaf()) return false;
  if (is_leaf()) return node_->letter == other.node_->letter;
  if (node_->leaves != other.node_->leaves) return false;
  return left() == other.left() && right() == other.right();
}

WordSyntaxError::WordSyntaxError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

Word parse_at(std::string_view s, std::size_t& i) {
  if (i >= s.size()) throw WordSyntaxError("unexpected end of input", i);
  char c = s[i];
  if (c == 'f') {
    ++i;
    return Word::leaf(Letter::F);
  }
  if (c == 'g') {
    ++i;
    return Word::leaf(Letter::G);
  }
  if (c == '(') {
    ++i;
    Word l = parse_at(s, i);
    if (i >= s.size() || s[i] != ' ')
      throw WordSyntaxError("expected ' ' between factors", i);
    ++i;
    Word r = parse_at(s, i);
    if (i >= s.size() || s[i] != ')')
      throw WordSyntaxError("expected ')'", i);
    ++i;
    return Word::pair(std::move(l), std::move(r));
  }
  throw WordSyntaxError(std::string("unexpected character '") + c + "'", i);
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::size_t i = 0;
  Word w = parse_at(text, i);
  if (i != text.size()) throw WordSyntaxError("trailing input", i);
  return w;
}

namespace {

// Bracketing shapes of a given leaf count, in the fixed recursive order:
// left size ascending, then left shape, then right shape.
const std::vector<Word>& shapes(int n) {
  static std::vector<std::vector<Word>> cache;  // cache[k] = shapes of size k+1
  if (cache.empty()) cache.push_back({Word::leaf(Letter::F)});
  while (static_cast<int>(cache.size()) < n) {
    int size = static_cast<int>(cache.size()) + 1;
    std::vector<Word> out;
    for (int l = 1; l < size; ++l)
      for (const Word& a : cache[l - 1])
        for (const Word& b : cache[size - l - 1]) out.push_back(Word::pair(a, b));
    cache.push_back(std::move(out));
  }
  return cache[n - 1];
}

Word with_letters(const Word& shape, unsigned bits, int n, int& next) {
  if (shape.is_leaf()) {
    Letter l = ((bits >> (n - 1 - next)) & 1u) ? Letter::G : Letter::F;
    ++next;
    return Word::leaf(l);
  }
  Word a = with_letters(shape.left(), bits, n, next);
  Word b = with_letters(shape.right(), bits, n, next);
  return Word::pair(std::move(a), std::move(b));
}

}  // namespace

std::vector<Word> enumerate_words(int length) {
  if (length < 1) throw std::invalid_argument("word length must be >= 1");
  std::vector<Word> out;
  const auto& sh = shapes(length);
  for (unsigned bits = 0; bits < (1u << length); ++bits)
    for (const Word& s : sh) {
      int next = 0;
      out.push_back(with_letters(s, bits, length, next));
    }
  return out;
}

int evaluate(const Word& w, const CayleyTable& t, const GeneratorContext& ctx) {
  if (w.is_leaf()) return w.letter() == Letter::F ? ctx.f : ctx.g;
  return t.at(evaluate(w.left(), t, ctx), evaluate(w.right(), t, ctx));
}

}  // namespace wq
