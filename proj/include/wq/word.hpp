#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wq {

class CayleyTable;
struct GeneratorContext;

enum class Letter : std::uint8_t { F, G };

/// Immutable binary tree over the letters f and g, where g stands for the
/// product ef.  A word of length n denotes one bracketed product of n terms
/// drawn from {f, ef}.
class Word {
 public:
  static Word leaf(Letter l);
  static Word pair(Word left, Word right);

  /// Grammar: word := "f" | "g" | "(" word " " word ")".
  /// Throws WordSyntaxError with the offending byte position.
  static Word parse(std::string_view text);

  bool is_leaf() const { return node_->letter >= 0; }
  Letter letter() const;
  Word left() const;
  Word right() const;

  /// Number of leaf letters.
  int length() const { return node_->leaves; }

  std::string render() const;

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

 private:
  struct Node {
    int8_t letter;  // 0 = F, 1 = G, -1 = internal
    int leaves;
    std::shared_ptr<const Node> left, right;
  };
  explicit Word(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class WordSyntaxError : public std::runtime_error {
 public:
  WordSyntaxError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// All words of the given length: letter sequences in binary order (f < g,
/// leftmost letter most significant), bracketings within each sequence in a
/// fixed recursive order.  Count is 2^n * Catalan(n-1).
std::vector<Word> enumerate_words(int length);

/// Folds the word through the table's product: leaf F is ctx.f, leaf G is
/// ctx.g (= e*f).
int evaluate(const Word& w, const CayleyTable& t, const GeneratorContext& ctx);

}  // namespace wq
