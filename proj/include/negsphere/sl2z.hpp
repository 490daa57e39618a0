#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace negsphere {

// Monodromy generators: right-handed Dehn twists along two curves meeting once.
enum class Generator { A, B };

/// An element of SL(2,Z), stored as a 2x2 integer matrix with determinant one.
///
/// Every constructor checks the determinant and every product checks for
/// 64-bit overflow; a violation throws instead of producing a wrapped value.
class GroupElement {
 public:
  GroupElement(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22);

  static GroupElement identity() { return {1, 0, 0, 1}; }

  std::int64_t m11() const { return m_[0]; }
  std::int64_t m12() const { return m_[1]; }
  std::int64_t m21() const { return m_[2]; }
  std::int64_t m22() const { return m_[3]; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::array<std::int64_t, 4> m_;
};

/// A positive word in the generators a and b.
class MonodromyWord {
 public:
  MonodromyWord() = default;
  MonodromyWord(std::initializer_list<Generator> letters) : letters_(letters) {}
  explicit MonodromyWord(std::vector<Generator> letters) : letters_(std::move(letters)) {}

  // Accepts 'a'/'b' (either case); anything else throws std::invalid_argument.
  static MonodromyWord parse(std::string_view text);

  // `times` copies of this word, concatenated.
  MonodromyWord power(int times) const;

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Generator>& letters() const { return letters_; }

  std::string str() const;

  friend MonodromyWord operator+(const MonodromyWord& lhs, const MonodromyWord& rhs);
  friend bool operator==(const MonodromyWord&, const MonodromyWord&) = default;

 private:
  std::vector<Generator> letters_;
};

// a = [[1,1],[0,1]], b = [[1,0],[-1,1]].
GroupElement generator(Generator name);

// Matrix product g*h. Throws std::overflow_error if an entry leaves int64.
GroupElement compose(const GroupElement& g, const GroupElement& h);

// Left-to-right product of the generator matrices; the empty word is the identity.
GroupElement word_to_matrix(const MonodromyWord& word);

bool is_identity(const GroupElement& g);

}  // namespace negsphere
