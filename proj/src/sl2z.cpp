#include "negsphere/sl2z.hpp"

#include <sstream>
#include <stdexcept>

namespace negsphere {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    std::ostringstream msg;
    msg << "SL(2,Z) overflow: " << x << " * " << y << " does not fit in int64";
    throw std::overflow_error(msg.str());
  }
  return out;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    std::ostringstream msg;
    msg << "SL(2,Z) overflow: " << x << " + " << y << " does not fit in int64";
    throw std::overflow_error(msg.str());
  }
  return out;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(x, y, &out)) {
    std::ostringstream msg;
    msg << "SL(2,Z) overflow: " << x << " - " << y << " does not fit in int64";
    throw std::overflow_error(msg.str());
  }
  return out;
}

}  // namespace

GroupElement::GroupElement(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                           std::int64_t m22)
    : m_{m11, m12, m21, m22} {
  const std::int64_t det = checked_sub(checked_mul(m11, m22), checked_mul(m12, m21));
  if (det != 1) {
    std::ostringstream msg;
    msg << "matrix [[" << m11 << "," << m12 << "],[" << m21 << "," << m22
        << "]] has determinant " << det << ", not 1";
    throw std::invalid_argument(msg.str());
  }
}

MonodromyWord MonodromyWord::parse(std::string_view text) {
  std::vector<Generator> letters;
  letters.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a':
      case 'A':
        letters.push_back(Generator::A);
        break;
      case 'b':
      case 'B':
        letters.push_back(Generator::B);
        break;
      default:
        throw std::invalid_argument(std::string("monodromy word letter '") + c +
                                    "' is not a or b");
    }
  }
  return MonodromyWord(std::move(letters));
}

MonodromyWord MonodromyWord::power(int times) const {
  if (times < 0) throw std::invalid_argument("negative word power");
  std::vector<Generator> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(times));
  for (int i = 0; i < times; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return MonodromyWord(std::move(out));
}

std::string MonodromyWord::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Generator g : letters_) out.push_back(g == Generator::A ? 'a' : 'b');
  return out;
}

MonodromyWord operator+(const MonodromyWord& lhs, const MonodromyWord& rhs) {
  std::vector<Generator> out = lhs.letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return MonodromyWord(std::move(out));
}

GroupElement generator(Generator name) {
  if (name == Generator::A) return {1, 1, 0, 1};
  return {1, 0, -1, 1};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return {checked_add(checked_mul(g.m11(), h.m11()), checked_mul(g.m12(), h.m21())),
          checked_add(checked_mul(g.m11(), h.m12()), checked_mul(g.m12(), h.m22())),
          checked_add(checked_mul(g.m21(), h.m11()), checked_mul(g.m22(), h.m21())),
          checked_add(checked_mul(g.m21(), h.m12()), checked_mul(g.m22(), h.m22()))};
}

GroupElement word_to_matrix(const MonodromyWord& word) {
  GroupElement acc = GroupElement::identity();
  for (Generator letter : word.letters()) acc = compose(acc, generator(letter));
  return acc;
}

bool is_identity(const GroupElement& g) { return g == GroupElement::identity(); }

}  // namespace negsphere
