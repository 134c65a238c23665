#include "dav/sequence.hpp"

#include <algorithm>

#include "dav/errors.hpp"

namespace dav {

namespace {

void check_len(std::size_t n) {
  if (n > Sequence::kMaxLen) fail(Err::LengthCap, "sequence length exceeds " + std::to_string(Sequence::kMaxLen));
}

}  // namespace

Sequence::Sequence(std::initializer_list<int> elems) {
  check_len(elems.size());
  for (int v : elems) e_[len_++] = static_cast<std::uint8_t>(v);
  std::sort(e_.begin(), e_.begin() + len_);
}

Sequence::Sequence(std::span<const std::uint8_t> elems) {
  check_len(elems.size());
  for (std::uint8_t v : elems) e_[len_++] = v;
  std::sort(e_.begin(), e_.begin() + len_);
}

Sequence::Sequence(const std::vector<int>& elems) {
  check_len(elems.size());
  for (int v : elems) e_[len_++] = static_cast<std::uint8_t>(v);
  std::sort(e_.begin(), e_.begin() + len_);
}

Sequence Sequence::single(int g) {
  Sequence s;
  s.e_[0] = static_cast<std::uint8_t>(g);
  s.len_ = 1;
  return s;
}

bool Sequence::contains(int g) const {
  return std::binary_search(e_.begin(), e_.begin() + len_, static_cast<std::uint8_t>(g));
}

int Sequence::multiplicity(int g) const {
  auto [lo, hi] = std::equal_range(e_.begin(), e_.begin() + len_, static_cast<std::uint8_t>(g));
  return static_cast<int>(hi - lo);
}

Sequence& Sequence::push(int g) {
  check_len(static_cast<std::size_t>(len_) + 1);
  auto pos = std::upper_bound(e_.begin(), e_.begin() + len_, static_cast<std::uint8_t>(g));
  std::copy_backward(pos, e_.begin() + len_, e_.begin() + len_ + 1);
  *pos = static_cast<std::uint8_t>(g);
  ++len_;
  return *this;
}

Sequence Sequence::without(int g) const {
  auto pos = std::lower_bound(e_.begin(), e_.begin() + len_, static_cast<std::uint8_t>(g));
  if (pos == e_.begin() + len_ || *pos != g) fail(Err::NotASubsequence, "element not present");
  Sequence out;
  out.len_ = static_cast<std::uint8_t>(len_ - 1);
  std::copy(e_.begin(), pos, out.e_.begin());
  std::copy(pos + 1, e_.begin() + len_, out.e_.begin() + (pos - e_.begin()));
  return out;
}

Sequence Sequence::replace_split(int g, int x, int y) const {
  Sequence out = without(g);
  out.push(x);
  out.push(y);
  return out;
}

std::string Sequence::str() const {
  std::string out = "[";
  for (int i = 0; i < len_; ++i) {
    if (i) out += ',';
    out += std::to_string(static_cast<int>(e_[static_cast<std::size_t>(i)]));
  }
  out += ']';
  return out;
}

bool operator<(const Sequence& a, const Sequence& b) {
  int n = std::min(a.len_, b.len_);
  for (int i = 0; i < n; ++i) {
    std::uint8_t x = a.e_[static_cast<std::size_t>(i)], y = b.e_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return a.len_ < b.len_;
}

Sequence concat(const Sequence& a, const Sequence& b) {
  if (a.length() + b.length() > Sequence::kMaxLen)
    fail(Err::LengthCap, "concat exceeds max sequence length");
  Sequence out;
  auto sa = a.elems(), sb = b.elems();
  std::size_t i = 0, j = 0, k = 0;
  std::array<std::uint8_t, Sequence::kMaxLen> merged{};
  while (i < sa.size() && j < sb.size()) merged[k++] = sa[i] <= sb[j] ? sa[i++] : sb[j++];
  while (i < sa.size()) merged[k++] = sa[i++];
  while (j < sb.size()) merged[k++] = sb[j++];
  return Sequence(std::span<const std::uint8_t>(merged.data(), k));
}

bool divides(const Sequence& t, const Sequence& s) {
  auto st = t.elems(), ss = s.elems();
  std::size_t j = 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    while (j < ss.size() && ss[j] < st[i]) ++j;
    if (j == ss.size() || ss[j] != st[i]) return false;
    ++j;
  }
  return true;
}

Sequence remove(const Sequence& s, const Sequence& t) {
  if (!divides(t, s)) fail(Err::NotASubsequence, "subsequence does not divide");
  auto ss = s.elems(), st = t.elems();
  std::array<std::uint8_t, Sequence::kMaxLen> out{};
  std::size_t j = 0, k = 0;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (j < st.size() && ss[i] == st[j]) {
      ++j;
      continue;
    }
    out[k++] = ss[i];
  }
  return Sequence(std::span<const std::uint8_t>(out.data(), k));
}

}  // namespace dav
