#include "circdom/vertex_set.hpp"

#include <algorithm>
#include <bit>

#include "circdom/error.hpp"

namespace circdom {
namespace {

// Up to 64 bits of `src` starting at bit `pos`; bits beyond the array read 0.
inline u64 read_bits(std::span<const u64> src, u64 pos, unsigned cnt) noexcept {
  const u64 w = pos >> 6;
  const unsigned sh = pos & 63;
  u64 v = src[w] >> sh;
  if (sh != 0 && w + 1 < src.size()) v |= src[w + 1] << (64 - sh);
  if (cnt < 64) v &= (u64{1} << cnt) - 1;
  return v;
}

inline void or_bits(std::vector<u64>& dst, u64 pos, u64 v, unsigned cnt) noexcept {
  const u64 w = pos >> 6;
  const unsigned sh = pos & 63;
  dst[w] |= v << sh;
  if (sh != 0 && cnt > 64 - sh) dst[w + 1] |= v >> (64 - sh);
}

// dst[dst_pos, dst_pos+len) |= src[src_pos, src_pos+len)
void or_range(std::vector<u64>& dst, u64 dst_pos, std::span<const u64> src, u64 src_pos,
              u64 len) noexcept {
  while (len > 0) {
    const unsigned cnt = static_cast<unsigned>(std::min<u64>(len, 64));
    or_bits(dst, dst_pos, read_bits(src, src_pos, cnt), cnt);
    dst_pos += cnt;
    src_pos += cnt;
    len -= cnt;
  }
}

}  // namespace

VertexSet VertexSet::full(u64 n) {
  VertexSet s(n);
  std::fill(s.words_.begin(), s.words_.end(), ~u64{0});
  if (n % 64 != 0) s.words_.back() = (u64{1} << (n % 64)) - 1;
  s.count_ = n;
  return s;
}

VertexSet VertexSet::from(u64 n, std::span<const u64> members) {
  VertexSet s(n);
  for (u64 v : members) {
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
    s.insert(v);
  }
  return s;
}

void VertexSet::or_rotated(const VertexSet& other, u64 shift) {
  shift %= n_;
  // Bits [0, n-shift) land at [shift, n); bits [n-shift, n) wrap to [0, shift).
  or_range(words_, shift, other.words_, 0, n_ - shift);
  if (shift != 0) or_range(words_, 0, other.words_, n_ - shift, shift);
  recount();
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  out.count_ = n_ - count_;
  return out;
}

std::vector<u64> VertexSet::members() const {
  std::vector<u64> out;
  out.reserve(count_);
  for_each([&](u64 v) { out.push_back(v); });
  return out;
}

bool VertexSet::includes(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (other.words_[i] & ~words_[i]) return false;
  return true;
}

void VertexSet::recount() noexcept {
  u64 c = 0;
  for (u64 w : words_) c += static_cast<u64>(std::popcount(w));
  count_ = c;
}

}  // namespace circdom
