#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "circdom/arith.hpp"

namespace circdom {

/// Subset of Z_n stored as a bit array. Bits at positions >= n are always 0.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(u64 n) : n_(n), words_((n + 63) / 64, 0) {}

  static VertexSet full(u64 n);
  static VertexSet from(u64 n, std::span<const u64> members);

  u64 universe() const noexcept { return n_; }
  u64 size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_full() const noexcept { return count_ == n_; }

  bool contains(u64 v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }

  /// Returns true when v was newly inserted.
  bool insert(u64 v) noexcept {
    u64& w = words_[v >> 6];
    const u64 bit = u64{1} << (v & 63);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  /// Sets v without updating size(); call recount() after a run of marks.
  void mark(u64 v) noexcept { words_[v >> 6] |= u64{1} << (v & 63); }
  void recount() noexcept;

  bool erase(u64 v) noexcept {
    u64& w = words_[v >> 6];
    const u64 bit = u64{1} << (v & 63);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  /// this |= (other + shift) mod n, word-parallel.
  void or_rotated(const VertexSet& other, u64 shift);
  VertexSet& operator|=(const VertexSet& other);

  VertexSet complement() const;
  std::vector<u64> members() const;

  /// Calls f(v) for each member in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      u64 w = words_[i];
      while (w) {
        f(static_cast<u64>(i * 64 + static_cast<unsigned>(__builtin_ctzll(w))));
        w &= w - 1;
      }
    }
  }

  std::span<const u64> words() const noexcept { return words_; }

  bool operator==(const VertexSet& other) const noexcept {
    return n_ == other.n_ && words_ == other.words_;
  }

  /// Superset test; both sets must share the same universe.
  bool includes(const VertexSet& other) const noexcept;

 private:
  u64 n_ = 0;
  u64 count_ = 0;
  std::vector<u64> words_;
};

}  // namespace circdom
