#pragma once

// Circulant graphs C_n(S). A vertex u covers itself and u + S; the chord
// direction is +S throughout. Replace S by n - S for the i - j in S edge
// orientation; for symmetric S the two agree.

#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "circdom/arith.hpp"
#include "circdom/rng.hpp"
#include "circdom/vertex_set.hpp"

namespace circdom {

class ChordSet {
 public:
  ChordSet() = default;

  /// Sorts and merges duplicates. Throws Error{InvalidChord} for a value that
  /// is 0 or >= n.
  ChordSet(std::vector<u64> chords, u64 n);

  u64 modulus() const noexcept { return n_; }
  std::size_t size() const noexcept { return chords_.size(); }
  bool empty() const noexcept { return chords_.empty(); }
  bool symmetric() const noexcept { return symmetric_; }
  bool contains(u64 s) const noexcept;

  std::span<const u64> values() const noexcept { return chords_; }
  auto begin() const noexcept { return chords_.begin(); }
  auto end() const noexcept { return chords_.end(); }

  /// n - S.
  ChordSet negated() const;

 private:
  u64 n_ = 0;
  std::vector<u64> chords_;
  bool symmetric_ = false;
};

struct CirculantSpec {
  /// Throws Error{InvalidArgument} if n < 2, the chord set is empty, or was
  /// built for a different modulus.
  CirculantSpec(u64 n, ChordSet chords);

  u64 n;
  ChordSet chords;

  std::size_t k() const noexcept { return chords.size(); }
};

/// T ∪ (n - T). Throws Error{InvalidChord} for t ≡ 0 (mod n).
ChordSet symmetrize(std::span<const u64> T, u64 n);

/// Vertices reachable from D in at most r steps along +S, D included.
VertexSet coverage(const CirculantSpec& spec, const VertexSet& D, unsigned r);

/// k distinct chords drawn uniformly from [1, n-1].
ChordSet random_chords(u64 n, u64 k, Rng& rng);

/// Symmetric chord set from ceil(k/2) distinct draws in [1, n/2].
ChordSet random_symmetric_chords(u64 n, u64 k, Rng& rng);

/// Chord file: one decimal residue per line, '#' lines and blank lines
/// ignored. Duplicates and malformed lines throw Error{ParseError} naming the
/// line number.
ChordSet read_chord_file(std::istream& in, u64 n);
ChordSet read_chord_file(const std::filesystem::path& path, u64 n);

}  // namespace circdom
