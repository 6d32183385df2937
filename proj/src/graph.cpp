#include "circdom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>

#include "circdom/error.hpp"

namespace circdom {

ChordSet::ChordSet(std::vector<u64> chords, u64 n) : n_(n), chords_(std::move(chords)) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "chord set modulus must be >= 2");
  for (u64 s : chords_) {
    if (s == 0 || s >= n)
      throw Error(ErrorKind::InvalidChord,
                  "chord " + std::to_string(s) + " is not in [1, " + std::to_string(n - 1) + "]");
  }
  std::sort(chords_.begin(), chords_.end());
  chords_.erase(std::unique(chords_.begin(), chords_.end()), chords_.end());
  symmetric_ = std::all_of(chords_.begin(), chords_.end(),
                           [&](u64 s) { return contains(n_ - s); });
}

bool ChordSet::contains(u64 s) const noexcept {
  return std::binary_search(chords_.begin(), chords_.end(), s);
}

ChordSet ChordSet::negated() const {
  std::vector<u64> neg;
  neg.reserve(chords_.size());
  for (u64 s : chords_) neg.push_back(n_ - s);
  return ChordSet(std::move(neg), n_);
}

CirculantSpec::CirculantSpec(u64 n_, ChordSet chords_) : n(n_), chords(std::move(chords_)) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
  if (chords.empty()) throw Error(ErrorKind::InvalidArgument, "chord set must be nonempty");
  if (chords.modulus() != n)
    throw Error(ErrorKind::InvalidArgument, "chord set was built for a different modulus");
}

ChordSet symmetrize(std::span<const u64> T, u64 n) {
  std::vector<u64> out;
  out.reserve(2 * T.size());
  for (u64 t : T) {
    if (t % n == 0)
      throw Error(ErrorKind::InvalidChord, "chord " + std::to_string(t) + " is 0 mod n");
    const u64 r = t % n;
    out.push_back(r);
    out.push_back(n - r);
  }
  return ChordSet(std::move(out), n);
}

VertexSet coverage(const CirculantSpec& spec, const VertexSet& D, unsigned r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "coverage radius must be >= 1");
  if (D.universe() != spec.n) throw Error(ErrorKind::InvalidArgument, "vertex set universe != n");
  VertexSet covered = D;
  for (unsigned step = 0; step < r && !covered.is_full(); ++step) {
    VertexSet next = covered;
    for (u64 s : spec.chords) {
      next.or_rotated(covered, s);
      if (next.is_full()) break;
    }
    covered = std::move(next);
  }
  return covered;
}

namespace {

// Floyd's sampling of `count` distinct values from [lo, hi].
std::vector<u64> sample_distinct(u64 lo, u64 hi, u64 count, Rng& rng) {
  const u64 span = hi - lo + 1;
  if (count > span) throw Error(ErrorKind::InvalidArgument, "cannot sample that many distinct chords");
  VertexSet taken(span);
  std::vector<u64> out;
  out.reserve(count);
  for (u64 j = span - count; j < span; ++j) {
    const u64 t = rng.below(j + 1);
    const u64 pick = taken.contains(t) ? j : t;
    taken.insert(pick);
    out.push_back(lo + pick);
  }
  return out;
}

}  // namespace

ChordSet random_chords(u64 n, u64 k, Rng& rng) {
  if (n < 2 || k < 1 || k > n - 1)
    throw Error(ErrorKind::InvalidArgument, "random chords need 1 <= k <= n-1");
  return ChordSet(sample_distinct(1, n - 1, k, rng), n);
}

ChordSet random_symmetric_chords(u64 n, u64 k, Rng& rng) {
  if (n < 2 || k < 1 || k > n - 1)
    throw Error(ErrorKind::InvalidArgument, "random chords need 1 <= k <= n-1");
  const u64 half = n / 2;
  const u64 m = std::min<u64>((k + 1) / 2, half);
  const auto T = sample_distinct(1, half, m, rng);
  return symmetrize(T, n);
}

ChordSet read_chord_file(std::istream& in, u64 n) {
  std::vector<u64> chords;
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<u64, std::size_t>> entries;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    const std::string_view tok(line.data() + first, last - first + 1);
    u64 value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": not a decimal residue: '" + std::string(tok) + "'");
    if (value == 0 || value >= n)
      throw Error(ErrorKind::InvalidChord, "line " + std::to_string(lineno) + ": chord " +
                                               std::to_string(value) + " is not in [1, n-1]");
    entries.emplace_back(value, lineno);
  }
  std::vector<std::pair<u64, std::size_t>> sorted = entries;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(sorted[i].second) +
                                             ": duplicate chord " + std::to_string(sorted[i].first) +
                                             " (first seen on line " +
                                             std::to_string(sorted[i - 1].second) + ")");
  }
  chords.reserve(entries.size());
  for (const auto& e : entries) chords.push_back(e.first);
  if (chords.empty()) throw Error(ErrorKind::ParseError, "chord file contains no chords");
  return ChordSet(std::move(chords), n);
}

ChordSet read_chord_file(const std::filesystem::path& path, u64 n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open chord file " + path.string());
  return read_chord_file(in, n);
}

}  // namespace circdom
