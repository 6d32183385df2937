#include <doctest.h>

#include <sstream>
#include <vector>

#include "circdom/error.hpp"
#include "circdom/graph.hpp"
#include "circdom/rng.hpp"

using namespace circdom;

namespace {

// Reachability by explicit step enumeration, one vertex at a time.
VertexSet naive_coverage(u64 n, const std::vector<u64>& S, const VertexSet& D, unsigned r) {
  std::vector<bool> reach(n, false);
  D.for_each([&](u64 v) { reach[v] = true; });
  for (unsigned step = 0; step < r; ++step) {
    std::vector<bool> next = reach;
    for (u64 v = 0; v < n; ++v)
      if (reach[v])
        for (u64 s : S) next[(v + s) % n] = true;
    reach = std::move(next);
  }
  VertexSet out(n);
  for (u64 v = 0; v < n; ++v)
    if (reach[v]) out.insert(v);
  return out;
}

VertexSet random_subset(u64 n, Rng& rng, u64 per_mille) {
  VertexSet s(n);
  for (u64 v = 0; v < n; ++v)
    if (rng.below(1000) < per_mille) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s(130);
  CHECK(s.empty());
  CHECK(s.insert(0));
  CHECK(s.insert(129));
  CHECK_FALSE(s.insert(129));
  CHECK(s.size() == 2);
  CHECK(s.complement().size() == 128);
  CHECK(VertexSet::full(130).is_full());
  CHECK(VertexSet::full(130).complement().empty());
  CHECK(s.erase(0));
  CHECK(s.members() == std::vector<u64>{129});
}

TEST_CASE("or_rotated matches elementwise rotation") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const u64 n = 1 + rng.below(700);
    const VertexSet src = random_subset(n, rng, 300);
    VertexSet dst = random_subset(n, rng, 100);
    VertexSet expect = dst;
    const u64 shift = rng.below(2 * n);
    src.for_each([&](u64 v) { expect.insert((v + shift) % n); });
    dst.or_rotated(src, shift);
    CHECK(dst == expect);
    CHECK(dst.size() == expect.size());
  }
}

TEST_CASE("symmetrize") {
  const ChordSet one = symmetrize(std::vector<u64>{1}, 9);
  CHECK(std::vector<u64>(one.begin(), one.end()) == std::vector<u64>{1, 8});
  const ChordSet fixed = symmetrize(std::vector<u64>{5}, 10);
  CHECK(fixed.size() == 1);
  CHECK(fixed.symmetric());
  const ChordSet s = symmetrize(std::vector<u64>{2, 3}, 10);
  CHECK(std::vector<u64>(s.begin(), s.end()) == std::vector<u64>{2, 3, 7, 8});
  CHECK(s.symmetric());
  CHECK_THROWS_AS(symmetrize(std::vector<u64>{10}, 10), Error);
  CHECK_FALSE(ChordSet({1, 2}, 10).symmetric());
}

TEST_CASE("ChordSet validation") {
  try {
    ChordSet({0, 1}, 5);
    FAIL("expected InvalidChord");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidChord);
  }
  CHECK_THROWS_AS(ChordSet({5}, 5), Error);
  CHECK_THROWS_AS(CirculantSpec(5, ChordSet({}, 5)), Error);
}

TEST_CASE("coverage examples") {
  const CirculantSpec c4(4, ChordSet({1}, 4));
  CHECK(coverage(c4, VertexSet::full(4), 1).is_full());
  CHECK(coverage(c4, VertexSet::from(4, std::vector<u64>{0, 2}), 1).is_full());
  const CirculantSpec c5(5, ChordSet({1}, 5));
  CHECK(coverage(c5, VertexSet::from(5, std::vector<u64>{0}), 2).members() == std::vector<u64>{0, 1, 2});
}

TEST_CASE("coverage properties on random instances") {
  Rng rng(8);
  for (int i = 0; i < 150; ++i) {
    const u64 n = 2 + rng.below(300);
    const u64 k = 1 + rng.below(std::min<u64>(n - 1, 6));
    const CirculantSpec spec(n, random_chords(n, k, rng));
    const std::vector<u64> S(spec.chords.begin(), spec.chords.end());
    const VertexSet D = random_subset(n, rng, 20);
    VertexSet bigger = D;
    bigger |= random_subset(n, rng, 20);
    const unsigned r = 1 + static_cast<unsigned>(rng.below(3));

    const VertexSet cov = coverage(spec, D, r);
    CHECK(cov == naive_coverage(n, S, D, r));
    CHECK(coverage(spec, bigger, r).includes(cov));
    CHECK(coverage(spec, D, r + 1).includes(cov));
    CHECK(coverage(spec, D, r + 1) == coverage(spec, cov, 1));
  }
}

TEST_CASE("symmetric chords cover the same in both directions") {
  Rng rng(12);
  for (int i = 0; i < 60; ++i) {
    const u64 n = 3 + rng.below(400);
    const ChordSet S = random_symmetric_chords(n, 1 + rng.below(std::min<u64>(n - 1, 8)), rng);
    REQUIRE(S.symmetric());
    const CirculantSpec plus(n, S), minus(n, S.negated());
    const VertexSet D = random_subset(n, rng, 30);
    CHECK(coverage(plus, D, 1) == coverage(minus, D, 1));
  }
}

TEST_CASE("random chord sets are distinct, in range and reproducible") {
  Rng a(77), b(77);
  const ChordSet s1 = random_chords(1000, 100, a), s2 = random_chords(1000, 100, b);
  CHECK(s1.size() == 100);
  CHECK(std::vector<u64>(s1.begin(), s1.end()) == std::vector<u64>(s2.begin(), s2.end()));
  Rng c(1);
  CHECK(random_chords(10, 9, c).size() == 9);
}

TEST_CASE("chord file parsing") {
  const ChordSet c = read_chord_file(std::filesystem::path(CIRCDOM_TEST_DATA) / "cycle9.txt", 9);
  CHECK(std::vector<u64>(c.begin(), c.end()) == std::vector<u64>{1, 8});

  try {
    read_chord_file(std::filesystem::path(CIRCDOM_TEST_DATA) / "duplicate.txt", 9);
    FAIL("expected a duplicate error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  std::istringstream bad("1\nx2\n");
  try {
    read_chord_file(bad, 9);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream out_of_range("3\n9\n");
  CHECK_THROWS_AS(read_chord_file(out_of_range, 9), Error);
}
