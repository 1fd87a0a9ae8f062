#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pathpart/fingroup.hpp"
#include "pathpart/words.hpp"

using namespace pathpart;

namespace {

std::vector<FinGroup> groups3() {
  return {make_builtin("Z2"), make_builtin("Z3"), make_builtin("V4")};
}

FPWord random_word(std::mt19937& rng, const std::vector<FinGroup>& gs,
                   int max_len) {
  int len = static_cast<int>(rng() % (max_len + 1));
  FPWord w;
  for (int i = 0; i < len; ++i) {
    int v = static_cast<int>(rng() % gs.size());
    int e = 1 + static_cast<int>(rng() % (gs[v].order() - 1));
    w.push_back({v, e});
  }
  return w;
}

}  // namespace

TEST_CASE("reduce basics") {
  auto gs = groups3();
  Decoration dec = [&gs](int v) -> const FinGroup& { return gs[v]; };
  // Same-vertex collapse through the group table.
  CHECK(reduce({{0, 1}, {0, 1}}, dec).empty());
  CHECK(reduce({{1, 1}, {1, 1}}, dec) == FPWord{{1, 2}});
  CHECK(reduce({{0, 1}, {1, 1}, {1, 2}, {0, 1}}, dec).empty());
  // Cascading collapse.
  CHECK(reduce({{0, 1}, {1, 1}, {1, 2}, {2, 3}}, dec) ==
        FPWord{{0, 1}, {2, 3}});
  CHECK(is_reduced(reduce({{0, 1}, {1, 1}, {1, 1}, {0, 1}}, dec)));
  // Out-of-range letters rejected.
  CHECK_THROWS_AS(reduce({{0, 2}}, dec), std::invalid_argument);
  CHECK_THROWS_AS(reduce({{1, 0}}, dec), std::invalid_argument);
}

TEST_CASE("reduce properties on seeded random words") {
  auto gs = groups3();
  Decoration dec = [&gs](int v) -> const FinGroup& { return gs[v]; };
  std::mt19937 rng(42);
  for (int iter = 0; iter < 2000; ++iter) {
    FPWord w = random_word(rng, gs, 10);
    FPWord r = reduce(w, dec);
    CHECK(is_reduced(r));
    CHECK(reduce(r, dec) == r);
    CHECK(invert(invert(w, dec), dec) == w);
    FPWord cat = w;
    FPWord inv = invert(w, dec);
    cat.insert(cat.end(), inv.begin(), inv.end());
    CHECK(reduce(cat, dec).empty());
  }
}

TEST_CASE("cyclic reducedness shortcut matches rotation enumeration") {
  auto gs = groups3();
  std::vector<Letter> alphabet;
  for (int v = 0; v < 2; ++v)
    for (int e = 1; e < gs[v].order(); ++e) alphabet.push_back({v, e});
  FPWord w;
  long long checked = 0;
  auto rec = [&](auto&& self) -> void {
    bool literal = true;
    for (std::size_t s = 0; s < std::max<std::size_t>(w.size(), 1); ++s) {
      FPWord rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      if (!is_reduced(rot)) literal = false;
    }
    REQUIRE(is_cyclically_reduced(w) == literal);
    ++checked;
    if (w.size() == 6) return;
    for (const Letter& l : alphabet) {
      w.push_back(l);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  CHECK(checked > 1000);
}

TEST_CASE("powers of a cyclically reduced word grow linearly") {
  auto gs = groups3();
  Decoration dec = [&gs](int v) -> const FinGroup& { return gs[v]; };
  for (const FPWord& u :
       {FPWord{{0, 1}, {1, 1}}, FPWord{{1, 2}, {2, 3}},
        FPWord{{0, 1}, {1, 1}, {2, 2}}}) {
    REQUIRE(is_cyclically_reduced(u));
    for (int n = 1; n <= 5; ++n) {
      FPWord p;
      for (int i = 0; i < n; ++i) p.insert(p.end(), u.begin(), u.end());
      CHECK(reduce(p, dec).size() == n * u.size());
    }
  }
}

TEST_CASE("CRWord validation") {
  CHECK_NOTHROW(CRWord(FPWord{{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(CRWord(FPWord{{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CRWord(FPWord{{0, 1}, {1, 1}, {0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CRWord(FPWord{{0, 0}}), std::invalid_argument);
  CHECK(CRWord{}.empty());
}

TEST_CASE("word parsing") {
  auto lookup = [](const std::string& name) {
    if (name == "a") return 0;
    if (name == "b") return 1;
    throw std::invalid_argument("unknown vertex: " + name);
  };
  FPWord w = parse_word("a b.2 a.1", lookup);
  CHECK(w == FPWord{{0, 1}, {1, 2}, {0, 1}});
  CHECK_THROWS_AS(parse_word("a b.x", lookup), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("c", lookup), std::invalid_argument);
  CHECK(word_str(FPWord{{0, 1}}) == "(v0.1)");
  CHECK(word_str({}) == "()");
}

TEST_CASE("support") {
  CHECK(support({{2, 1}, {0, 1}, {2, 2}}) == std::vector<int>{0, 2});
  CHECK(support({}).empty());
}
