#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "reference.h"
#include "ryuo/error.h"
#include "ryuo/move_set.h"
#include "ryuo/moves.h"
#include "ryuo/region.h"
#include "ryuo/rules.h"

namespace ryuo {
namespace {

std::vector<Position> Sorted(std::vector<Position> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Every two-dimensional parameterization with p, q, r <= 6.
std::vector<RuleSet> AllTwoDimRules() {
  std::vector<RuleSet> out;
  for (Coord p = 1; p <= 6; ++p) {
    out.push_back(RuleSet::GeneralizedRyuo(p));
    out.push_back(RuleSet::NDim(p, 2));
    for (Coord q = 2; q <= 6; ++q) {
      out.push_back(RuleSet::RestrictedSide(p, q));
      out.push_back(RuleSet::RestrictedSide(p, q, SideReading::kLiteral));
      for (Coord r = 2; r <= 6; ++r) out.push_back(RuleSet::RestrictedHV(p, q, r));
    }
  }
  return out;
}

std::vector<RuleSet> ThreeDimRules() {
  std::vector<RuleSet> out{RuleSet::ThreeDim(), RuleSet::ModifiedThreeDim()};
  for (Coord p = 1; p <= 6; ++p) out.push_back(RuleSet::NDim(p, 3));
  return out;
}

void CheckShrinks(const RuleSet& rules, const Position& pos) {
  for (const Position& option : LegalMoves(rules, pos)) {
    REQUIRE(option.dimension() == pos.dimension());
    for (std::size_t i = 0; i < pos.dimension(); ++i) {
      CHECK(option[i] <= pos[i]);
    }
    CHECK(option.Sum() < pos.Sum());
  }
}

TEST_CASE("generalized ryuo p=3 options of (17,19)") {
  const auto moves = LegalMoves(RuleSet::GeneralizedRyuo(3), {17, 19});
  CHECK(moves.size() == 37);
  std::set<Position> expected;
  for (Coord u = 0; u < 17; ++u) expected.insert({u, 19});
  for (Coord v = 0; v < 19; ++v) expected.insert({17, v});
  expected.insert({16, 18});
  CHECK(std::set<Position>(moves.begin(), moves.end()) == expected);
  CHECK(std::is_sorted(moves.begin(), moves.end()));
}

TEST_CASE("terminal position has no options") {
  for (const RuleSet& rules : AllTwoDimRules()) {
    CHECK(LegalMoves(rules, {0, 0}).empty());
  }
  for (const RuleSet& rules : ThreeDimRules()) {
    CHECK(LegalMoves(rules, {0, 0, 0}).empty());
  }
}

TEST_CASE("generalized ryuo p=4 options of (2,3)") {
  const std::vector<Position> expected =
      Sorted({{0, 3}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {1, 1}});
  CHECK(LegalMoves(RuleSet::GeneralizedRyuo(4), {2, 3}) == expected);
}

TEST_CASE("3dim options of (1,1,1)") {
  const std::vector<Position> expected = Sorted({{0, 1, 1},
                                                 {1, 0, 1},
                                                 {1, 1, 0},
                                                 {0, 0, 1},
                                                 {0, 1, 0},
                                                 {1, 0, 0},
                                                 {0, 0, 0}});
  CHECK(LegalMoves(RuleSet::ThreeDim(), {1, 1, 1}) == expected);
  // Without the all-three move.
  auto modified = expected;
  std::erase(modified, Position{0, 0, 0});
  CHECK(LegalMoves(RuleSet::ModifiedThreeDim(), {1, 1, 1}) == modified);
}

TEST_CASE("restricted variants cap single-heap removals at q-1") {
  const auto side = LegalMoves(RuleSet::RestrictedSide(3, 4), {5, 0});
  CHECK(side == std::vector<Position>{{2, 0}, {3, 0}, {4, 0}});
  const auto hv = LegalMoves(RuleSet::RestrictedHV(3, 3, 6), {4, 7});
  CHECK(std::count_if(hv.begin(), hv.end(),
                      [](const Position& p) { return p[1] == 7; }) == 2);
  CHECK(std::count_if(hv.begin(), hv.end(),
                      [](const Position& p) { return p[0] == 4; }) == 5);
  CHECK(std::find(hv.begin(), hv.end(), Position{3, 6}) != hv.end());
  CHECK(hv.size() == 8);

  // The literal reading also allows q tokens from one heap and s+t = p.
  const auto literal = LegalMoves(
      RuleSet::RestrictedSide(2, 2, SideReading::kLiteral), {2, 0});
  CHECK(literal == std::vector<Position>{{0, 0}, {1, 0}});
}

TEST_CASE("ndim moves take at least one token from each chosen heap") {
  const auto moves = LegalMoves(RuleSet::NDim(4, 3), {1, 1, 1});
  // Single heap: 3. Two heaps, one each: 3. All three, one each: 1.
  CHECK(moves.size() == 7);
  CHECK(LegalMoves(RuleSet::NDim(3, 3), {1, 1, 1}) ==
        LegalMoves(RuleSet::ModifiedThreeDim(), {1, 1, 1}));
  // p=2 leaves only Nim moves.
  CHECK(LegalMoves(RuleSet::NDim(2, 4), {1, 1, 0, 2}).size() == 4);
}

TEST_CASE("pass variant options") {
  using V = std::vector<PassPosition>;
  CHECK(LegalMovesPass(3, {1, 1, true}) ==
        V{{0, 0, true}, {0, 1, true}, {1, 0, true}, {1, 1, false}});
  CHECK(LegalMovesPass(3, {0, 0, true}).empty());
  CHECK(LegalMovesPass(3, {0, 0, false}).empty());
  CHECK(LegalMovesPass(3, {2, 0, false}) == V{{0, 0, false}, {1, 0, false}});
}

TEST_CASE("pass flag never comes back") {
  for (Coord p = 1; p <= 5; ++p) {
    for (Coord x = 0; x <= 12; ++x) {
      for (Coord y = 0; y <= 12; ++y) {
        for (const PassPosition& o : LegalMovesPass(p, {x, y, false})) {
          CHECK_FALSE(o.pass);
        }
        const auto with_pass = LegalMovesPass(p, {x, y, true});
        const auto without = LegalMovesPass(p, {x, y, false});
        // Same ordinary moves, plus exactly one pass off the terminal.
        CHECK(with_pass.size() == without.size() + (x + y > 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("contract errors") {
  CHECK_THROWS_AS(LegalMoves(RuleSet::GeneralizedRyuo(3), {1, 2, 3}),
                  GameError);
  try {
    LegalMoves(RuleSet::ThreeDim(), {1, 2});
    FAIL("expected a dimension error");
  } catch (const GameError& e) {
    CHECK(e.kind() == ErrorKind::kContractViolation);
  }
  try {
    LegalMoves(RuleSet::PassRyuo(3), {1, 2});
    FAIL("expected a wrong-operation error");
  } catch (const GameError& e) {
    CHECK(e.kind() == ErrorKind::kWrongOperation);
  }
  CHECK_THROWS_AS(RuleSet::GeneralizedRyuo(0), GameError);
  CHECK_THROWS_AS(RuleSet::RestrictedSide(3, 1), GameError);
  CHECK_THROWS_AS(RuleSet::RestrictedHV(3, 2, 1), GameError);
  CHECK_THROWS_AS(RuleSet::NDim(3, 1), GameError);
  CHECK_THROWS_AS(Position(std::vector<Coord>{}), GameError);
}

TEST_CASE("options shrink: component-wise <= and smaller sum") {
  const Region square = Region::Cube(2, 19);
  for (const RuleSet& rules : AllTwoDimRules()) {
    for (std::size_t i = 0; i < square.cell_count(); ++i) {
      CheckShrinks(rules, square.PositionAt(i));
    }
  }
  const Region cube = Region::Cube(3, 9);
  for (const RuleSet& rules : ThreeDimRules()) {
    for (std::size_t i = 0; i < cube.cell_count(); ++i) {
      CheckShrinks(rules, cube.PositionAt(i));
    }
  }
}

TEST_CASE("generators agree with the rule-text reference") {
  const auto check = [](const RuleSet& rules, const Region& region) {
    for (std::size_t i = 0; i < region.cell_count(); ++i) {
      const Position pos = region.PositionAt(i);
      const reference::Coords from(pos.coords().begin(), pos.coords().end());
      std::set<reference::Coords> actual;
      for (const Position& o : LegalMoves(rules, pos)) {
        actual.emplace(o.coords().begin(), o.coords().end());
      }
      const auto expected = reference::Options(rules, from);
      CHECK_MESSAGE(actual == expected, rules.ToString(), " at ",
                    pos.ToString());
    }
  };
  for (const RuleSet& rules : AllTwoDimRules()) check(rules, Region::Cube(2, 9));
  for (const RuleSet& rules : ThreeDimRules()) check(rules, Region::Cube(3, 4));
  check(RuleSet::NDim(4, 4), Region::Cube(4, 3));
}

TEST_CASE("symmetric variants commute with swapping coordinates") {
  const Region square = Region::Cube(2, 19);
  for (const RuleSet& rules : AllTwoDimRules()) {
    if (!rules.IsSymmetric()) continue;
    for (std::size_t i = 0; i < square.cell_count(); ++i) {
      const Position pos = square.PositionAt(i);
      std::vector<Position> swapped;
      for (const Position& o : LegalMoves(rules, pos)) swapped.push_back({o[1], o[0]});
      CHECK(Sorted(swapped) == LegalMoves(rules, {pos[1], pos[0]}));
    }
  }
  CHECK_FALSE(RuleSet::RestrictedHV(3, 3, 6).IsSymmetric());
  CHECK(RuleSet::RestrictedHV(3, 4, 4).IsSymmetric());

  // 3-D: every permutation.
  const Region cube = Region::Cube(3, 6);
  for (const RuleSet& rules : ThreeDimRules()) {
    for (std::size_t i = 0; i < cube.cell_count(); ++i) {
      const Position pos = cube.PositionAt(i);
      std::array<std::size_t, 3> perm{0, 1, 2};
      do {
        const auto apply = [&](const Position& q) {
          return Position{q[perm[0]], q[perm[1]], q[perm[2]]};
        };
        std::vector<Position> permuted;
        for (const Position& o : LegalMoves(rules, pos)) permuted.push_back(apply(o));
        CHECK(Sorted(permuted) == LegalMoves(rules, apply(pos)));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("move sets of the reference pieces") {
  const MoveSet rook = MoveSet::Rook();
  CHECK(rook.Contains({5, 0}));
  CHECK(rook.Contains({0, 1000000}));
  CHECK_FALSE(rook.Contains({1, 1}));
  CHECK_FALSE(rook.Contains({0, 0}));
  CHECK(rook.ContainsRay({1, 0}));

  const MoveSet queen = MoveSet::Queen();
  CHECK(queen.Contains({7, 7}));
  CHECK_FALSE(queen.Contains({2, 1}));

  const MoveSet ryuo = MoveSet::ForRules(RuleSet::GeneralizedRyuo(4));
  CHECK(ryuo.Contains({2, 1}));
  CHECK(ryuo.Contains({1, 1}));
  CHECK_FALSE(ryuo.Contains({2, 2}));
  CHECK(ryuo.Contains({123456789, 0}));
  CHECK(ryuo.Materialize(2, 2) ==
        std::vector<Offset>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0},
                            {2, 1}});
}

TEST_CASE("move_set rejects variants that are not two-dimensional") {
  for (const RuleSet& rules : {RuleSet::ThreeDim(), RuleSet::ModifiedThreeDim(),
                               RuleSet::NDim(3, 4), RuleSet::PassRyuo(3)}) {
    try {
      MoveSet::ForRules(rules);
      FAIL("expected an unsupported-variant error");
    } catch (const GameError& e) {
      CHECK(e.kind() == ErrorKind::kUnsupportedVariant);
    }
  }
}

TEST_CASE("materialized move set regenerates legal moves") {
  const Region square = Region::Cube(2, 19);
  for (const RuleSet& rules : AllTwoDimRules()) {
    if (rules.reading() == SideReading::kLiteral) continue;
    const MoveSet m = MoveSet::ForRules(rules);
    for (std::size_t i = 0; i < square.cell_count(); ++i) {
      const Position pos = square.PositionAt(i);
      std::vector<Position> via_offsets;
      for (const Offset& o : m.Materialize(pos[0], pos[1])) {
        via_offsets.push_back({pos[0] - o.s, pos[1] - o.t});
      }
      const auto expected = LegalMoves(rules, pos);
      CHECK(Sorted(via_offsets) == expected);
      CHECK(m.Moves(pos[0], pos[1]) == expected);
    }
  }
}

TEST_CASE("necessary condition on move sets") {
  CHECK(SatisfiesNecessaryCondition(MoveSet::ForRules(RuleSet::GeneralizedRyuo(3)), 3));
  CHECK(SatisfiesNecessaryCondition(MoveSet::Queen(), 3));
  CHECK_FALSE(SatisfiesNecessaryCondition(MoveSet::Rook(), 3));
  CHECK(SatisfiesNecessaryCondition(MoveSet::Rook(), 2));
  CHECK(SatisfiesNecessaryCondition(MoveSet::Rook(), 1));

  const MoveSet ryuo5 = MoveSet::ForRules(RuleSet::GeneralizedRyuo(5));
  CHECK(SatisfiesNecessaryCondition(ryuo5, 5));
  CHECK(SatisfiesNecessaryCondition(ryuo5, 4));
  CHECK_FALSE(SatisfiesNecessaryCondition(ryuo5, 6));
  CHECK_FALSE(SatisfiesNecessaryCondition(ryuo5.Without({2, 1}), 5));
  // Removing a far ray step still breaks the unbounded ray.
  CHECK_FALSE(SatisfiesNecessaryCondition(ryuo5.Without({40, 0}), 5));
  // Putting the offset back restores it.
  MoveSet restored = ryuo5.Without({2, 1});
  restored.Add({2, 1});
  CHECK(SatisfiesNecessaryCondition(restored, 5));
  // Capped side moves are not rays.
  CHECK_FALSE(SatisfiesNecessaryCondition(
      MoveSet::ForRules(RuleSet::RestrictedSide(3, 4)), 3));
}

TEST_CASE("rule set names") {
  CHECK(RuleSet::GeneralizedRyuo(3).ToString() == "ryuo(p=3)");
  CHECK(RuleSet::RestrictedHV(3, 3, 6).ToString() == "restricted-hv(p=3,q=3,r=6)");
  CHECK(RuleSet::RestrictedSide(2, 2, SideReading::kLiteral).ToString() ==
        "restricted-side(p=2,q=2,literal)");
  CHECK(RuleSet::NDim(3, 4).ToString() == "ndim(p=3,n=4)");
  CHECK(ParseVariant("3dim-modified") == Variant::kModifiedThreeDim);
  CHECK_FALSE(ParseVariant("queen").has_value());
}

}  // namespace
}  // namespace ryuo
