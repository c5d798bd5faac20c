// Prints one [PASS]/[FAIL] line per acceptance criterion and exits non-zero
// if any fails. Every comparison is exact; only runtimes carry limits.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ryuo/ryuo.h"
#include "ryuo_tools/cli.h"

namespace ryuo {
namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_ms;  // 0 means no runtime limit
  std::function<Result()> run;
};

// Collects the first few failures with context.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
    ++failures_;
  }
  Result Finish(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(failures_) + " failure(s): " + detail_};
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

std::string MismatchCount(const VerificationReport& r) {
  return r.subject + " on " + r.region.ToString() + ": " +
         std::to_string(r.mismatches.size()) + " mismatches";
}

Result WorkedExample() {
  const RuleSet rules = RuleSet::GeneralizedRyuo(3);
  const Position pos{17, 19};
  const GrundyValue formula = GrundyClosedForm(rules, pos);
  const GrundyValue oracle = BuildGrundyTable(rules, Region::Enclosing(pos)).at(pos);
  Checker c;
  c.Expect(formula == 9, "closed form " + std::to_string(formula));
  c.Expect(oracle == 9, "oracle " + std::to_string(oracle));
  return c.Finish("G(17,19) = 9 by formula and by the 18x20 oracle");
}

Result MexFixtures() {
  const std::array<std::pair<std::vector<GrundyValue>, GrundyValue>, 4> cases = {{
      {{0, 1, 2, 3}, 4}, {{1, 1, 2, 3}, 0}, {{0, 2, 3, 5}, 1}, {{0, 0, 0, 1}, 2}}};
  Checker c;
  for (const auto& [set, want] : cases) {
    c.Expect(Mex(set) == want, "mex mismatch, want " + std::to_string(want));
  }
  return c.Finish("mex{0,1,2,3}=4, mex{1,1,2,3}=0, mex{0,2,3,5}=1, mex{0,0,0,1}=2");
}

Result MainTheorem() {
  Checker c;
  for (Coord p = 1; p <= 6; ++p) {
    const auto r = VerifyEquivalence(RuleSet::GeneralizedRyuo(p), Region::Cube(2, 59));
    c.Expect(r.ok() && r.positions_checked == 3600, MismatchCount(r));
  }
  return c.Finish("p=1..6 on 60x60: 0 mismatches");
}

Result NimSumRecurrence() {
  Checker c;
  for (Coord k = 0; k <= 32; ++k) {
    for (Coord h = 0; h <= 32; ++h) {
      std::vector<GrundyValue> options;
      for (Coord t = 1; t <= k; ++t) options.push_back((k - t) ^ h);
      for (Coord t = 1; t <= h; ++t) options.push_back(k ^ (h - t));
      c.Expect(Mex(options) == (k ^ h),
               "k=" + std::to_string(k) + " h=" + std::to_string(h));
    }
  }
  return c.Finish("k xor h = mex of one-heap reductions for k,h <= 32");
}

Result PassTheorem() {
  Checker c;
  for (Coord p = 3; p <= 5; ++p) {
    const auto r = VerifyPassTheorem(p, Region::Cube(2, 39));
    c.Expect(r.ok() && r.positions_checked == 3200, MismatchCount(r));
  }
  const PassOutcomeTable bi = OutcomeBackwardInduction(3, Region::Cube(2, 39));
  for (const PassPosition& pos : {PassPosition{2, 2, true}, PassPosition{5, 6, true},
                                  PassPosition{1, 3, true}, PassPosition{3, 1, true}}) {
    c.Expect(ClassifyPass(3, pos) == Outcome::kP && bi.at(pos) == Outcome::kP,
             pos.ToString() + " not P");
  }
  return c.Finish("p=3..5 on 40x40, both layers: 0 mismatches; "
                  "(2,2,true) (5,6,true) (1,3,true) (3,1,true) are P");
}

Result Restricted() {
  Checker c;
  const Region region = Region::Cube(2, 47);
  std::vector<RuleSet> theorems;
  for (const auto& [p, q] : std::vector<std::pair<Coord, Coord>>{
           {2, 4}, {3, 3}, {3, 6}, {4, 8}, {3, 4}, {3, 7}, {4, 5}}) {
    theorems.push_back(RuleSet::RestrictedSide(p, q));
  }
  theorems.push_back(RuleSet::RestrictedHV(3, 3, 6));
  theorems.push_back(RuleSet::RestrictedHV(2, 4, 2));
  theorems.push_back(RuleSet::RestrictedHV(3, 6, 3));
  for (const RuleSet& rules : theorems) {
    const auto r = VerifyEquivalence(rules, region);
    c.Expect(r.ok() && r.positions_checked == 2304, MismatchCount(r));
  }
  const RuleSet rs34 = RuleSet::RestrictedSide(3, 4);
  const Position special{4, 4};
  c.Expect(GrundyClosedForm(rs34, special) == 4 &&
               BuildGrundyTable(rs34, region).at(special) == 4,
           "G(4,4) != 4 for (p,q)=(3,4)");
  const auto literal = VerifyEquivalence(
      RuleSet::RestrictedSide(2, 2, SideReading::kLiteral), Region::Cube(2, 2));
  c.Expect(!literal.ok(), "literal reading showed no mismatch");
  return c.Finish("10 theorems on 48x48: 0 mismatches; G(4,4)=4 at (3,4); "
                  "literal (2,2) control: " +
                  std::to_string(literal.mismatches.size()) + " mismatches in 3x3");
}

Result NDimensional() {
  Checker c;
  const auto modified =
      VerifyEquivalence(RuleSet::ModifiedThreeDim(), Region::Cube(3, 19));
  c.Expect(modified.ok(), MismatchCount(modified));
  const auto three = VerifyThreeDimPPositions(Region::Cube(3, 19));
  c.Expect(three.ok(), MismatchCount(three));
  for (Coord p : {2, 3}) {
    const auto r = VerifyEquivalence(RuleSet::NDim(p, 4), Region::Cube(4, 9));
    c.Expect(r.ok() && r.positions_checked == 10000, MismatchCount(r));
  }
  const auto agree = VerifyOracleAgreement(
      RuleSet::NDim(3, 3), RuleSet::ModifiedThreeDim(), Region::Cube(3, 14));
  c.Expect(agree.ok(), MismatchCount(agree));
  return c.Finish("3dim-modified and 3dim P-theorem on 20^3, ndim (2,4) (3,4) on "
                  "10^4, ndim(3,3) = 3dim-modified on 15^3: 0 mismatches");
}

Result NecessaryCondition() {
  Checker c;
  int witnesses = 0;
  for (Coord p = 3; p <= 5; ++p) {
    std::vector<Offset> required = {{1, 0}, {0, 1}};
    for (Coord s = 1; s < p; ++s) {
      for (Coord t = 1; s + t < p; ++t) required.push_back({s, t});
    }
    for (const Offset& dropped : required) {
      const std::string label = "p=" + std::to_string(p) + " drop " + dropped.ToString();
      try {
        const Witness w = NecessaryConditionWitness(p, dropped);
        const bool in_window = w.position[0] <= p + 1 && w.position[1] <= p + 1;
        const MoveSet reduced = MoveSet::ForRules(RuleSet::GeneralizedRyuo(p)).Without(dropped);
        const bool real = GrundyCustomMoveSet(reduced, w.position) == w.oracle &&
                          CongruenceNimFormula(p, w.position.coords()) == w.formula &&
                          w.oracle != w.formula;
        c.Expect(in_window && real, label + " bad witness " + w.position.ToString());
        ++witnesses;
      } catch (const GameError& e) {
        c.Expect(false, label + ": " + e.what());
      }
    }
  }
  return c.Finish(std::to_string(witnesses) +
                  " dropped offsets for p=3..5, each with a witness in the "
                  "(p+2)x(p+2) window");
}

Result StrategySoundness() {
  Checker c;
  std::uint64_t n_positions = 0;
  auto check_region = [&](const RuleSet& rules, const Region& region) {
    const GrundyTable table = BuildGrundyTable(rules, region);
    for (std::size_t i = 0; i < region.cell_count(); ++i) {
      if (table.at_index(i) == 0) continue;
      const Position pos = region.PositionAt(i);
      const auto move = EngineMove(rules, pos);
      ++n_positions;
      c.Expect(move.winning && table.at(move.target) == 0,
               rules.ToString() + " " + pos.ToString() + " -> " + move.target.ToString());
    }
  };
  for (Coord p = 1; p <= 6; ++p) {
    check_region(RuleSet::GeneralizedRyuo(p), Region::Cube(2, 59));
  }
  for (const auto& [p, q] : std::vector<std::pair<Coord, Coord>>{
           {2, 4}, {3, 3}, {3, 6}, {4, 8}, {3, 4}, {3, 7}, {4, 5}}) {
    check_region(RuleSet::RestrictedSide(p, q), Region::Cube(2, 47));
  }
  check_region(RuleSet::RestrictedHV(3, 3, 6), Region::Cube(2, 47));
  check_region(RuleSet::RestrictedHV(2, 4, 2), Region::Cube(2, 47));
  check_region(RuleSet::RestrictedHV(3, 6, 3), Region::Cube(2, 47));
  check_region(RuleSet::ThreeDim(), Region::Cube(3, 19));
  check_region(RuleSet::ModifiedThreeDim(), Region::Cube(3, 19));
  check_region(RuleSet::NDim(2, 4), Region::Cube(4, 9));
  check_region(RuleSet::NDim(3, 4), Region::Cube(4, 9));

  for (Coord p = 3; p <= 5; ++p) {
    const RuleSet rules = RuleSet::PassRyuo(p);
    const Region region = Region::Cube(2, 39);
    const PassOutcomeTable truth = OutcomeBackwardInduction(p, region);
    for (std::size_t i = 0; i < region.cell_count(); ++i) {
      const Position cell = region.PositionAt(i);
      for (bool pass : {false, true}) {
        const PassPosition pos{cell[0], cell[1], pass};
        if (truth.at(pos) == Outcome::kP) continue;
        const auto move = EngineMove(rules, pos);
        ++n_positions;
        c.Expect(move.winning && truth.at(move.target) == Outcome::kP,
                 rules.ToString() + " " + pos.ToString());
      }
    }
  }
  c.Expect(n_positions >= 10000, "only " + std::to_string(n_positions) + " N-positions");

  // From (30,30) the engine takes the winning side against an opponent that
  // removes as little as possible; the engine must make the last move.
  std::size_t longest = 0;
  auto play = [&](const RuleSet& rules, auto start, auto slowest) {
    auto pos = start;
    bool engine_to_move = GetOutcome(rules, pos) == Outcome::kN;
    bool engine_moved_last = false;
    std::size_t moves = 0;
    while (!pos.IsTerminal() && moves <= 61) {
      pos = engine_to_move ? EngineMove(rules, pos).target : slowest(pos);
      engine_moved_last = engine_to_move;
      engine_to_move = !engine_to_move;
      ++moves;
    }
    c.Expect(moves <= 61 && engine_moved_last,
             rules.ToString() + " from " + start.ToString() + ": " +
                 std::to_string(moves) + " moves");
    longest = std::max(longest, moves);
  };
  auto sum = [](const Position& pos) { return pos.Sum(); };
  for (Coord p = 1; p <= 6; ++p) {
    const RuleSet rules = RuleSet::GeneralizedRyuo(p);
    play(rules, Position{30, 30}, [&](const Position& pos) {
      const auto options = LegalMoves(rules, pos);
      return *std::max_element(options.begin(), options.end(),
                               [&](const Position& a, const Position& b) {
                                 return sum(a) < sum(b);
                               });
    });
  }
  for (Coord p = 3; p <= 5; ++p) {
    const RuleSet rules = RuleSet::PassRyuo(p);
    play(rules, PassPosition{30, 30, true}, [&](const PassPosition& pos) {
      const auto options = LegalMovesPass(p, pos);
      return *std::max_element(options.begin(), options.end(),
                               [](const PassPosition& a, const PassPosition& b) {
                                 return a.x + a.y + a.pass < b.x + b.y + b.pass;
                               });
    });
  }
  return c.Finish("engine move reaches P from all " + std::to_string(n_positions) +
                  " in-region N-positions; from (30,30) the engine beats a slowest-removal opponent within " +
                  std::to_string(longest) + " moves");
}

Result CliDeterminism() {
  auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o, e;
    const int code = tools::RunCli(args, o, e);
    out = o.str();
    return code;
  };
  const std::vector<std::string> table = {"table", "--game", "ryuo", "--p", "3",
                                          "--max", "12", "--format", "csv"};
  std::string first, second, report;
  Checker c;
  c.Expect(run(table, first) == 0 && run(table, second) == 0, "table failed");
  c.Expect(!first.empty() && first == second, "table output differs");
  const int verify = run({"verify", "--suite", "all"}, report);
  c.Expect(verify == 0, "verify --suite all exited " + std::to_string(verify));
  return c.Finish("table (ryuo, p=3, max=12) byte-identical twice (" +
                  std::to_string(first.size()) + " bytes); verify --suite all exits 0");
}

}  // namespace
}  // namespace ryuo

int main() {
  using ryuo::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "worked example", 10, ryuo::WorkedExample},
      {2, "mex fixtures", 0, ryuo::MexFixtures},
      {3, "main theorem sweep", 5000, ryuo::MainTheorem},
      {4, "nim-sum mex recurrence", 0, ryuo::NimSumRecurrence},
      {5, "pass theorem sweep", 5000, ryuo::PassTheorem},
      {6, "restricted variants", 0, ryuo::Restricted},
      {7, "n-dimensional", 30000, ryuo::NDimensional},
      {8, "necessary condition", 0, ryuo::NecessaryCondition},
      {9, "strategy soundness", 0, ryuo::StrategySoundness},
      {10, "cli determinism", 0, ryuo::CliDeterminism},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    ryuo::Result result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::string timing = std::to_string(ms);
    timing = timing.substr(0, timing.find('.') + 2) + " ms";
    if (criterion.limit_ms > 0) {
      timing += ms < criterion.limit_ms ? " < " : " >= ";
      timing += std::to_string(static_cast<int>(criterion.limit_ms)) + " ms";
      if (ms >= criterion.limit_ms) {
        result.pass = false;
        result.detail += " (too slow)";
      }
    }
    if (!result.pass) ++failed;
    std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << criterion.id << ": "
              << criterion.title << ": " << result.detail << " [" << timing
              << "]\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
