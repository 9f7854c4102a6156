#include <gtest/gtest.h>

#include "support.hpp"

using namespace baire;
using namespace baire::testing;

namespace {

SetExpr random_expr(Rng& rng, int depth) {
  if (depth == 0 || rng() % 4 == 0) return SetExpr::make_atom(static_cast<AtomKind>(rng() % 5));
  const Op unary[] = {Op::Compl, Op::UnionCtbl, Op::InterCtbl, Op::Preimg, Op::Proj};
  if (rng() % 3 == 0) {
    const Op op = rng() % 2 ? Op::Union : Op::Inter;
    return SetExpr::binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
  return SetExpr::unary(unary[rng() % 5], random_expr(rng, depth - 1));
}

std::vector<Pointclass> small_classes() {
  std::vector<Pointclass> out;
  for (unsigned n = 1; n <= 4; ++n) {
    for (Family f : {Family::Borel, Family::Projective}) {
      for (Level l : {Level::Sigma, Level::Pi, Level::Delta}) out.push_back({f, l, n});
    }
  }
  return out;
}

// Delta(n) < Sigma(n), Pi(n) < Delta(n+1); projective classes sit above every Borel one.
bool leq_oracle(const Pointclass& a, const Pointclass& b) {
  auto rank = [](const Pointclass& c) {
    const long base = c.family == Family::Projective ? 1000000 : 0;
    return base + 3L * c.n + (c.level == Level::Delta ? 0 : 1);
  };
  if (a == b) return true;
  if (rank(a) == rank(b)) return false;
  return rank(a) < rank(b);
}

}  // namespace

TEST(Pointclass, ParseExamples) {
  const auto e = parse_expr("Ic(Uc(open))");
  EXPECT_EQ(e, SetExpr::unary(Op::InterCtbl, SetExpr::unary(Op::UnionCtbl, SetExpr::make_atom(AtomKind::Open))));
  EXPECT_EQ(parse_expr(" proj( inter(analytic, Ic(open)) ) ").str(), "proj(inter(analytic, Ic(open)))");
  try {
    parse_expr("Uc(");
    FAIL() << "expected a parse error";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.offset, 3u);
    EXPECT_FALSE(err.expected.empty());
  }
  EXPECT_THROW(parse_expr("union(open)"), ParseError);
  EXPECT_THROW(parse_expr("open closed"), ParseError);
  EXPECT_THROW(parse_expr("Xc(open)"), ParseError);
}

TEST(Pointclass, ClassifyExamples) {
  EXPECT_EQ(classify(parse_expr("Ic(Uc(open))")).result, Pointclass::pi0(2));
  EXPECT_EQ(classify(parse_expr("Uc(Ic(Uc(open)))")).result, Pointclass::sigma0(3));
  EXPECT_EQ(classify(parse_expr("proj(inter(analytic, Ic(open)))")).result, Pointclass::sigma1(1));
  EXPECT_EQ(classify(parse_expr("open")).result, Pointclass::sigma0(1));
  EXPECT_EQ(classify(parse_expr("closed")).result, Pointclass::pi0(1));
  EXPECT_EQ(classify(parse_expr("coanalytic")).result, Pointclass::pi1(1));
  EXPECT_EQ(classify(parse_expr("borel")).result, Pointclass::delta1(1));
  EXPECT_EQ(classify(parse_expr("compl(analytic)")).result, Pointclass::pi1(1));
}

TEST(Pointclass, DualExamples) {
  EXPECT_EQ(dual(Pointclass::sigma0(3)), Pointclass::pi0(3));
  EXPECT_EQ(dual(Pointclass::delta1(1)), Pointclass::delta1(1));
  EXPECT_EQ(classify(dual_expr(parse_expr("Ic(Uc(open))"))).result, Pointclass::sigma0(2));
}

TEST(Pointclass, DualityOnGeneratedCorpus) {
  Rng rng(61);
  for (int i = 0; i < 3000; ++i) {
    const auto e = random_expr(rng, 5);
    const auto c = classify(e);
    EXPECT_EQ(classify(dual_expr(e)).result, dual(c.result)) << e.str();
    EXPECT_EQ(dual(dual(c.result)), c.result);
    EXPECT_EQ(parse_expr(e.str()), e);
  }
}

TEST(Pointclass, TracesValidate) {
  Rng rng(62);
  for (int i = 0; i < 1000; ++i) {
    const auto e = random_expr(rng, 5);
    const auto c = classify(e);
    ASSERT_FALSE(c.trace.empty());
    EXPECT_EQ(c.trace.back().result, c.result);
    EXPECT_EQ(validate_trace(e, c.trace), std::nullopt) << e.str();
    auto bad = c.trace;
    bad.back().result = dual(c.result) == c.result ? Pointclass::sigma0(1) : dual(c.result);
    if (bad.back().result == c.result) bad.back().result = Pointclass::pi0(7);
    EXPECT_NE(validate_trace(e, bad), std::nullopt) << e.str();
  }
}

TEST(Pointclass, TraceRejectsUnknownRule) {
  const auto e = parse_expr("Uc(open)");
  auto c = classify(e);
  c.trace.back().rule = "no_such_rule";
  EXPECT_NE(validate_trace(e, c.trace), std::nullopt);
}

TEST(Pointclass, LeqMatchesOracle) {
  const auto cs = small_classes();
  for (const auto& a : cs) {
    for (const auto& b : cs) EXPECT_EQ(leq(a, b), leq_oracle(a, b)) << a.str() << " <= " << b.str();
  }
  EXPECT_TRUE(leq(Pointclass::sigma0(1), Pointclass::delta0(2)));
}

TEST(Pointclass, LeqIsPartialOrder) {
  const auto cs = small_classes();
  for (const auto& a : cs) {
    EXPECT_TRUE(leq(a, a));
    for (const auto& b : cs) {
      if (leq(a, b) && leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : cs) {
        if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
      }
    }
  }
}

TEST(Pointclass, JoinIsLeastUpperBound) {
  const auto cs = small_classes();
  for (const auto& a : cs) {
    for (const auto& b : cs) {
      const auto j = join(a, b);
      EXPECT_TRUE(leq(a, j) && leq(b, j));
      for (const auto& u : cs) {
        if (leq(a, u) && leq(b, u)) EXPECT_TRUE(leq(j, u)) << a.str() << " " << b.str() << " " << u.str();
      }
    }
  }
}

TEST(Pointclass, StringRoundTrip) {
  for (const auto& c : small_classes()) EXPECT_EQ(Pointclass::parse(c.str()), c);
  EXPECT_EQ(Pointclass::pi0(2).str(), "Pi0(2)");
  EXPECT_THROW(Pointclass::parse("Sigma2(1)"), std::invalid_argument);
}

TEST(Pointclass, RuleCatalogCoversTraces) {
  std::set<std::string> names;
  for (const auto& [name, text] : rule_catalog()) {
    names.insert(name);
    EXPECT_FALSE(text.empty());
  }
  Rng rng(63);
  for (int i = 0; i < 500; ++i) {
    for (const auto& step : classify(random_expr(rng, 5)).trace) EXPECT_TRUE(names.count(step.rule)) << step.rule;
  }
}
