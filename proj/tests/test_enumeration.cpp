#include <gtest/gtest.h>

#include <set>

#include "nakayama/enumeration.hpp"
#include "nakayama/serialize.hpp"

using namespace nakayama;

namespace {

std::set<std::string> names(const std::vector<KupischSeries>& list) {
  std::set<std::string> out;
  for (const auto& k : list) out.insert(format(k));
  return out;
}

// Brute force over every tuple, deduplicated by canonical form.
std::set<std::vector<int>> all_cyclic_classes(int n, int cap) {
  std::set<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(n), 2);
  while (true) {
    try {
      const auto k = canonical_form(validate(Kind::Cyclic, c));
      out.emplace(k.entries().begin(), k.entries().end());
    } catch (const Error&) {
    }
    int i = 0;
    while (i < n && ++c[static_cast<std::size_t>(i)] > cap) c[static_cast<std::size_t>(i++)] = 2;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST(Sequences, KnownValues) {
  EXPECT_EQ(fibonacci(0), 0u);
  EXPECT_EQ(fibonacci(12), 144u);
  EXPECT_EQ(fibonacci(93), 12200160415121876738ull);
  EXPECT_THROW(fibonacci(94), Error);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(catalan(5), 42u);
  EXPECT_EQ(count_closed_form(4, 2, Kind::Cyclic), 4u);
  EXPECT_EQ(count_closed_form(3, 1, Kind::Cyclic), 2u);
  EXPECT_EQ(count_closed_form(3, 2, Kind::Cyclic), 1u);
  EXPECT_THROW(count_closed_form(3, 3, Kind::Cyclic), Error);
}

TEST(Generation, LinearCountIsCatalan) {
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(enumerate_linear(n).size(), catalan(n - 1));
}

TEST(Generation, CyclicMatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    const int cap = 2 * n - 1 > 2 ? 2 * n - 1 : 3;
    std::set<std::vector<int>> generated;
    for (const auto& k : enumerate_cyclic(n, cap)) {
      EXPECT_TRUE(generated.emplace(k.entries().begin(), k.entries().end()).second);
    }
    EXPECT_EQ(generated, all_cyclic_classes(n, cap)) << "n=" << n;
  }
}

TEST(Generation, ParallelMergeIsDeterministic) {
  std::vector<KupischSeries> serial;
  std::vector<KupischSeries> threaded;
  for_each_algebra(6, Kind::Cyclic, std::nullopt, 1, [&](const KupischSeries& k) { serial.push_back(k); });
  for_each_algebra(6, Kind::Cyclic, std::nullopt, 4, [&](const KupischSeries& k) { threaded.push_back(k); });
  EXPECT_EQ(serial, threaded);
  EXPECT_EQ(select_algebras(6, Kind::Cyclic, std::nullopt, Filter::Maximal, 1),
            select_algebras(6, Kind::Cyclic, std::nullopt, Filter::Maximal, 3));
}

TEST(Generation, MaximalExamples) {
  EXPECT_EQ(names(select_algebras(3, Kind::Cyclic, std::nullopt, Filter::Maximal)),
            (std::set<std::string>{"[4,3,2]", "[5,4,3]", "[3,2,2]"}));
  EXPECT_EQ(names(select_algebras(2, Kind::Linear, std::nullopt, Filter::Maximal)),
            (std::set<std::string>{"[2,1]"}));
  EXPECT_EQ(select_algebras(4, Kind::Cyclic, std::nullopt, Filter::Maximal).size(), 8u);
}

TEST(Chains, ExamplesAndRejections) {
  EXPECT_TRUE(is_chain(parse_relation_system(Kind::Cyclic, 4, "1:2;2:3")));
  EXPECT_TRUE(is_chain(kupisch_to_relations(validate(Kind::Cyclic, {3, 2, 2}))));
  EXPECT_FALSE(is_chain(kupisch_to_relations(validate(Kind::Cyclic, {3, 4, 4}))));
  EXPECT_THROW(is_chain(parse_relation_system(Kind::Cyclic, 3, "1:3;2:3")), Error);
  EXPECT_EQ(enumerate_chains(4, 2, Kind::Cyclic).size(), 4u);
}

TEST(ChainsProperty, BruteForceMatchesClosedForm) {
  for (int n = 2; n <= 8; ++n) {
    for (int r = 1; r <= n - 1; ++r) {
      for (Kind kind : {Kind::Cyclic, Kind::Linear}) {
        const auto chains = enumerate_chains(n, r, kind);
        EXPECT_EQ(chains.size(), count_closed_form(n, r, kind)) << to_string(kind) << " n=" << n << " r=" << r;
        for (const auto& chain : chains) {
          EXPECT_EQ(chain.count(), r);
          EXPECT_TRUE(is_chain(chain));
        }
      }
    }
  }
}

TEST(ChainsProperty, ChainIffMaximal) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& k : enumerate_cyclic(n)) {
      if (k.selfinjective()) continue;
      EXPECT_EQ(is_chain(kupisch_to_relations(k)), is_maximal(k, homology_report(k))) << format(k);
    }
  }
  for (int n = 2; n <= 8; ++n) {
    for (const auto& k : enumerate_linear(n)) {
      EXPECT_EQ(is_chain(kupisch_to_relations(k)), is_maximal(k, homology_report(k))) << format(k);
    }
  }
}

TEST(CensusProperty, CapStability) {
  // Raising the cap past 2n - 1 adds no maximal classes.
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(select_algebras(n, Kind::Cyclic, std::nullopt, Filter::Maximal),
              select_algebras(n, Kind::Cyclic, 2 * n + 3, Filter::Maximal))
        << "n=" << n;
  }
}

TEST(Census, TableAndRenderings) {
  const auto table = census({2, 3, 4, 5}, Kind::Cyclic);
  EXPECT_EQ(table.total(5, Kind::Cyclic).enumerated, 21u);
  EXPECT_EQ(table.total(5, Kind::Cyclic).fibonacci, 21u);
  EXPECT_EQ(table.total(4, Kind::Cyclic).violations, 0u);
  const auto csv = to_csv(table);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,kind,r,enumerated,closed_form,fibonacci,violations");
  EXPECT_NE(csv.find("4,cyclic,all,8,8,8,0"), std::string::npos);
  const auto j = to_json(table);
  EXPECT_EQ(j.back()["n"], 5);
  EXPECT_EQ(j.back()["r"], "all");

  const auto linear = census({2, 3, 4, 5, 6}, Kind::Linear, {std::nullopt, 2, true});
  EXPECT_EQ(linear.total(6, Kind::Linear).enumerated, 34u);
  EXPECT_EQ(linear.total(6, Kind::Linear).members.size(), 34u);
  EXPECT_THROW(census({1}, Kind::Cyclic), Error);
}
