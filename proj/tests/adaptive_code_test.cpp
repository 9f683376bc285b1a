#include "eah/adaptive_code.hpp"

#include <gtest/gtest.h>

#include <random>

#include "eah/tuple_huffman.hpp"
#include "test_support.hpp"

namespace eah {
namespace {

using testing::code_of;

// Order-two code over {a,b,c}: rows are symbols, columns contexts.
CodeTable order_two_table() {
  CodeTable table(Alphabet({'a', 'b', 'c'}), 2);
  const char* contexts[] = {"a", "b", "c", "aa", "ab", "ac", "ba", "bb", "bc", "ca", "cb", "cc", ""};
  const char* row_a[] = {"00", "11", "10", "00", "11", "10", "01", "10", "11", "11", "11", "00", "00"};
  const char* row_b[] = {"10", "00", "11", "11", "01", "00", "00", "11", "01", "10", "00", "10", "11"};
  const char* row_c[] = {"11", "01", "00", "10", "00", "11", "11", "00", "00", "00", "10", "11", "10"};
  for (int q = 0; q < 13; ++q) {
    table.set(contexts[q], 'a', BitString::from_string(row_a[q]));
    table.set(contexts[q], 'b', BitString::from_string(row_b[q]));
    table.set(contexts[q], 'c', BitString::from_string(row_c[q]));
  }
  return table;
}

TEST(Extend, OrderTwoTable) {
  const CodeTable table = order_two_table();
  EXPECT_TRUE(table.is_complete());
  EXPECT_EQ(extend(table, "abacca").to_string(), "001011111100");
  EXPECT_TRUE(extend(table, "").empty());
  EXPECT_EQ(extend(table, "a").to_string(), "00");
}

TEST(Extend, UsesThePreviousOrderSymbols) {
  const CodeTable table = order_two_table();
  ContextTrace trace;
  extend(table, "abacca", &trace);
  const ContextTrace expected = {{0, ""}, {1, "a"}, {2, "ab"}, {3, "ba"}, {4, "ac"}, {5, "cc"}};
  EXPECT_EQ(trace, expected);
}

TEST(Extend, MissingEntryIsTableIncomplete) {
  CodeTable table(Alphabet({'a', 'b'}), 1);
  table.set("", 'a', BitString::from_string("0"));
  table.set("", 'b', BitString::from_string("1"));
  table.set("a", 'a', BitString::from_string("0"));
  EXPECT_FALSE(table.is_complete());
  EXPECT_EQ(code_of([&] { extend(table, "ab"); }), ErrorCode::table_incomplete);
  EXPECT_EQ(code_of([&] { extend(table, "ba"); }), ErrorCode::table_incomplete);
}

TEST(Extend, RejectsForeignSymbolsAndLongContexts) {
  CodeTable table(Alphabet({'a', 'b'}), 1);
  EXPECT_EQ(code_of([&] { table.set("ab", 'a', BitString::from_string("0")); }), ErrorCode::argument);
  EXPECT_EQ(code_of([&] { table.set("", 'z', BitString::from_string("0")); }), ErrorCode::argument);
}

TEST(PrefixCondition, HoldsForOrderTwoTable) { EXPECT_TRUE(validate_prefix_condition(order_two_table())); }

TEST(PrefixCondition, DetectsPrefixViolation) {
  CodeTable table(Alphabet({'a', 'b', 'c'}), 1);
  table.set("a", 'a', BitString::from_string("0"));
  table.set("a", 'b', BitString::from_string("01"));
  table.set("a", 'c', BitString::from_string("11"));
  EXPECT_FALSE(validate_prefix_condition(table));
}

TEST(PrefixCondition, SingleSymbolAlphabet) {
  CodeTable table(Alphabet({'x'}), 2);
  for (const char* ctx : {"", "x", "xx"}) table.set(ctx, 'x', BitString::from_string("0"));
  EXPECT_TRUE(table.is_complete());
  EXPECT_TRUE(validate_prefix_condition(table));
  EXPECT_EQ(decode_with_table(table, BitString::from_string("0000"), 4), "xxxx");
}

TEST(PrefixCondition, DuplicateCodewordsFail) {
  CodeTable table(Alphabet({'a', 'b'}), 1);
  table.set("", 'a', BitString::from_string("1"));
  table.set("", 'b', BitString::from_string("1"));
  EXPECT_FALSE(validate_prefix_condition(table));
}

TEST(DecodeWithTable, InvertsOrderTwoTable) {
  const CodeTable table = order_two_table();
  EXPECT_EQ(decode_with_table(table, BitString::from_string("001011111100"), 6), "abacca");
  EXPECT_EQ(decode_with_table(table, BitString{}, 0), "");
  EXPECT_EQ(decode_with_table(table, BitString::from_string("00"), 1), "a");
}

TEST(DecodeWithTable, ErrorPaths) {
  const CodeTable table = order_two_table();
  EXPECT_EQ(code_of([&] { decode_with_table(table, BitString::from_string("0010"), 1); }),
            ErrorCode::trailing_garbage);
  EXPECT_EQ(code_of([&] { decode_with_table(table, BitString::from_string("0"), 1); }), ErrorCode::truncation);

  CodeTable sparse(Alphabet({'a', 'b', 'c'}), 1);
  sparse.set("", 'a', BitString::from_string("0"));
  sparse.set("", 'b', BitString::from_string("10"));
  EXPECT_EQ(code_of([&] { decode_with_table(sparse, BitString::from_string("11"), 1); }),
            ErrorCode::corrupt_stream);
  EXPECT_EQ(code_of([&] { decode_with_table(sparse, BitString::from_string("00"), 2); }),
            ErrorCode::table_incomplete);
}

// Random complete tables whose columns are Huffman codes (hence prefix codes).
CodeTable random_table(std::mt19937_64& rng, std::size_t m, std::size_t order) {
  std::vector<std::uint8_t> symbols;
  for (std::size_t q = 0; q < m; ++q) symbols.push_back(static_cast<std::uint8_t>('a' + q));
  CodeTable table(Alphabet(symbols), order);
  std::vector<std::string> level{""};
  for (std::size_t len = 0; len <= order; ++len) {
    std::vector<std::string> next;
    for (const auto& ctx : level) {
      std::vector<std::uint64_t> f(m);
      for (auto& x : f) x = 1 + rng() % 9;
      const auto code = huffman(f);
      auto order_of = symbols;
      std::shuffle(order_of.begin(), order_of.end(), rng);
      for (std::size_t q = 0; q < m; ++q) table.set(ctx, order_of[q], code[q].bits);
      for (auto s : symbols) next.push_back(ctx + static_cast<char>(s));
    }
    level = std::move(next);
  }
  return table;
}

TEST(AdaptiveCodeProperties, RandomTablesRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 4;
    const std::size_t order = 1 + rng() % 3;
    const CodeTable table = random_table(rng, m, order);
    ASSERT_TRUE(table.is_complete());
    ASSERT_TRUE(validate_prefix_condition(table));

    std::string text(rng() % 65, 'a');
    for (auto& c : text) c = static_cast<char>('a' + rng() % m);
    ContextTrace trace;
    const BitString bits = extend(table, text, &trace);

    std::size_t expected_length = 0;
    for (const auto& [t, ctx] : trace) {
      ASSERT_EQ(ctx, text.substr(t - std::min(t, order), std::min(t, order)));
      expected_length += table.codeword(static_cast<std::uint8_t>(text[t]), ctx).size();
    }
    ASSERT_EQ(bits.size(), expected_length);
    ASSERT_EQ(decode_with_table(table, bits, text.size()), text);
  }
}

}  // namespace
}  // namespace eah
