#include <catch_amalgamated.hpp>

#include <filesystem>

#include "semikit/catalog.hpp"
#include "semikit/json_io.hpp"
#include "semikit/word.hpp"

using namespace semikit;
namespace cat = semikit::catalog;

static std::string fixture(const std::string& name) {
  return std::string(SEMIKIT_FIXTURES_DIR) + "/" + name;
}

TEST_CASE("bundled fixture files match the embedded tables") {
  const std::pair<const FiniteSemigroup*, const char*> entries[] = {
      {&cat::table_B(), "B.json"},   {&cat::table_C(), "C.json"}, {&cat::a0(), "A0.json"},
      {&cat::n2(), "N2.json"},       {&cat::u1(), "U1.json"},     {&cat::l2(), "L2.json"},
      {&cat::r2(), "R2.json"},       {&cat::z2(), "Z2.json"},     {&cat::z3(), "Z3.json"},
      {&cat::z4(), "Z4.json"},       {&cat::mono_2_2(), "MONO_2_2.json"},
      {&cat::nil3(), "NIL3.json"},
  };
  for (const auto& [sg, file] : entries) {
    INFO(file);
    auto loaded = load_semigroup(fixture(file));
    CHECK(loaded.same_table(*sg));
    CHECK(loaded.name == sg->name);
  }
  auto manifest = load_json_file(fixture("manifest.json"));
  CHECK(manifest.at("fixtures").size() == std::size(entries));
  for (const auto& entry : manifest.at("fixtures")) {
    CHECK(std::filesystem::exists(fixture(entry.at("file").get<std::string>())));
    CHECK_FALSE(entry.at("provenance").get<std::string>().empty());
  }
}

TEST_CASE("checksum of the transcribed tables") {
  // FNV-1a over the flattened entries, guarding against transcription drift
  auto fnv = [](const FiniteSemigroup& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : s.table) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  };
  CHECK(fnv(cat::table_B()) == 0x350fddf2ebcdaf2eull);
  CHECK(fnv(cat::table_C()) == 0x3fa9330bb6aa3c24ull);
}

TEST_CASE("presentation of C verifies") {
  auto pc = cat::presentation_of_C();
  auto rep = cat::verify_presentation(cat::table_C(), {1, 2, 3}, pc);
  CHECK(rep.all_ok());
  CHECK(rep.failures.empty());

  // the listed words evaluate to their positions
  Evaluation theta{{0, 1}, {1, 2}, {2, 3}};
  for (std::size_t i = 0; i < pc.claimed_elements.size(); ++i)
    CHECK(eval_word(cat::table_C(), pc.claimed_elements[i], theta) == static_cast<int>(i));

  // a deliberately wrong generator map breaks the idempotency relation
  auto bad = cat::verify_presentation(cat::table_C(), {2, 2, 3}, pc);
  CHECK_FALSE(bad.relations_hold);
  CHECK(cat::table_C().at(2, 2) == 4);
}

TEST_CASE("A0 criterion examples") {
  CHECK(cat::a0_identity_oracle(parse_word("xyx"), parse_word("xy^2x")));
  CHECK_FALSE(cat::a0_identity_oracle(parse_word("xy"), parse_word("xz")));
  CHECK(cat::a0_identity_oracle(parse_word("zxyxz"), parse_word("zxyxz")));
  CHECK_FALSE(cat::a0_identity_oracle(parse_word("xy"), parse_word("xyx")));
}

TEST_CASE("A0 criterion agrees with brute-force checking") {
  // all words of length <= 6 over {x,y,z}: the criterion decides
  // satisfaction in A0 exactly
  std::vector<Word> words;
  std::vector<int> stack;
  auto gen = [&](auto&& self) -> void {
    if (!stack.empty()) words.push_back(Word{stack});
    if (stack.size() == 6) return;
    for (int l : {23, 24, 25}) {
      stack.push_back(l);
      self(self);
      stack.pop_back();
    }
  };
  gen(gen);

  // precompute each word's evaluation profile over all 4^3 assignments
  const auto& a0 = cat::a0();
  std::vector<std::vector<int>> profile;
  profile.reserve(words.size());
  for (const auto& w : words) {
    std::vector<int> prof;
    Evaluation theta;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          theta[23] = a;
          theta[24] = b;
          theta[25] = c;
          prof.push_back(eval_word(a0, w, theta));
        }
    profile.push_back(std::move(prof));
  }
  std::size_t agreements = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j) {
      const bool by_model = profile[i] == profile[j];
      const bool by_criterion = cat::a0_identity_oracle(words[i], words[j]);
      if (by_model != by_criterion) {
        INFO(to_string(words[i]) + " vs " + to_string(words[j]));
        REQUIRE(by_model == by_criterion);
      }
      ++agreements;
    }
  CHECK(agreements == words.size() * (words.size() + 1) / 2);
}

TEST_CASE("A0 fixture is the subsemigroup of C on {1,3}") {
  auto sub = subsemigroup_generated(cat::table_C(), {1, 3});
  CHECK(sub.elements == std::vector<int>{0, 1, 3, 5});
  CHECK(is_isomorphic(sub.sub, cat::a0()));
}
