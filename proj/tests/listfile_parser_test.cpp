#include "rolestat/listfile_parser.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "rolestat/errors.hpp"
#include "support/test_support.hpp"

namespace rolestat {
namespace {

const std::string kHeader =
    "THE ACTORS LIST\n===============\n\nName\t\t\tTitles\n----\t\t\t------\n";

struct Parsed {
  std::vector<RawAppearance> records;
  ParseReport report;
};

Parsed parse(const std::string& bytes, Gender gender = Gender::Male) {
  std::istringstream in(bytes);
  Parsed out;
  out.report = parse_list_stream(in, gender, [&](RawAppearance&& r) {
    out.records.push_back(std::move(r));
  });
  return out;
}

TEST(ParseTitleEntry, BigLebowskiLine) {
  const auto p = parse(kHeader + "Bridges, Jeff\t\tThe Big Lebowski (1998)  [The Dude]  <1>\n");
  ASSERT_EQ(p.records.size(), 1u);
  RawAppearance want;
  want.performer = "Bridges, Jeff";
  want.title = "The Big Lebowski";
  want.year = 1998;
  want.is_episode = false;
  want.raw_role = "The Dude";
  want.billing = 1;
  want.gender = Gender::Male;
  EXPECT_EQ(p.records[0], want);
  EXPECT_EQ(p.report.records_emitted, 1u);
}

TEST(ParseTitleEntry, AlternativeNameIsExcluded) {
  const auto p = parse(kHeader + "Doe, Jane\t\tSome Film (1970)  (as Janey Doe)  [Nurse]\n",
                       Gender::Female);
  EXPECT_TRUE(p.records.empty());
  EXPECT_EQ(p.report.records_excluded_alternative_name, 1u);
  EXPECT_EQ(p.report.title_lines(), 1u);
}

TEST(ParseTitleEntry, AttributesAndRomanSuffix) {
  const auto e = parse_title_entry("Film (2005/II) (TV) (uncredited)  [Cop]");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->title, "Film");
  EXPECT_EQ(e->title_year, 2005);
  EXPECT_EQ(e->attributes, (std::vector<std::string>{"TV", "uncredited"}));
  EXPECT_EQ(e->role, "Cop");
  EXPECT_FALSE(e->billing);
}

TEST(ParseTitleEntry, QuotedSeriesWithEpisode) {
  const auto e = parse_title_entry("\"Show\" (1990) {Pilot (#1.1)}  (voice)  [Narrator]  <3>");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->title, "Show");
  EXPECT_TRUE(e->quoted);
  EXPECT_EQ(e->episode, "Pilot (#1.1)");
  EXPECT_EQ(e->attributes, std::vector<std::string>{"voice"});
  EXPECT_EQ(e->billing, 3u);
}

TEST(ParseTitleEntry, TitleKeepsInnerParentheses) {
  const auto e = parse_title_entry("Night (Part 2) (1999)  [Guard]");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->title, "Night (Part 2)");
  EXPECT_EQ(e->title_year, 1999);
}

TEST(ParseTitleEntry, RejectsGrammarViolations) {
  EXPECT_FALSE(parse_title_entry("No Year Here  [Role]"));
  EXPECT_FALSE(parse_title_entry("(1998)  [Role]"));             // empty title
  EXPECT_FALSE(parse_title_entry("Film (1998)  [Role]  <0>"));   // billing >= 1
  EXPECT_FALSE(parse_title_entry("Film (1998)  [Role]  <x1>"));
  EXPECT_FALSE(parse_title_entry("Film (1998)  [Role"));         // unterminated
  EXPECT_FALSE(parse_title_entry("Film (1998)  [A]  [B]"));
  EXPECT_FALSE(parse_title_entry("Film (1998)  <1>  [Role]"));   // order
  EXPECT_FALSE(parse_title_entry("Film (1998)  trailing words"));
  EXPECT_FALSE(parse_title_entry("Film (1998)  <99999999999999999999>"));
}

TEST(EpisodeYear, FallsBackToSeriesYear) {
  const auto e = parse_title_entry("\"Show\" (1990) {Pilot (#1.1)}");
  ASSERT_TRUE(e);
  EXPECT_EQ(episode_year(*e), 1990);
}

TEST(EpisodeYear, EpisodeDateWins) {
  const auto e = parse_title_entry("\"Show\" (1990) {Finale (2005) (#16.9)}");
  ASSERT_TRUE(e);
  EXPECT_EQ(episode_year(*e), 2005);
}

TEST(EpisodeYear, FilmYear) {
  const auto e = parse_title_entry("Film (1998)");
  ASSERT_TRUE(e);
  EXPECT_EQ(episode_year(*e), 1998);
}

TEST(EpisodeYear, IsoDateInsideBraces) {
  const auto e = parse_title_entry("\"News\" (?\?\?\?) {Episode dated 5 May 2001 (2001-05-05)}");
  ASSERT_TRUE(e);
  EXPECT_FALSE(e->title_year);
  EXPECT_EQ(episode_year(*e), 2001);
}

TEST(EpisodeYear, BothAbsent) {
  const auto e = parse_title_entry("\"News\" (?\?\?\?) {Pilot (#1.1)}");
  ASSERT_TRUE(e);
  EXPECT_FALSE(episode_year(*e));
}

TEST(ListFileParser, ThreePerformerFixture) {
  const auto p = parse(testsupport::read_file(testsupport::fixture("three_performers.list")));
  EXPECT_EQ(p.report.records_emitted, 5u);
  EXPECT_EQ(p.report.records_excluded_alternative_name, 1u);
  EXPECT_EQ(p.report.records_excluded_no_year, 1u);
  EXPECT_EQ(p.report.lines_skipped_malformed, 0u);
  EXPECT_EQ(p.report.title_lines(), 7u);
  ASSERT_EQ(p.records.size(), 5u);
  EXPECT_EQ(p.records[2].performer, "Goodman, John");
  EXPECT_EQ(p.records[3].year, 2005);
  EXPECT_TRUE(p.records[3].is_episode);
  EXPECT_EQ(p.records[4].raw_role, "Nihilist #1, Uli Kunkel");
  EXPECT_EQ(p.records[4].billing, 9u);
}

TEST(ListFileParser, GzipIsTransparent) {
  const std::string plain = testsupport::read_file(testsupport::fixture("actors.list"));
  const auto a = parse(plain);
  const auto b = parse(testsupport::gzip(plain));
  EXPECT_EQ(a.records, b.records);
  EXPECT_EQ(a.report, b.report);
  EXPECT_GT(a.records.size(), 10u);
}

TEST(ListFileParser, ConcatenatedGzipMembers) {
  const std::string body = "Bridges, Jeff\t\tTron (1982)  [Clu]\n";
  const auto p = parse(testsupport::gzip(kHeader) + testsupport::gzip(body));
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_EQ(p.records[0].raw_role, "Clu");
}

TEST(ListFileParser, TruncatedGzipIsAnIoError) {
  std::string gz = testsupport::gzip(kHeader + "Bridges, Jeff\t\tTron (1982)  [Clu]\n");
  gz.resize(gz.size() / 2);
  EXPECT_THROW(parse(gz), IoError);
}

TEST(ListFileParser, MissingBannerNamesTheSentinel) {
  try {
    parse("just some text\nwith no header\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("THE ACTORS LIST"), std::string::npos);
  }
}

TEST(ListFileParser, MissingColumnHeaderNamesTheSentinel) {
  try {
    parse("THE ACTRESSES LIST\n==================\n\nno header here\n");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("Name"), std::string::npos);
  }
}

TEST(ListFileParser, YearRangeFilter) {
  const auto p = parse(kHeader +
                       "A, B\t\tOld (1899)  [X]\n"
                       "\t\t\tEdge (1900)  [X]\n"
                       "\t\t\tEdge (2020)  [X]\n"
                       "\t\t\tFuture (2021)  [X]\n");
  EXPECT_EQ(p.report.records_emitted, 2u);
  EXPECT_EQ(p.report.records_excluded_no_year, 2u);
}

TEST(ListFileParser, TitleLineWithoutPerformerIsMalformed) {
  const auto p = parse(kHeader + "\t\t\tOrphan (1999)  [X]\n\nA, B\t\tFilm (1999)\n");
  EXPECT_EQ(p.report.lines_skipped_malformed, 1u);
  EXPECT_EQ(p.report.records_emitted, 1u);
  EXPECT_FALSE(p.records[0].raw_role);
}

TEST(ListFileParser, BlankLineEndsPerformerBlock) {
  const auto p = parse(kHeader + "A, B\t\tFilm (1999)\n\n\t\t\tNext (1999)\n");
  EXPECT_EQ(p.report.records_emitted, 1u);
  EXPECT_EQ(p.report.lines_skipped_malformed, 1u);
}

TEST(ListFileParser, StopsAtEndSentinels) {
  const auto p = parse(kHeader + "A, B\t\tFilm (1999)\n\n"
                       "-----------------------------------------------\n"
                       "C, D\t\tIgnored (1999)\n");
  EXPECT_EQ(p.report.title_lines(), 1u);
  const auto q = parse(kHeader + "A, B\t\tFilm (1999)\nSUBMITTING UPDATES\nC, D\t\tX (1999)\n");
  EXPECT_EQ(q.report.title_lines(), 1u);
}

TEST(ListFileParser, Latin1BytesBecomeUtf8) {
  const auto p = parse(kHeader + "Ram\xedrez, Ana\t\tTelenovela (1999)  [Se\xf1ora]\n");
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_EQ(p.records[0].performer, "Ram\xc3\xadrez, Ana");
  EXPECT_EQ(p.records[0].raw_role, "Se\xc3\xb1ora");
}

TEST(ListFileParser, CrLfLineEndings) {
  const auto p = parse("THE ACTORS LIST\r\n===\r\n\r\nName\t\tTitles\r\n----\t\t------\r\n"
                       "A, B\t\tFilm (1999)  [Cop]  <2>\r\n");
  ASSERT_EQ(p.records.size(), 1u);
  EXPECT_EQ(p.records[0].billing, 2u);
}

TEST(ListFileParser, GenderFollowsTheSourceFile) {
  const std::string bytes = testsupport::read_file(testsupport::fixture("actresses.list"));
  for (Gender g : {Gender::Female, Gender::Male}) {
    for (const auto& r : parse(bytes, g).records) EXPECT_EQ(r.gender, g);
  }
}

TEST(ListFileParser, FuzzConservationAndDeterminism) {
  std::mt19937_64 rng(20141024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string bytes = testsupport::random_list_file(rng, 1 + rng() % 80);
    const auto a = parse(bytes);
    const auto b = parse(bytes);
    EXPECT_EQ(a.report.title_lines(), testsupport::oracle::count_title_lines(bytes));
    EXPECT_EQ(a.records, b.records);
    EXPECT_EQ(a.report, b.report);
    EXPECT_EQ(a.records.size(), a.report.records_emitted);
    for (const auto& r : a.records) {
      ASSERT_TRUE(r.year);
      EXPECT_GE(*r.year, kFirstRetainedYear);
      EXPECT_LE(*r.year, kLastRetainedYear);
      if (r.billing) EXPECT_GE(*r.billing, 1u);
    }
  }
}

TEST(ListFileParser, JunkDataRegionYieldsOnlySkips) {
  std::mt19937_64 rng(7);
  std::string body;
  for (int i = 0; i < 50; ++i) {
    std::string junk;
    for (int j = 0; j < 40; ++j) junk.push_back(static_cast<char>('!' + rng() % 90));
    body += junk + "\n";
  }
  const auto p = parse(kHeader + body);
  EXPECT_EQ(p.report.records_emitted, 0u);
  EXPECT_GT(p.report.lines_skipped_malformed, 0u);
  EXPECT_EQ(p.report.title_lines(), 50u);
}

TEST(Latin1, EveryByteDecodes) {
  std::string all;
  for (int b = 1; b < 256; ++b) all.push_back(static_cast<char>(b));
  const std::string utf8 = latin1_to_utf8(all);
  EXPECT_EQ(utf8.size(), 127u + 2u * 128u);
  EXPECT_EQ(utf8.substr(utf8.size() - 2), "\xc3\xbf");
}

}  // namespace
}  // namespace rolestat
