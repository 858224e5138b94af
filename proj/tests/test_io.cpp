#include <gtest/gtest.h>

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "arcsys/constructions.hpp"
#include "arcsys/io.hpp"
#include "arcsys/svg.hpp"

using namespace arcsys;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::Precondition;
}

}  // namespace

TEST(SystemFile, RoundTrip) {
  std::vector<ArcSystem> systems{ideal_polygon_system(make_surface("abcABC")),
                                 triangulation_system(make_surface("abABcC")),
                                 concentric_system(4, 1), same_puncture_system(3),
                                 two_puncture_system(3), tetrahedron_system()};
  for (const auto& sys : systems) {
    auto text = serialize_system(sys);
    auto back = parse_system(text);
    EXPECT_EQ(back.surface().word(), sys.surface().word());
    EXPECT_EQ(back.arcs(), sys.arcs());
    EXPECT_EQ(serialize_system(back), text);
  }
}

TEST(SystemFile, CommentsAndBlankLines) {
  auto sys = parse_system("# square\n\nsurface aAbB\n  side:a  \n# diagonal\nc0::c2\r\n");
  EXPECT_EQ(sys.size(), 2u);
}

TEST(SystemFile, NonCanonicalLinesAreNormalized) {
  auto sys = parse_system("surface aAbB\nc0:aA:c1\n");
  EXPECT_EQ(format_arc(sys[0]), "side:a");
}

TEST(SystemFile, Errors) {
  EXPECT_EQ(parse_error(""), ErrorCode::Parse);
  EXPECT_EQ(parse_error("surface aAbB\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("aAbB\nside:a\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("surface aAbB\nc0:a"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("surface aab\nside:a\n"), ErrorCode::UnpairedLetter);
  EXPECT_EQ(parse_error("surface aAbB\nside:a\nside:a\n"), ErrorCode::InvalidSystem);
  EXPECT_EQ(parse_error("surface aAbB\nc0::c0\n"), ErrorCode::InvalidSystem);
}

TEST(ChordFile, RoundTrip) {
  auto fam = max_pairwise_family(5);
  auto text = serialize_chords(fam);
  EXPECT_TRUE(looks_like_chord_file(text));
  auto back = parse_chords(text);
  EXPECT_EQ(back.l, 5);
  EXPECT_EQ(back.chords, fam.chords);
  EXPECT_THROW(parse_chords("chords 3\n0 5\n"), Error);
  EXPECT_THROW(parse_chords("chords x\n"), Error);
  EXPECT_THROW(parse_chords("chords 3\n0 1 2\n"), Error);
  EXPECT_FALSE(looks_like_chord_file("surface aAbB\nside:a\n"));
}

TEST(Svg, PolygonSystemShowsOneCrossing) {
  auto svg = render_system_svg(ideal_polygon_system(make_surface("aAbB")));
  EXPECT_NO_THROW(parse_xml(svg));
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(svg.find("4 arcs"), std::string::npos);
  EXPECT_NE(svg.find("crossings: 1<"), std::string::npos);
  EXPECT_EQ(count(svg, "stroke=\"#d00\""), 1u);
}

TEST(Svg, TriangulationHasNoCrossings) {
  auto svg = render_system_svg(triangulation_system(make_surface("aAbBcC")));
  EXPECT_NO_THROW(parse_xml(svg));
  EXPECT_NE(svg.find("crossings: 0<"), std::string::npos);
  EXPECT_EQ(count(svg, "stroke=\"#d00\""), 0u);
}

TEST(Svg, CrossingMarksMatchMatrix) {
  for (const auto& sys : {concentric_system(4, 1), tetrahedron_system(), concentric_system(3, 2)}) {
    auto m = intersection_matrix(sys);
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) total += static_cast<std::size_t>(m[i][j]);
    auto svg = render_system_svg(sys);
    EXPECT_NE(svg.find("crossings: " + std::to_string(total) + "<"), std::string::npos);
    EXPECT_EQ(count(svg, "stroke=\"#d00\""), total);
  }
}

TEST(Svg, ChordFamily) {
  auto svg = render_chords_svg(max_pairwise_family(3));
  EXPECT_NO_THROW(parse_xml(svg));
  EXPECT_NE(svg.find("3 chords on 3 points"), std::string::npos);
  EXPECT_EQ(count(svg, "<line") + count(svg, "r=\"7\""), 3u);
}

TEST(Svg, Deterministic) {
  EXPECT_EQ(render_system_svg(tetrahedron_system()), render_system_svg(tetrahedron_system()));
  EXPECT_EQ(render_chords_svg(max_pairwise_family(6)), render_chords_svg(max_pairwise_family(6)));
}
