#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arcsys/arcs.hpp"
#include "arcsys/chords.hpp"
#include "arcsys/error.hpp"
#include "arcsys/systems.hpp"

namespace arcsys {

// System files:
//
//   surface aAbB
//   side:a
//   c0::c2
//
// Blank lines and lines starting with '#' are ignored. Chord family files
// start with "chords <l>" followed by one "i j" pair per line.

namespace detail {

inline std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos || line[b] == '#') continue;
    out.push_back(line.substr(b));
  }
  return out;
}

}  // namespace detail

inline std::string serialize_system(const ArcSystem& sys) {
  std::string out = "surface " + sys.surface().word() + "\n";
  for (const auto& a : sys.arcs()) out += format_arc(a) + "\n";
  return out;
}

inline ArcSystem parse_system(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || !lines[0].starts_with("surface "))
    throw Error(ErrorCode::Parse, "system file must start with 'surface <word>'");
  auto surface = make_surface(lines[0].substr(8));
  if (lines.size() < 2) throw Error(ErrorCode::Parse, "system file lists no arcs");
  std::vector<CanonicalArc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) arcs.push_back(parse_arc(lines[i], surface));
  return ArcSystem(surface, std::move(arcs));
}

inline bool looks_like_chord_file(std::string_view text) {
  auto lines = detail::content_lines(text);
  return !lines.empty() && lines[0].starts_with("chords ");
}

inline std::string serialize_chords(const ChordFamily& fam) {
  std::string out = "chords " + std::to_string(fam.l) + "\n";
  for (const auto& c : fam.chords) out += std::to_string(c.a) + " " + std::to_string(c.b) + "\n";
  return out;
}

inline ChordFamily parse_chords(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty() || !lines[0].starts_with("chords "))
    throw Error(ErrorCode::Parse, "chord file must start with 'chords <l>'");
  ChordFamily fam;
  auto int_of = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorCode::Parse, "expected an integer, got '" + s + "'");
    return v;
  };
  fam.l = int_of(lines[0].substr(7));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string x, y, rest;
    if (!(in >> x >> y) || (in >> rest))
      throw Error(ErrorCode::Parse, "bad chord line '" + lines[i] + "'");
    fam.chords.emplace_back(int_of(x), int_of(y));
  }
  try {
    validate(fam);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return fam;
}

}  // namespace arcsys
