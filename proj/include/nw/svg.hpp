#pragma once

// Chord diagram rendering: the 2n occurrence positions of a phrase on a
// circle, one chord per letter, labels "letter:symbol". Tick marks separate
// the words of the phrase; the first tick (top of the circle) is the origin.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nw/homotopy.hpp"
#include "nw/phrase.hpp"

namespace nw {

namespace detail {

inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

}  // namespace detail

inline std::pair<double, double> chord_point(int index, int total, double radius,
                                             double cx, double cy) {
  double angle = -3.14159265358979323846 / 2 +
                 2 * 3.14159265358979323846 * (index + 0.5) / std::max(total, 1);
  return {cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
}

inline std::string chord_svg(const Nanophrase& p, const HomotopyData& data) {
  const double size = 440, cx = size / 2, cy = size / 2, r = 160;
  const int n = p.total_positions();
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fmt2(size) +
       "\" height=\"" + detail::fmt2(size) + "\" viewBox=\"0 0 " + detail::fmt2(size) +
       " " + detail::fmt2(size) + "\">\n";
  s += "  <circle cx=\"" + detail::fmt2(cx) + "\" cy=\"" + detail::fmt2(cy) +
       "\" r=\"" + detail::fmt2(r) + "\" fill=\"none\" stroke=\"black\"/>\n";

  // word boundary ticks
  int start = 0;
  for (const auto& w : p.words) {
    double angle = -3.14159265358979323846 / 2 +
                   2 * 3.14159265358979323846 * start / std::max(n, 1);
    double x1 = cx + (r - 8) * std::cos(angle), y1 = cy + (r - 8) * std::sin(angle);
    double x2 = cx + (r + 8) * std::cos(angle), y2 = cy + (r + 8) * std::sin(angle);
    s += "  <line class=\"sep\" x1=\"" + detail::fmt2(x1) + "\" y1=\"" +
         detail::fmt2(y1) + "\" x2=\"" + detail::fmt2(x2) + "\" y2=\"" +
         detail::fmt2(y2) + "\" stroke=\"gray\"/>\n";
    start += static_cast<int>(w.size());
  }

  // occurrence positions of each letter in the concatenation
  std::vector<std::vector<int>> where(p.letter_count());
  int pos = 0;
  for (const auto& w : p.words)
    for (int id : w) where[id].push_back(pos++);

  for (int id = 0; id < p.letter_count(); ++id) {
    if (where[id].size() != 2) continue;
    auto [x1, y1] = chord_point(where[id][0], n, r, cx, cy);
    auto [x2, y2] = chord_point(where[id][1], n, r, cx, cy);
    s += "  <line class=\"chord\" x1=\"" + detail::fmt2(x1) + "\" y1=\"" +
         detail::fmt2(y1) + "\" x2=\"" + detail::fmt2(x2) + "\" y2=\"" +
         detail::fmt2(y2) + "\" stroke=\"steelblue\"/>\n";
    std::string label = p.letters[id] + ":" +
                        (p.proj[id] >= 0 ? data.symbol_name(p.proj[id]) : "?");
    s += "  <text x=\"" + detail::fmt2((x1 + x2) / 2 + 4) + "\" y=\"" +
         detail::fmt2((y1 + y2) / 2 - 4) + "\" font-size=\"11\">" +
         detail::xml_escape(label) + "</text>\n";
  }

  for (int id = 0; id < p.letter_count(); ++id)
    for (int occ : where[id]) {
      auto [x, y] = chord_point(occ, n, r, cx, cy);
      s += "  <circle class=\"pt\" cx=\"" + detail::fmt2(x) + "\" cy=\"" +
           detail::fmt2(y) + "\" r=\"3\" fill=\"black\"/>\n";
    }

  s += "</svg>\n";
  return s;
}

}  // namespace nw
