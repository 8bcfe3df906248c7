#pragma once

#include <string>
#include <vector>

#include "asysig/signal.hpp"

namespace asysig {

/// ASCII waveform over [a, b]: one lane per signal coordinate, `columns`
/// characters wide. A column shows '|' when a switch falls inside its time
/// span, otherwise '-' (high) or '_' (low) at the span's start. Output is
/// byte-stable for fixed inputs.
inline std::string plot_ascii(const std::vector<signal>& signals, const rat& lo, const rat& hi,
                              int columns) {
  if (!(lo < hi)) fail(errc::bad_range, "plot range is empty");
  if (columns < 8) fail(errc::bad_range, "plot needs at least 8 columns");
  const rat span = (hi - lo) / rat(columns);
  std::string out;
  for (std::size_t s = 0; s < signals.size(); ++s) {
    const signal& x = signals[s];
    for (int c = 0; c < x.width(); ++c) {
      std::string lane = "s" + std::to_string(s);
      if (x.width() > 1) lane += "[" + std::to_string(c) + "]";
      lane += " ";
      for (int j = 0; j < columns; ++j) {
        const rat t0 = lo + span * rat(j);
        const rat t1 = lo + span * rat(j + 1);
        bool edge = false;
        for (const auto& sw : x.switches())
          if (t0 <= sw.first && sw.first < t1 &&
              ((sw.second.bits() >> c) & 1) != ((x.left_limit(sw.first).bits() >> c) & 1)) {
            edge = true;
            break;
          }
        if (edge) lane += '|';
        else lane += x.value_at(t0).bit(c) ? '-' : '_';
      }
      out += lane + "\n";
    }
  }
  return out;
}

/// Step-function SVG of the same lanes; switch instants land at exact
/// rational positions scaled into the view box.
inline std::string plot_svg(const std::vector<signal>& signals, const rat& lo, const rat& hi,
                            int columns) {
  if (!(lo < hi)) fail(errc::bad_range, "plot range is empty");
  if (columns < 8) fail(errc::bad_range, "plot needs at least 8 columns");
  int lanes = 0;
  for (const signal& x : signals) lanes += x.width();
  const int width_px = columns * 8;
  const int lane_h = 24;
  auto xpos = [&](const rat& t) {
    const rat frac = (t - lo) / (hi - lo);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", frac.to_double() * width_px);
    return std::string(buf);
  };
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                    std::to_string(width_px) + " " + std::to_string(lanes * lane_h) + "\">\n";
  int lane = 0;
  for (const signal& x : signals) {
    for (int c = 0; c < x.width(); ++c, ++lane) {
      const int y_low = lane * lane_h + lane_h - 4;
      const int y_high = lane * lane_h + 4;
      auto ypos = [&](bool v) { return std::to_string(v ? y_high : y_low); };
      std::string d = "M " + xpos(lo) + " " + ypos(x.value_at(lo).bit(c));
      for (const auto& sw : x.switches()) {
        if (sw.first <= lo || sw.first >= hi) continue;
        const bool before = x.left_limit(sw.first).bit(c);
        const bool after = sw.second.bit(c);
        if (before == after) continue;
        d += " L " + xpos(sw.first) + " " + ypos(before);
        d += " L " + xpos(sw.first) + " " + ypos(after);
      }
      d += " L " + xpos(hi) + " " + ypos(x.left_limit(hi).bit(c));
      out += "  <path fill=\"none\" stroke=\"black\" d=\"" + d + "\"/>\n";
    }
  }
  return out + "</svg>\n";
}

}  // namespace asysig
