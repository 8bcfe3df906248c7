#pragma once

#include <random>
#include <vector>

#include "asysig/signal.hpp"

namespace testhelp {

using asysig::rat;
using asysig::signal;
using asysig::word;

/// Deterministic random signal over quarter-integer times in [-2, 4].
inline signal random_signal(std::mt19937& rng, int width = 1, int max_switches = 4) {
  std::uniform_int_distribution<int> nswitch(0, max_switches);
  std::uniform_int_distribution<int> quarters(-8, 16);
  std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << width) - 1);
  std::vector<rat> times;
  const int n = nswitch(rng);
  while (int(times.size()) < n) {
    rat t(quarters(rng), 4);
    bool dup = false;
    for (const rat& s : times) dup |= (s == t);
    if (!dup) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  std::vector<signal::step> steps;
  for (const rat& t : times) steps.emplace_back(t, word(width, bits(rng)));
  return signal(word(width, bits(rng)), std::move(steps));
}

/// Every canonical signal of the given width whose switches lie in pts.
inline std::vector<signal> exhaustive_corpus(int width, const std::vector<rat>& pts) {
  std::vector<signal> out;
  const auto words = asysig::all_words(width);
  std::vector<std::size_t> choice(pts.size() + 1, 0);
  while (true) {
    std::vector<signal::step> steps;
    for (std::size_t i = 0; i < pts.size(); ++i) steps.emplace_back(pts[i], words[choice[i + 1]]);
    signal s(words[choice[0]], std::move(steps));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < words.size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  return out;
}

/// Probe times covering every piece of the given signals: all switch times,
/// midpoints between consecutive ones, and one point beyond each end.
inline std::vector<rat> probe_times(const std::vector<const signal*>& xs) {
  std::vector<rat> ts;
  for (const signal* x : xs)
    for (const auto& s : x->switches()) ts.push_back(s.first);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.empty()) return {rat(0)};
  std::vector<rat> out = ts;
  for (std::size_t i = 1; i < ts.size(); ++i) out.push_back(rat::mid(ts[i - 1], ts[i]));
  out.push_back(ts.front() - rat(1));
  out.push_back(ts.back() + rat(1));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testhelp
