#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "asysig/system.hpp"

namespace asysig {

// --- signal text format -----------------------------------------------------
//
//   <width> | <init-bits> | <t>:<bits> ; <t>:<bits> ; ...
//
// Times are integers or reduced fractions p/q; bits are {0,1} strings of
// length width; times strictly increasing; each word differs from its
// predecessor. A constant signal prints without the third field.

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

inline signal parse_signal(const std::string& line) {
  const std::vector<std::string> parts = detail::split(line, '|');
  if (parts.size() != 2 && parts.size() != 3)
    fail(errc::syntax_error, "signal needs 2 or 3 '|'-separated fields: '" + line + "'");

  const std::string width_text = detail::trim(parts[0]);
  int width = 0;
  try {
    std::size_t pos = 0;
    width = std::stoi(width_text, &pos);
    if (pos != width_text.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    fail(errc::syntax_error, "bad width '" + width_text + "'");
  }
  if (width < 1 || width > 64) fail(errc::syntax_error, "width out of range: " + width_text);

  const word init = parse_word(detail::trim(parts[1]));
  if (init.width() != width) fail(errc::width_mismatch, "initial word width != declared width");

  std::vector<signal::step> steps;
  word prev = init;
  if (parts.size() == 3 && !detail::trim(parts[2]).empty()) {
    for (const std::string& item : detail::split(parts[2], ';')) {
      const std::string entry = detail::trim(item);
      const std::size_t colon = entry.find(':');
      if (colon == std::string::npos) fail(errc::syntax_error, "switch needs t:bits, got '" + entry + "'");
      const rat t = parse_rat(detail::trim(entry.substr(0, colon)));
      const word w = parse_word(detail::trim(entry.substr(colon + 1)));
      if (w.width() != width) fail(errc::width_mismatch, "switch word width != declared width");
      if (!steps.empty() && !(steps.back().first < t))
        fail(errc::non_increasing_times, "switch times must be strictly increasing at " + t.str());
      if (w == prev) fail(errc::no_op_switch, "switch at " + t.str() + " does not change the value");
      steps.emplace_back(t, w);
      prev = w;
    }
  }
  return signal(init, std::move(steps));
}

inline std::string print_signal(const signal& x) {
  std::string out = std::to_string(x.width()) + " | " + x.initial().str();
  if (!x.is_constant()) {
    out += " |";
    bool first = true;
    for (const auto& s : x.switches()) {
      out += first ? " " : " ; ";
      out += s.first.str() + ":" + s.second.str();
      first = false;
    }
  }
  return out;
}

/// Parses one signal per line; blank lines and '#' comments are skipped.
inline std::vector<signal> parse_corpus(const std::string& text) {
  std::vector<signal> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      out.push_back(parse_signal(t));
    } catch (const error& e) {
      fail(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::string print_corpus(const std::vector<signal>& corpus) {
  std::string out;
  for (const signal& s : corpus) out += print_signal(s) + "\n";
  return out;
}

// --- system DSL ---------------------------------------------------------------
//
//   system <name> { kind = pure_delay; d = 1; }
//   system g { kind = bounded_delay; dr = 1; df = 2; }
//   system c { kind = combinational; d = 0; inputs = 2; table = [00->0, 01->1, 10->1, 11->0]; }
//   system t { kind = tabulated; map = [ "<signal>" -> { "<signal>", ... } ]; }

namespace dsl {

struct token {
  enum class type { ident, atom, string, punct, end };
  type t;
  std::string text;
  int line, col;
};

class lexer {
 public:
  explicit lexer(const std::string& src) : src_(src) {}

  token next() {
    skip_ws();
    token tok{token::type::end, "", line_, col_};
    if (pos_ >= src_.size()) return tok;
    const char c = src_[pos_];
    if (c == '"') {
      advance();
      std::string text;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        text += src_[pos_];
        advance();
      }
      if (pos_ >= src_.size()) fail(errc::syntax_error, where() + ": unterminated string");
      advance();
      tok.t = token::type::string;
      tok.text = text;
      return tok;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      tok.t = token::type::punct;
      tok.text = "->";
      return tok;
    }
    if (std::string("{}[]=;,").find(c) != std::string::npos) {
      advance();
      tok.t = token::type::punct;
      tok.text = std::string(1, c);
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        text += src_[pos_];
        advance();
      }
      tok.t = token::type::ident;
      tok.text = text;
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      std::string text(1, c);
      advance();
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '/' ||
              (src_[pos_] == '-' && !text.empty() && text.back() == '/'))) {
        text += src_[pos_];
        advance();
      }
      tok.t = token::type::atom;
      tok.text = text;
      return tok;
    }
    fail(errc::syntax_error, where() + ": unexpected character '" + std::string(1, c) + "'");
  }

  std::string where() const {
    return "line " + std::to_string(line_) + ", col " + std::to_string(col_);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class parser {
 public:
  explicit parser(const std::string& src) : lex_(src) { shift(); }

  std::vector<system_model> parse_file() {
    std::vector<system_model> out;
    while (cur_.t != token::type::end) {
      expect_ident("system");
      const std::string name = expect(token::type::ident, "system name");
      expect_punct("{");
      out.push_back(parse_body(name));
      expect_punct("}");
    }
    return out;
  }

 private:
  struct value {
    token tok;                                            // atom/string/ident values
    std::vector<std::pair<std::string, std::string>> table;  // in -> out rows
    std::vector<std::pair<std::string, std::vector<std::string>>> map;  // signal -> set
    bool is_table = false, is_map = false;
  };

  system_model parse_body(const std::string& name) {
    std::map<std::string, value> keys;
    while (!(cur_.t == token::type::punct && cur_.text == "}")) {
      const std::string key = expect(token::type::ident, "key");
      expect_punct("=");
      keys.emplace(key, parse_value());
      expect_punct(";");
    }
    auto take = [&](const std::string& k) -> value {
      auto it = keys.find(k);
      if (it == keys.end()) fail(errc::syntax_error, "system " + name + " is missing key '" + k + "'");
      value v = it->second;
      keys.erase(it);
      return v;
    };
    auto take_rat = [&](const std::string& k) { return parse_rat(take(k).tok.text); };
    auto take_int = [&](const std::string& k) {
      const rat r = take_rat(k);
      if (!r.is_integer()) fail(errc::syntax_error, "key '" + k + "' must be an integer");
      return int(r.num());
    };
    auto maybe_width = [&]() {
      if (!keys.count("width")) return 1;
      return take_int("width");
    };
    auto done = [&]() {
      if (!keys.empty())
        fail(errc::syntax_error, "system " + name + " has unknown key '" + keys.begin()->first + "'");
    };

    const std::string kind = take("kind").tok.text;
    if (kind == "pure_delay") {
      const rat d = take_rat("d");
      const int w = maybe_width();
      done();
      return system_model(name, pure_delay{d, w});
    }
    if (kind == "inertial_delay") {
      const rat d = take_rat("d");
      done();
      return system_model(name, inertial_delay{d});
    }
    if (kind == "bounded_delay") {
      const rat dr = take_rat("dr");
      const rat df = take_rat("df");
      const int w = maybe_width();
      done();
      return system_model(name, bounded_delay_window{dr, df, w});
    }
    if (kind == "bounded_delay_closed") {
      const rat d = take_rat("d");
      const rat dp = take_rat("dprime");
      const int w = maybe_width();
      done();
      return system_model(name, bounded_delay_closed{d, dp, w});
    }
    if (kind == "parity_lower") {
      done();
      return system_model(name, parity_lower{});
    }
    if (kind == "phi_window") {
      done();
      return system_model(name, phi_window{});
    }
    if (kind == "monotone_cover") {
      const int w = maybe_width();
      done();
      return system_model(name, monotone_cover{w});
    }
    if (kind == "const_state") {
      const signal st = parse_signal(take("state").tok.text);
      const int m = keys.count("inputs") ? take_int("inputs") : 1;
      done();
      return system_model(name, const_state{st, m});
    }
    if (kind == "combinational") {
      const rat d = take_rat("d");
      const int m = take_int("inputs");
      const value tv = take("table");
      done();
      if (!tv.is_table) fail(errc::syntax_error, "table must be [in->out, ...]");
      std::vector<word> rows(std::size_t(1) << m, word(1, 0));
      std::vector<bool> seen(rows.size(), false);
      int out_width = -1;
      for (const auto& [in_text, out_text] : tv.table) {
        const word in = parse_word(in_text);
        const word out = parse_word(out_text);
        if (in.width() != m) fail(errc::bad_parameter, "table input '" + in_text + "' width != inputs");
        if (out_width < 0) out_width = out.width();
        if (out.width() != out_width) fail(errc::bad_parameter, "table output widths differ");
        if (seen[in.bits()]) fail(errc::bad_parameter, "table row '" + in_text + "' listed twice");
        seen[in.bits()] = true;
        rows[in.bits()] = out;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) fail(errc::bad_parameter, "table is not total: missing row " + std::to_string(i));
      return system_model(name, ideal_combinational{truth_table(m, out_width, rows), d});
    }
    if (kind == "tabulated") {
      const value mv = take("map");
      done();
      if (!mv.is_map) fail(errc::syntax_error, "map must be [ \"signal\" -> { ... }, ... ]");
      tabulated tab;
      for (const auto& [in_text, states] : mv.map) {
        std::vector<signal> set;
        for (const std::string& s : states) set.push_back(parse_signal(s));
        tab.map.emplace_back(parse_signal(in_text), std::move(set));
      }
      return system_model(name, std::move(tab));
    }
    fail(errc::unknown_kind, "unknown system kind '" + kind + "'");
  }

  value parse_value() {
    value v;
    if (cur_.t == token::type::punct && cur_.text == "[") {
      shift();
      // table rows (atom -> atom) or map rows (string -> { string, ... })
      bool first = true;
      while (!(cur_.t == token::type::punct && cur_.text == "]")) {
        if (!first) expect_punct(",");
        first = false;
        if (cur_.t == token::type::punct && cur_.text == "]") break;  // trailing comma
        if (cur_.t == token::type::string) {
          v.is_map = true;
          const std::string in = expect(token::type::string, "input signal");
          expect_punct("->");
          expect_punct("{");
          std::vector<std::string> states;
          bool sfirst = true;
          while (!(cur_.t == token::type::punct && cur_.text == "}")) {
            if (!sfirst) expect_punct(",");
            sfirst = false;
            states.push_back(expect(token::type::string, "state signal"));
          }
          expect_punct("}");
          v.map.emplace_back(in, std::move(states));
        } else {
          v.is_table = true;
          const std::string in = expect(token::type::atom, "table input bits");
          expect_punct("->");
          const std::string out = expect(token::type::atom, "table output bits");
          v.table.emplace_back(in, out);
        }
      }
      expect_punct("]");
      return v;
    }
    if (cur_.t == token::type::atom || cur_.t == token::type::string ||
        cur_.t == token::type::ident) {
      v.tok = cur_;
      shift();
      return v;
    }
    fail(errc::syntax_error, lex_.where() + ": expected a value, got '" + cur_.text + "'");
  }

  void shift() { cur_ = lex_.next(); }
  std::string expect(token::type t, const std::string& what) {
    if (cur_.t != t)
      fail(errc::syntax_error, "line " + std::to_string(cur_.line) + ", col " +
                                   std::to_string(cur_.col) + ": expected " + what + ", got '" +
                                   cur_.text + "'");
    std::string text = cur_.text;
    shift();
    return text;
  }
  void expect_punct(const std::string& p) {
    if (cur_.t != token::type::punct || cur_.text != p)
      fail(errc::syntax_error, "line " + std::to_string(cur_.line) + ", col " +
                                   std::to_string(cur_.col) + ": expected '" + p + "', got '" +
                                   cur_.text + "'");
    shift();
  }
  void expect_ident(const std::string& word_text) {
    if (cur_.t != token::type::ident || cur_.text != word_text)
      fail(errc::syntax_error, "line " + std::to_string(cur_.line) + ", col " +
                                   std::to_string(cur_.col) + ": expected '" + word_text + "'");
    shift();
  }

  lexer lex_;
  token cur_;
};

}  // namespace dsl

inline std::vector<system_model> parse_systems(const std::string& src) {
  return dsl::parser(src).parse_file();
}

inline system_model parse_system(const std::string& src, const std::string& name) {
  for (auto& m : parse_systems(src))
    if (m.name() == name) return m;
  fail(errc::syntax_error, "no system named '" + name + "' in file");
}

}  // namespace asysig
