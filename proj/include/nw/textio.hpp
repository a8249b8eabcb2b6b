#pragma once

// Text and JSON formats.
//
// Document (nanophrase + its homotopy data), line-based, '#' comments:
//
//   @preset alpha_star              # or a custom alphabet:
//   @alphabet a b                   #   @tau a:b
//   @triples (a,a,a) (b,b,b)        #   @shift a:b
//   @letters A:a+ B:b+ C:a+
//   @phrase ABCABC                  # words separated by whitespace
//
// A word is a dot-separated letter list (A.B.C), a bare string when all
// letters are single characters, or '-' for the empty word. The JSON mirror
// of the same schema is accepted and produced whenever the input starts
// with '{'.
//
// Gauss codes:  @gausscode O1+ U2+ O3+ U1+ O2+ U3+   ('/' separates
// components; a passage is O or U, an alphanumeric label, and a sign).
//
// Finite keis:
//
//   @kei m=3 symbols=+,- tau=+:-
//   @act + 0 1 2
//   @op +
//   0 2 1
//   ...
//
// Syntax errors carry line/column; semantic problems (Gauss violations,
// unknown symbols) are left to validate().

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nw/codec.hpp"
#include "nw/homotopy.hpp"
#include "nw/kei.hpp"
#include "nw/phrase.hpp"
#include "nw/presets.hpp"

namespace nw {

struct parse_error : error {
  int line;
  int col;
  parse_error(const std::string& msg, int line_, int col_)
      : error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " +
              msg),
        line(line_),
        col(col_) {}
};

struct Document {
  HomotopyData data;
  Nanophrase phrase;
};

namespace detail {

struct Token {
  std::string text;
  int line;
  int col;
};

struct Line {
  std::vector<Token> tokens;
  int number;
};

inline std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    Line line{{}, number};
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) &&
             raw[i] != '#')
        ++i;
      line.tokens.push_back(
          {raw.substr(start, i - start), number, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::vector<std::pair<std::string, std::string>> parse_pairs(const Token& tok) {
  std::vector<std::pair<std::string, std::string>> pairs;
  size_t colon = tok.text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= tok.text.size())
    throw parse_error("expected 'x:y' pair, got '" + tok.text + "'", tok.line, tok.col);
  pairs.emplace_back(tok.text.substr(0, colon), tok.text.substr(colon + 1));
  return pairs;
}

inline std::array<std::string, 3> parse_triple(const Token& tok) {
  const std::string& t = tok.text;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw parse_error("expected '(a,b,c)', got '" + t + "'", tok.line, tok.col);
  std::array<std::string, 3> out;
  size_t pos = 1, part = 0;
  while (part < 3) {
    size_t comma = t.find(',', pos);
    size_t end = (part == 2) ? t.size() - 1 : comma;
    if (part < 2 && comma == std::string::npos)
      throw parse_error("triple needs three components", tok.line, tok.col);
    out[part] = t.substr(pos, end - pos);
    if (out[part].empty())
      throw parse_error("empty triple component", tok.line, tok.col);
    pos = end + 1;
    ++part;
  }
  return out;
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

inline int parse_int(const std::string& text, int line, int col) {
  try {
    size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw parse_error("expected integer, got '" + text + "'", line, col);
  }
}

}  // namespace detail

inline Document parse_document_json(const std::string& text);

inline Document parse_document(const std::string& text) {
  if (detail::looks_like_json(text)) return parse_document_json(text);
  std::optional<HomotopyData> data;
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> tau_pairs;
  std::vector<std::array<std::string, 3>> triples;
  std::optional<std::vector<std::pair<std::string, std::string>>> shift_pairs;
  bool custom = false;

  std::vector<std::pair<std::string, std::string>> letters;  // name -> symbol
  std::optional<std::vector<std::vector<std::string>>> words;

  for (const auto& line : detail::tokenize(text)) {
    const auto& head = line.tokens.front();
    auto rest = [&](size_t from = 1) {
      return std::vector<detail::Token>(line.tokens.begin() + from, line.tokens.end());
    };
    if (head.text == "@preset") {
      if (line.tokens.size() != 2)
        throw parse_error("@preset takes one name", head.line, head.col);
      data = preset(line.tokens[1].text);  // throws nw::error on unknown name
    } else if (head.text == "@alphabet") {
      custom = true;
      for (const auto& t : rest()) alphabet.push_back(t.text);
    } else if (head.text == "@tau") {
      custom = true;
      for (const auto& t : rest())
        for (auto& pr : detail::parse_pairs(t)) tau_pairs.push_back(pr);
    } else if (head.text == "@triples") {
      custom = true;
      for (const auto& t : rest()) triples.push_back(detail::parse_triple(t));
    } else if (head.text == "@shift") {
      custom = true;
      if (!shift_pairs) shift_pairs.emplace();
      for (const auto& t : rest())
        for (auto& pr : detail::parse_pairs(t)) shift_pairs->push_back(pr);
    } else if (head.text == "@letters") {
      for (const auto& t : rest()) {
        size_t colon = t.text.find(':');
        if (colon == std::string::npos)
          throw parse_error("expected 'Letter:symbol', got '" + t.text + "'", t.line,
                            t.col);
        letters.emplace_back(t.text.substr(0, colon), t.text.substr(colon + 1));
      }
    } else if (head.text == "@phrase") {
      if (!words) words.emplace();  // repeated @phrase lines append words
      for (const auto& t : rest()) {
        if (t.text == "-") {
          words->push_back({});
          continue;
        }
        std::vector<std::string> w;
        if (t.text.find('.') != std::string::npos) {
          size_t pos = 0;
          while (pos <= t.text.size()) {
            size_t dot = t.text.find('.', pos);
            std::string piece =
                t.text.substr(pos, dot == std::string::npos ? dot : dot - pos);
            if (piece.empty())
              throw parse_error("empty letter in word '" + t.text + "'", t.line, t.col);
            w.push_back(piece);
            if (dot == std::string::npos) break;
            pos = dot + 1;
          }
        } else {
          bool all_single = true;
          for (const auto& [name, sym] : letters) all_single = all_single && name.size() == 1;
          if (all_single) {
            for (char c : t.text) w.push_back(std::string(1, c));
          } else {
            w.push_back(t.text);
          }
        }
        words->push_back(std::move(w));
      }
    } else {
      throw parse_error("unknown directive '" + head.text + "'", head.line, head.col);
    }
  }

  if (data && custom)
    throw parse_error("@preset cannot be combined with a custom alphabet", 1, 1);
  if (!data) {
    if (!custom) throw parse_error("missing @preset or @alphabet", 1, 1);
    data = HomotopyData(alphabet, tau_pairs, triples, shift_pairs);
  }
  if (!words) throw parse_error("missing @phrase", 1, 1);

  Nanophrase p;
  auto letter_id = [&](const std::string& name) {
    for (int i = 0; i < p.letter_count(); ++i)
      if (p.letters[i] == name) return i;
    p.letters.push_back(name);
    p.proj.push_back(-1);
    return p.letter_count() - 1;
  };
  for (const auto& [name, sym] : letters) {
    int id = letter_id(name);
    p.proj[id] = data->symbol(sym);  // -1 when unknown; validate reports it
  }
  for (const auto& w : *words) {
    std::vector<int> ids;
    for (const auto& name : w) ids.push_back(letter_id(name));
    p.words.push_back(std::move(ids));
  }
  return {*data, p};
}

inline Document parse_document_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what(), 1, 1);
  }
  try {
    std::optional<HomotopyData> data;
    if (j.contains("preset")) {
      data = preset(j.at("preset").get<std::string>());
    } else if (j.contains("alphabet")) {
      const auto& a = j.at("alphabet");
      std::vector<std::string> symbols = a.at("symbols").get<std::vector<std::string>>();
      std::vector<std::pair<std::string, std::string>> tau_pairs, shift_vec;
      if (a.contains("tau"))
        for (const auto& pr : a.at("tau"))
          tau_pairs.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
      std::optional<std::vector<std::pair<std::string, std::string>>> shift_pairs;
      if (a.contains("shift")) {
        for (const auto& pr : a.at("shift"))
          shift_vec.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
        shift_pairs = shift_vec;
      }
      std::vector<std::array<std::string, 3>> triples;
      if (a.contains("triples"))
        for (const auto& t : a.at("triples"))
          triples.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                             t.at(2).get<std::string>()});
      data = HomotopyData(symbols, tau_pairs, triples, shift_pairs);
    } else {
      throw error("document needs 'preset' or 'alphabet'");
    }
    Nanophrase p;
    auto letter_id = [&](const std::string& name) {
      for (int i = 0; i < p.letter_count(); ++i)
        if (p.letters[i] == name) return i;
      p.letters.push_back(name);
      p.proj.push_back(-1);
      return p.letter_count() - 1;
    };
    if (j.contains("letters"))
      for (auto it = j.at("letters").begin(); it != j.at("letters").end(); ++it)
        p.proj[letter_id(it.key())] = data->symbol(it.value().get<std::string>());
    for (const auto& w : j.at("phrase")) {
      std::vector<int> ids;
      for (const auto& name : w) ids.push_back(letter_id(name.get<std::string>()));
      p.words.push_back(std::move(ids));
    }
    return {*data, p};
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad document json: ") + e.what(), 1, 1);
  }
}

inline bool all_single_char_letters(const Nanophrase& p) {
  for (const auto& l : p.letters)
    if (l.size() != 1) return false;
  return !p.letters.empty();
}

inline std::string serialize_document(const Document& doc) {
  std::ostringstream os;
  const HomotopyData& d = doc.data;
  if (!d.name().empty()) {
    os << "@preset " << d.name() << "\n";
  } else {
    os << "@alphabet";
    for (const auto& s : d.symbol_names()) os << ' ' << s;
    os << "\n@tau";
    for (int i = 0; i < d.size(); ++i)
      if (d.tau(i) > i) os << ' ' << d.symbol_name(i) << ':' << d.symbol_name(d.tau(i));
    os << "\n@triples";
    for (const Triple& t : d.triples())
      os << " (" << d.symbol_name(t[0]) << ',' << d.symbol_name(t[1]) << ','
         << d.symbol_name(t[2]) << ')';
    os << "\n";
    if (d.has_shift()) {
      os << "@shift";
      for (int i = 0; i < d.size(); ++i)
        if (d.shift(i) > i)
          os << ' ' << d.symbol_name(i) << ':' << d.symbol_name(d.shift(i));
      os << "\n";
    }
  }
  const Nanophrase& p = doc.phrase;
  if (p.letter_count() > 0) {
    os << "@letters";
    for (int i = 0; i < p.letter_count(); ++i)
      os << ' ' << p.letters[i] << ':'
         << (p.proj[i] >= 0 ? d.symbol_name(p.proj[i]) : std::string("?"));
    os << "\n";
  }
  os << "@phrase";
  bool bare = all_single_char_letters(p);
  for (const auto& w : p.words) {
    os << ' ';
    if (w.empty()) {
      os << '-';
    } else if (bare) {
      for (int id : w) os << p.letters[id];
    } else {
      for (size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << p.letters[w[i]];
    }
  }
  os << "\n";
  return os.str();
}

inline nlohmann::json document_json(const Document& doc) {
  nlohmann::json j;
  const HomotopyData& d = doc.data;
  if (!d.name().empty()) {
    j["preset"] = d.name();
  } else {
    nlohmann::json a;
    a["symbols"] = d.symbol_names();
    auto pairs = nlohmann::json::array();
    for (int i = 0; i < d.size(); ++i)
      if (d.tau(i) > i)
        pairs.push_back({d.symbol_name(i), d.symbol_name(d.tau(i))});
    a["tau"] = pairs;
    auto trips = nlohmann::json::array();
    for (const Triple& t : d.triples())
      trips.push_back({d.symbol_name(t[0]), d.symbol_name(t[1]), d.symbol_name(t[2])});
    a["triples"] = trips;
    if (d.has_shift()) {
      auto sh = nlohmann::json::array();
      for (int i = 0; i < d.size(); ++i)
        if (d.shift(i) > i) sh.push_back({d.symbol_name(i), d.symbol_name(d.shift(i))});
      a["shift"] = sh;
    }
    j["alphabet"] = a;
  }
  nlohmann::json letters = nlohmann::json::object();
  for (int i = 0; i < doc.phrase.letter_count(); ++i)
    letters[doc.phrase.letters[i]] =
        doc.phrase.proj[i] >= 0 ? d.symbol_name(doc.phrase.proj[i]) : "?";
  j["letters"] = letters;
  auto words = nlohmann::json::array();
  for (const auto& w : doc.phrase.words) {
    auto jw = nlohmann::json::array();
    for (int id : w) jw.push_back(doc.phrase.letters[id]);
    words.push_back(jw);
  }
  j["phrase"] = words;
  return j;
}

// ---------------------------------------------------------------------------
// Gauss codes

inline SignedGaussCode parse_gauss(const std::string& text) {
  if (detail::looks_like_json(text)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(e.what(), 1, 1);
    }
    std::string flat = "@gausscode";
    bool first = true;
    for (const auto& comp : j.at("gausscode")) {
      if (!first) flat += " /";
      first = false;
      for (const auto& tok : comp) flat += " " + tok.get<std::string>();
    }
    return parse_gauss(flat);
  }
  SignedGaussCode code;
  bool seen = false;
  for (const auto& line : detail::tokenize(text)) {
    const auto& head = line.tokens.front();
    if (head.text != "@gausscode")
      throw parse_error("expected @gausscode, got '" + head.text + "'", head.line,
                        head.col);
    seen = true;
    code.push_back({});
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& t = line.tokens[i];
      if (t.text == "/") {
        code.push_back({});
        continue;
      }
      if (t.text.size() < 3)
        throw parse_error("passage '" + t.text + "' too short (want e.g. O1+)", t.line,
                          t.col);
      char kind = t.text.front(), sign = t.text.back();
      if (kind != 'O' && kind != 'U')
        throw parse_error("passage must start with O or U", t.line, t.col);
      if (sign != '+' && sign != '-')
        throw parse_error("passage must end with + or -", t.line, t.col);
      std::string label = t.text.substr(1, t.text.size() - 2);
      for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)))
          throw parse_error("crossing label must be alphanumeric", t.line, t.col);
      code.back().push_back({label, kind == 'O', sign == '+' ? +1 : -1});
    }
  }
  if (!seen) throw parse_error("missing @gausscode", 1, 1);
  return code;
}

inline std::string serialize_gauss(const SignedGaussCode& code) {
  std::string s = "@gausscode";
  for (size_t c = 0; c < code.size(); ++c) {
    if (c) s += " /";
    for (const auto& p : code[c])
      s += std::string(" ") + (p.over ? "O" : "U") + p.label + (p.sign > 0 ? "+" : "-");
  }
  s += "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Finite keis

inline FiniteKei parse_kei(const std::string& text) {
  FiniteKei k;
  bool have_header = false;
  int current_op = -1, rows_needed = 0;
  for (const auto& line : detail::tokenize(text)) {
    const auto& head = line.tokens.front();
    if (rows_needed > 0) {
      if (static_cast<int>(line.tokens.size()) != k.m)
        throw parse_error("operation row needs " + std::to_string(k.m) + " entries",
                          head.line, head.col);
      std::vector<int> row;
      for (const auto& t : line.tokens)
        row.push_back(detail::parse_int(t.text, t.line, t.col));
      k.op[current_op][k.m - rows_needed] = row;
      --rows_needed;
      continue;
    }
    if (head.text == "@kei") {
      have_header = true;
      std::vector<std::pair<std::string, std::string>> tau_pairs;
      for (size_t i = 1; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        size_t eq = t.text.find('=');
        if (eq == std::string::npos)
          throw parse_error("expected key=value, got '" + t.text + "'", t.line, t.col);
        std::string key = t.text.substr(0, eq), val = t.text.substr(eq + 1);
        if (key == "m") {
          k.m = detail::parse_int(val, t.line, t.col);
          if (k.m < 0) throw parse_error("carrier size must be nonnegative", t.line, t.col);
        } else if (key == "symbols") {
          size_t pos = 0;
          while (pos <= val.size()) {
            size_t comma = val.find(',', pos);
            std::string name =
                val.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (!name.empty()) k.alpha.names.push_back(name);
            if (comma == std::string::npos) break;
            pos = comma + 1;
          }
        } else if (key == "tau") {
          size_t colon = val.find(':');
          if (colon != std::string::npos)
            tau_pairs.emplace_back(val.substr(0, colon), val.substr(colon + 1));
        } else {
          throw parse_error("unknown @kei key '" + key + "'", t.line, t.col);
        }
      }
      k.alpha.tau.resize(k.alpha.names.size());
      for (size_t i = 0; i < k.alpha.tau.size(); ++i) k.alpha.tau[i] = static_cast<int>(i);
      for (const auto& [x, y] : tau_pairs) {
        int a = k.alpha.symbol(x), b = k.alpha.symbol(y);
        if (a < 0 || b < 0) throw parse_error("tau names unknown symbol", head.line, head.col);
        k.alpha.tau[a] = b;
        k.alpha.tau[b] = a;
      }
      k.act.assign(k.alpha.size(), {});
      k.op.assign(k.alpha.size(),
                  std::vector<std::vector<int>>(k.m, std::vector<int>(k.m, -1)));
    } else if (head.text == "@act") {
      if (!have_header) throw parse_error("@act before @kei", head.line, head.col);
      if (static_cast<int>(line.tokens.size()) != k.m + 2)
        throw parse_error("@act needs a symbol and m entries", head.line, head.col);
      int a = k.alpha.symbol(line.tokens[1].text);
      if (a < 0) throw parse_error("unknown symbol in @act", head.line, head.col);
      for (int i = 0; i < k.m; ++i)
        k.act[a].push_back(detail::parse_int(line.tokens[2 + i].text,
                                             line.tokens[2 + i].line,
                                             line.tokens[2 + i].col));
    } else if (head.text == "@op") {
      if (!have_header) throw parse_error("@op before @kei", head.line, head.col);
      if (line.tokens.size() != 2)
        throw parse_error("@op takes one symbol", head.line, head.col);
      current_op = k.alpha.symbol(line.tokens[1].text);
      if (current_op < 0) throw parse_error("unknown symbol in @op", head.line, head.col);
      rows_needed = k.m;
    } else {
      throw parse_error("unknown directive '" + head.text + "'", head.line, head.col);
    }
  }
  if (!have_header) throw parse_error("missing @kei", 1, 1);
  if (rows_needed > 0) throw parse_error("truncated @op table", 1, 1);
  return k;
}

inline std::string serialize_kei(const FiniteKei& k) {
  std::ostringstream os;
  os << "@kei m=" << k.m << " symbols=";
  for (int i = 0; i < k.alpha.size(); ++i) os << (i ? "," : "") << k.alpha.names[i];
  for (int i = 0; i < k.alpha.size(); ++i)
    if (k.alpha.tau[i] > i)
      os << " tau=" << k.alpha.names[i] << ':' << k.alpha.names[k.alpha.tau[i]];
  os << "\n";
  for (int a = 0; a < k.alpha.size(); ++a) {
    os << "@act " << k.alpha.names[a];
    for (int x : k.act[a]) os << ' ' << x;
    os << "\n";
  }
  for (int a = 0; a < k.alpha.size(); ++a) {
    os << "@op " << k.alpha.names[a] << "\n";
    for (int x = 0; x < k.m; ++x) {
      for (int y = 0; y < k.m; ++y) os << (y ? " " : "") << k.op[a][x][y];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace nw
