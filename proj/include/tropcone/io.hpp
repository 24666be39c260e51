#pragma once

#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "tropcone/basis.hpp"
#include "tropcone/system.hpp"

namespace tropcone {

// System file format: four rows of n whitespace-separated tokens each, in
// order A-row1, A-row2, B-row1, B-row2. A token is an exact integer, a
// rational p/q, or -inf. Lines starting with '#' (and trailing '#' comments)
// are ignored.

namespace detail {

struct Token {
  std::string text;
  int line;
  int column;
};

inline std::vector<std::vector<Token>> tokenize_rows(std::istream& in) {
  std::vector<std::vector<Token>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<Token> row;
    size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      if (p >= line.size()) break;
      const size_t start = p;
      while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      row.push_back({line.substr(start, p - start), lineno, static_cast<int>(start) + 1});
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

inline bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline Trop<Rat> parse_token(const Token& t) {
  const std::string& s = t.text;
  if (s == "-inf") return Trop<Rat>::bottom();
  size_t p = 0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  const size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!all_digits(s, p, s.size()))
        throw ParseError("malformed token '" + s + "'", t.line, t.column);
      return Trop<Rat>(Rat(std::stoll(s)));
    }
    if (!all_digits(s, p, slash) || !all_digits(s, slash + 1, s.size()))
      throw ParseError("malformed token '" + s + "'", t.line, t.column);
    const long long num = std::stoll(s.substr(0, slash));
    const long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'", t.line, t.column);
    return Trop<Rat>(Rat(num, den));
  } catch (const std::out_of_range&) {
    throw ParseError("token '" + s + "' out of range", t.line, t.column);
  }
}

}  // namespace detail

struct ParsedSystem {
  TwoRowSystem<Rat> system;
  bool integral;  // every finite entry has denominator 1
};

inline ParsedSystem parse_system(std::istream& in) {
  const auto rows = detail::tokenize_rows(in);
  if (rows.empty()) throw ParseError("empty system file", 1, 1);
  if (rows.size() != 4)
    throw ParseError("expected 4 rows (A-row1, A-row2, B-row1, B-row2), got " +
                         std::to_string(rows.size()),
                     rows.back().back().line, 1);
  const size_t n = rows[0].size();
  for (const auto& row : rows)
    if (row.size() != n)
      throw RowLengthMismatch("row has " + std::to_string(row.size()) +
                                  " tokens, expected " + std::to_string(n),
                              row[0].line);

  TropMatrix<Rat> a(2, static_cast<Eigen::Index>(n)), b(2, static_cast<Eigen::Index>(n));
  bool integral = true;
  for (int r = 0; r < 4; ++r)
    for (size_t c = 0; c < n; ++c) {
      const Trop<Rat> v = detail::parse_token(rows[static_cast<size_t>(r)][c]);
      if (v.is_finite() && v.value().den() != 1) integral = false;
      (r < 2 ? a : b)(r % 2, static_cast<Eigen::Index>(c)) = v;
    }
  return {TwoRowSystem<Rat>(std::move(a), std::move(b)), integral};
}

inline ParsedSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  return parse_system(in);
}

inline std::string token(const Trop<Int>& t) {
  return t.is_bottom() ? "-inf" : std::to_string(t.value());
}

inline std::string token(const Trop<Rat>& t) {
  if (t.is_bottom()) return "-inf";
  std::ostringstream os;
  os << t.value();
  return os.str();
}

inline TwoRowSystem<Int> to_integer(const TwoRowSystem<Rat>& sys) {
  TropMatrix<Int> a(2, sys.A.cols()), b(2, sys.B.cols());
  for (int r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < sys.A.cols(); ++c) {
      if (sys.A(r, c).is_finite()) a(r, c) = Trop<Int>(sys.A(r, c).value().num());
      if (sys.B(r, c).is_finite()) b(r, c) = Trop<Int>(sys.B(r, c).value().num());
    }
  return TwoRowSystem<Int>(std::move(a), std::move(b));
}

inline TwoRowSystem<Rat> to_rational(const TwoRowSystem<Int>& sys) {
  TropMatrix<Rat> a(2, sys.A.cols()), b(2, sys.B.cols());
  for (int r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < sys.A.cols(); ++c) {
      if (sys.A(r, c).is_finite()) a(r, c) = Trop<Rat>(Rat(sys.A(r, c).value()));
      if (sys.B(r, c).is_finite()) b(r, c) = Trop<Rat>(Rat(sys.B(r, c).value()));
    }
  return TwoRowSystem<Rat>(std::move(a), std::move(b));
}

template <class T>
std::string render_system(const TwoRowSystem<T>& sys) {
  std::string out;
  for (const TropMatrix<T>* m : {&sys.A, &sys.B})
    for (int r = 0; r < 2; ++r) {
      for (Eigen::Index c = 0; c < m->cols(); ++c) {
        if (c) out += ' ';
        out += token((*m)(r, c));
      }
      out += '\n';
    }
  return out;
}

/// Vectors for `verify`: accepts plain rows of n tokens as well as the
/// solve output format (tokens after a `vec=` marker; `basis size:` summary
/// lines are skipped).
inline std::vector<TropVector<Rat>> parse_vectors(std::istream& in, int n) {
  std::vector<TropVector<Rat>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string body = line;
    const size_t marker = line.find("vec=");
    if (marker != std::string::npos)
      body = line.substr(marker + 4);
    else if (line.find("basis size") != std::string::npos)
      continue;
    std::istringstream ls(body);
    std::vector<std::string> words;
    std::string w;
    while (ls >> w) words.push_back(w);
    if (words.empty()) continue;
    if (static_cast<int>(words.size()) != n)
      throw RowLengthMismatch("vector has " + std::to_string(words.size()) +
                                  " tokens, expected " + std::to_string(n),
                              lineno);
    TropVector<Rat> v(n);
    for (int c = 0; c < n; ++c)
      v(c) = detail::parse_token({words[static_cast<size_t>(c)], lineno, c + 1});
    out.push_back(std::move(v));
  }
  return out;
}

/// One solve output line: `class=<family> i=<i> k=<k> l=<l> vec= t1 ... tn`
/// with 1-based indices and '-' for unused slots, canonical scaling.
template <class T>
std::string format_generator(const Generator<T>& g, int n) {
  auto idx = [](int v) { return v < 0 ? std::string("-") : std::to_string(v + 1); };
  std::string out = "class=";
  out += to_string(g.klass);
  out += " i=" + idx(g.i) + " k=" + idx(g.k) + " l=" + idx(g.l) + " vec=";
  const TropVector<T> v = g.dense(n);
  for (int c = 0; c < n; ++c) {
    out += ' ';
    out += token(v(c));
  }
  return out;
}

}  // namespace tropcone
