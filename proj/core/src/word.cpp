#include "gamma2/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gamma2 {

std::string Letter::to_string() const {
  std::string s = sym.to_string();
  if (exp != 1) s += "^" + std::to_string(exp);
  return s;
}

size_t Word::length() const {
  size_t total = 0;
  for (const auto& l : letters_) total += static_cast<size_t>(l.exp < 0 ? -l.exp : l.exp);
  return total;
}

Word& Word::append(const Letter& l) {
  if (l.exp != 0) letters_.push_back(l);
  return *this;
}

Word& Word::append(const Word& w) {
  for (const auto& l : w.letters_) append(l);
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word out = *this;
  out.append(rhs);
  return free_reduce(out);
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += l.to_string();
  }
  return s;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().sym == l.sym) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.syllables());
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back({it->sym, -it->exp});
  return Word(std::move(out));
}

Word power(const Word& w, long long k) {
  Word base = k < 0 ? inverse(w) : w;
  long long reps = k < 0 ? -k : k;
  Word out;
  for (long long r = 0; r < reps; ++r) out.append(base);
  return free_reduce(out);
}

Word conjugate(const Word& u, const Word& v) {
  Word out = inverse(v);
  out.append(u);
  out.append(v);
  return free_reduce(out);
}

Word commutator(const Word& u, const Word& v) {
  Word out = inverse(u);
  out.append(inverse(v));
  out.append(u);
  out.append(v);
  return free_reduce(out);
}

std::vector<Letter> flatten(const Word& w) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    long long step = l.exp < 0 ? -1 : 1;
    for (long long r = 0; r < (l.exp < 0 ? -l.exp : l.exp); ++r) out.push_back({l.sym, step});
  }
  return out;
}

Word from_flat(const std::vector<Letter>& flat) {
  return free_reduce(Word(flat));
}

IntMatrix evaluate(const Word& w, int n) {
  IntMatrix out = IntMatrix::identity(n);
  for (const auto& l : w.letters())
    out = out * generator_matrix(l.sym, n).pow(l.exp);
  return out;
}

namespace {

std::vector<Letter> cyclic_reduce_flat(std::vector<Letter> f) {
  while (f.size() >= 2 && f.front().sym == f.back().sym && f.front().exp == -f.back().exp) {
    f.erase(f.begin());
    f.pop_back();
  }
  return f;
}

std::vector<Letter> invert_flat(const std::vector<Letter>& f) {
  std::vector<Letter> out;
  out.reserve(f.size());
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back({it->sym, -it->exp});
  return out;
}

}  // namespace

Word cyclic_normal_form(const Word& w, const std::set<GeneratorId>& involutions) {
  std::vector<Letter> base = cyclic_reduce_flat(flatten(free_reduce(w)));
  if (base.empty()) return Word();
  auto normalize = [&involutions](std::vector<Letter> rot) {
    if (!involutions.empty())
      for (auto& l : rot)
        if (l.exp == -1 && involutions.count(l.sym)) l.exp = 1;
    return rot;
  };
  std::vector<Letter> best;
  bool have = false;
  for (const auto& seq : {base, invert_flat(base)}) {
    for (size_t r = 0; r < seq.size(); ++r) {
      std::vector<Letter> rot(seq.begin() + static_cast<long>(r), seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<long>(r));
      rot = normalize(std::move(rot));
      if (!have || rot < best) {
        best = std::move(rot);
        have = true;
      }
    }
  }
  return from_flat(best);
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_separators() {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
      ++pos;
  }

  bool eof() {
    skip_separators();
    return pos >= s.size();
  }

  int parse_index() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected index", start);
    return std::stoi(s.substr(start, pos - start));
  }

  void expect(char ch) {
    if (pos >= s.size() || s[pos] != ch)
      throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  }

  long long parse_exponent() {
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected exponent", start);
    return std::stoll(s.substr(start, pos - start));
  }

  Letter parse_token() {
    size_t tok_start = pos;
    char head = s[pos];
    bool indexed = (head == 'E' || head == 'F' || head == 'T' || head == 'S') &&
                   pos + 1 < s.size() && s[pos + 1] == '(';
    GeneratorId sym;
    if (indexed) {
      pos += 2;
      int i = parse_index();
      if (head == 'E' || head == 'T') {
        expect(',');
        int j = parse_index();
        expect(')');
        sym = head == 'E' ? GeneratorId::E(i, j) : GeneratorId::T(i, j);
        if (i == j) throw ParseError("E/T require distinct indices", tok_start);
      } else {
        expect(')');
        sym = head == 'F' ? GeneratorId::F(i) : GeneratorId::S(i);
      }
    } else {
      if (!std::isalpha(static_cast<unsigned char>(head)) && head != '_')
        throw ParseError("expected generator token", pos);
      size_t start = pos;
      auto ident_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '@';
      };
      while (pos < s.size() && ident_char(s[pos])) ++pos;
      sym = GeneratorId::named(s.substr(start, pos - start));
    }
    long long exp = parse_exponent();
    return {sym, exp};
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  Parser p(text);
  Word out;
  while (!p.eof()) out.append(p.parse_token());
  return out;
}

}  // namespace gamma2
