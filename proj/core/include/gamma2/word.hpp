#pragma once

#include <set>
#include <string>
#include <vector>

#include "gamma2/generator.hpp"
#include "gamma2/int_matrix.hpp"

namespace gamma2 {

/// One syllable of a word: a symbol with a nonzero integer exponent.
struct Letter {
  GeneratorId sym;
  long long exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;

  std::string to_string() const;
};

/// Free-group word, stored run-length (syllables carry exponents). A word is
/// in reduced form when adjacent syllables have distinct symbols and no
/// exponent is zero; free_reduce produces that form.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  static Word of(const GeneratorId& g, long long exp = 1) { return Word({Letter{g, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t syllables() const { return letters_.size(); }
  /// Total letter count, exponents counted with multiplicity.
  size_t length() const;

  Word& append(const Letter& l);
  Word& append(const Word& w);
  Word operator*(const Word& rhs) const;  // concatenation + free reduction
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

  std::string to_string() const;  // word grammar; empty word renders as ""

 private:
  std::vector<Letter> letters_;
};

/// Merge adjacent same-symbol syllables and drop zero exponents, to fixpoint.
Word free_reduce(const Word& w);

Word inverse(const Word& w);
Word power(const Word& w, long long k);
/// v^-1 u v, reduced.
Word conjugate(const Word& u, const Word& v);
/// u^-1 v^-1 u v, reduced.
Word commutator(const Word& u, const Word& v);

/// Expand to single-exponent syllables (+-1 each).
std::vector<Letter> flatten(const Word& w);
Word from_flat(const std::vector<Letter>& flat);

/// Left-to-right product of generator matrices at dimension n. Named symbols
/// are rejected; evaluate presentations through Presentation::eval instead.
IntMatrix evaluate(const Word& w, int n);

/// Canonical form for relator comparison "up to conjugation": cyclically
/// reduce, then take the least rotation over the word and its inverse.
/// Symbols listed in `involutions` have their exponents normalized to +1 in
/// every candidate rotation, so X^-1 and X compare equal for those symbols.
Word cyclic_normal_form(const Word& w, const std::set<GeneratorId>& involutions = {});

/// Parse the word grammar: tokens separated by whitespace or '*', each token
/// "E(i,j)", "F(i)", "T(i,j)", "S(i)" or an identifier, with an optional
/// "^<signed int>" suffix. Throws ParseError with a byte offset on bad input.
Word parse_word(const std::string& text);

struct ParseError : std::invalid_argument {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace gamma2
