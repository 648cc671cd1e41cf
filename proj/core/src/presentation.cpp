#include "gamma2/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gamma2 {

const IntMatrix& Presentation::matrix_of(const GeneratorId& g) const {
  auto it = evaluation.find(g);
  if (it == evaluation.end())
    throw std::invalid_argument("no evaluation for generator " + g.to_string());
  return it->second;
}

IntMatrix Presentation::eval(const Word& w) const {
  if (!has_evaluation()) throw std::logic_error("presentation has no evaluation");
  IntMatrix out = IntMatrix::identity(n);
  for (const auto& l : w.letters()) out = out * matrix_of(l.sym).pow(l.exp);
  return out;
}

namespace {

Word sq(const Word& w) { return free_reduce(w * w); }

void attach_canonical_eval(Presentation& p) {
  for (const auto& g : p.generators) p.evaluation.emplace(g, generator_matrix(g, p.n));
}

}  // namespace

Presentation gamma2_presentation(int n) {
  if (n < 1) throw std::invalid_argument("gamma2_presentation requires n >= 1");
  Presentation p;
  p.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) p.generators.push_back(GeneratorId::E(i, j));
  for (int i = 1; i <= n; ++i) p.generators.push_back(GeneratorId::F(i));

  auto Ew = [](int i, int j) { return Word::of(GeneratorId::E(i, j)); };
  auto Fw = [](int i) { return Word::of(GeneratorId::F(i)); };

  // involutions
  for (int i = 1; i <= n; ++i) p.relators.push_back(Word::of(GeneratorId::F(i), 2));
  // squared pairs, ordered (i,j) lexicographic, then the F-pairs
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      p.relators.push_back(sq(Ew(i, j) * Fw(i)));
      p.relators.push_back(sq(Ew(i, j) * Fw(j)));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.relators.push_back(sq(Fw(i) * Fw(j)));
  // triple-index commutators, four shapes per ordered (i,j,k), deduplicated
  std::set<Word> seen;
  auto emit = [&](const Word& w) {
    Word nf = cyclic_normal_form(w);
    if (seen.insert(nf).second) p.relators.push_back(w);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        emit(commutator(Ew(i, j), Ew(i, k)));
        emit(commutator(Ew(i, j), Ew(k, j)));
        emit(commutator(Ew(i, j), Fw(k)));
        emit(free_reduce(commutator(Ew(i, j), Ew(k, i)) * power(Ew(k, j), 2)));
      }
  // long triple commutators, i < j < k
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Word u = Ew(j, i) * Fw(j) * Ew(i, j) * Fw(i) * power(Ew(k, i), -1) * Ew(k, j);
        Word v = Ew(k, i) * Fw(k) * Ew(i, k) * Fw(i) * power(Ew(j, i), -1) * Ew(j, k);
        p.relators.push_back(commutator(u, v));
      }
  // disjoint commutators, deduplicated
  std::set<Word> seen4;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || k == l || i == k || i == l || j == k || j == l) continue;
          Word w = commutator(Ew(i, j), Ew(k, l));
          Word nf = cyclic_normal_form(w);
          if (seen4.insert(nf).second) p.relators.push_back(w);
        }

  attach_canonical_eval(p);
  return p;
}

std::vector<size_t> gamma2_relator_family_sizes(int n) {
  const size_t un = static_cast<size_t>(n);
  std::vector<size_t> sizes(5, 0);
  sizes[0] = un;
  if (n >= 2) sizes[1] = 2 * un * (un - 1) + un * (un - 1) / 2;
  if (n >= 3) {
    sizes[2] = 3 * un * (un - 1) * (un - 2);
    sizes[3] = un * (un - 1) * (un - 2) / 6;
  }
  if (n >= 4) sizes[4] = un * (un - 1) * (un - 2) * (un - 3) / 2;
  return sizes;
}

Presentation gl2z_presentation() {
  Presentation p;
  p.n = 2;
  GeneratorId x = GeneratorId::named("x");
  GeneratorId y = GeneratorId::named("y");
  GeneratorId z = GeneratorId::named("z");
  p.generators = {x, y, z};
  Word wx = Word::of(x), wy = Word::of(y), wz = Word::of(z);
  p.relators = {
      free_reduce(wx * wy * wx * inverse(wy) * inverse(wx) * inverse(wy)),
      power(wx * wy, 6),
      Word::of(z, 2),
      free_reduce(wx * wz * wy * wz),
  };
  IntMatrix mx(2), my(2), mz(2);
  mx.at(0, 0) = 1; mx.at(0, 1) = -1; mx.at(1, 1) = 1;
  my.at(0, 0) = 1; my.at(1, 0) = 1; my.at(1, 1) = 1;
  mz.at(0, 1) = 1; mz.at(1, 0) = 1;
  p.evaluation = {{x, mx}, {y, my}, {z, mz}};
  return p;
}

GeneratorId rho_shift(const GeneratorId& g, int t) {
  auto lift = [t](int idx) { return idx >= t ? idx + 1 : idx; };
  switch (g.kind) {
    case GeneratorId::Kind::E: return GeneratorId::E(lift(g.i), lift(g.j));
    case GeneratorId::Kind::F: return GeneratorId::F(lift(g.i));
    default:
      throw std::invalid_argument("rho_shift expects an E or F symbol, got " + g.to_string());
  }
}

Presentation stabilizer_presentation(int n, int t, const Presentation& inner) {
  if (t < 1 || t > n) throw std::invalid_argument("stabilizer axis out of range");
  if (!inner.has_evaluation())
    throw std::invalid_argument("inner presentation lacks an evaluation");
  if (inner.n != n - 1)
    throw std::invalid_argument("inner presentation must live at dimension n-1");

  Presentation p;
  p.n = n;
  for (int i = 1; i <= n; ++i)
    if (i != t) p.generators.push_back(GeneratorId::E(t, i));
  for (const auto& g : inner.generators) p.generators.push_back(rho_shift(g, t));

  auto Ew = [](int i, int j) { return Word::of(GeneratorId::E(i, j)); };
  auto Fw = [](int i) { return Word::of(GeneratorId::F(i)); };

  // row-generator commutators
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i != t && j != t) p.relators.push_back(commutator(Ew(t, i), Ew(t, j)));
  // lifted inner relators
  for (const auto& r : inner.relators) {
    Word lifted;
    for (const auto& l : r.letters()) lifted.append({rho_shift(l.sym, t), l.exp});
    p.relators.push_back(free_reduce(lifted));
  }
  // mixed families
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || i == t || j == t) continue;
      p.relators.push_back(
          free_reduce(commutator(Ew(i, j), Ew(t, i)) * power(Ew(t, j), 2)));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || i == t || j == t) continue;
      p.relators.push_back(commutator(Ew(i, j), Ew(t, j)));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == t || j == t || k == t) continue;
        if (i == j || i == k || j == k) continue;
        p.relators.push_back(commutator(Ew(i, j), Ew(t, k)));
      }
  for (int i = 1; i <= n; ++i)
    if (i != t) p.relators.push_back(sq(Ew(t, i) * Fw(i)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || i == t || j == t) continue;
      p.relators.push_back(commutator(Ew(t, j), Fw(i)));
    }

  attach_canonical_eval(p);
  return p;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

using json = nlohmann::ordered_json;

std::string gap_name(const GeneratorId& g) {
  std::string s = g.to_string();
  std::string out;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') out.push_back(c);
  return out;
}

std::string gap_word(const Word& w, const std::map<GeneratorId, size_t>& index) {
  if (w.empty()) return "One(F)";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += "*";
    out += "F." + std::to_string(index.at(l.sym) + 1);
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Presentation from_parts(int n, const std::vector<std::string>& gens,
                        const std::vector<std::string>& rels) {
  Presentation p;
  p.n = n;
  for (const auto& g : gens) {
    Word w = parse_word(g);
    if (w.syllables() != 1 || w.letters()[0].exp != 1)
      throw ParseError("generator must be a single symbol: '" + g + "'", 0);
    p.generators.push_back(w.letters()[0].sym);
  }
  for (const auto& r : rels) p.relators.push_back(parse_word(r));
  std::set<GeneratorId> known(p.generators.begin(), p.generators.end());
  for (const auto& r : p.relators)
    for (const auto& l : r.letters())
      if (!known.count(l.sym))
        throw ParseError("relator uses unknown generator " + l.sym.to_string(), 0);
  bool canonical = n >= 1 && std::all_of(p.generators.begin(), p.generators.end(),
                                         [](const GeneratorId& g) {
                                           return g.kind != GeneratorId::Kind::Named;
                                         });
  if (canonical)
    for (const auto& g : p.generators) p.evaluation.emplace(g, generator_matrix(g, n));
  return p;
}

}  // namespace

std::string serialize(const Presentation& p, PresentationFormat f) {
  switch (f) {
    case PresentationFormat::json: {
      json j;
      j["n"] = p.n;
      j["generators"] = json::array();
      for (const auto& g : p.generators) j["generators"].push_back(g.to_string());
      j["relators"] = json::array();
      for (const auto& r : p.relators) j["relators"].push_back(r.to_string());
      return j.dump(2) + "\n";
    }
    case PresentationFormat::gap: {
      std::map<GeneratorId, size_t> index;
      std::ostringstream os;
      os << "F := FreeGroup(";
      for (size_t i = 0; i < p.generators.size(); ++i) {
        index[p.generators[i]] = i;
        os << (i ? ", " : " ") << '"' << gap_name(p.generators[i]) << '"';
      }
      os << " );\nrels := [\n";
      for (size_t i = 0; i < p.relators.size(); ++i)
        os << "  " << gap_word(p.relators[i], index)
           << (i + 1 < p.relators.size() ? "," : "") << "\n";
      os << "];\n";
      return os.str();
    }
    case PresentationFormat::plain: {
      std::ostringstream os;
      os << "gens:";
      for (size_t i = 0; i < p.generators.size(); ++i)
        os << (i ? ", " : " ") << p.generators[i].to_string();
      os << "; rels:";
      for (size_t i = 0; i < p.relators.size(); ++i)
        os << (i ? ", " : " ") << p.relators[i].to_string();
      return os.str();
    }
  }
  throw std::logic_error("unreachable");
}

Presentation parse_presentation(const std::string& text, PresentationFormat f) {
  switch (f) {
    case PresentationFormat::json: {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("json: ") + e.what(), e.byte);
      }
      if (!j.is_object() || !j.contains("n") || !j.contains("generators") ||
          !j.contains("relators"))
        throw ParseError("json: expected object with n, generators, relators", 0);
      return from_parts(j["n"].get<int>(),
                        j["generators"].get<std::vector<std::string>>(),
                        j["relators"].get<std::vector<std::string>>());
    }
    case PresentationFormat::plain: {
      size_t g = text.find("gens:");
      size_t semi = text.find(';', g == std::string::npos ? 0 : g);
      size_t r = text.find("rels:", semi == std::string::npos ? 0 : semi);
      if (g == std::string::npos || semi == std::string::npos || r == std::string::npos)
        throw ParseError("plain: expected 'gens: ...; rels: ...'", 0);
      auto split = [](const std::string& s) {
        // top-level commas only; E(i,j) tokens carry commas of their own
        std::vector<std::string> out;
        std::string cur;
        int depth = 0;
        auto flush = [&] {
          size_t b = cur.find_first_not_of(" \t");
          size_t e = cur.find_last_not_of(" \t");
          if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
          cur.clear();
        };
        for (char ch : s) {
          if (ch == '(') ++depth;
          if (ch == ')') --depth;
          if (ch == ',' && depth == 0) {
            flush();
            continue;
          }
          cur.push_back(ch);
        }
        flush();
        return out;
      };
      std::vector<std::string> gens = split(text.substr(g + 5, semi - g - 5));
      std::vector<std::string> rels = split(text.substr(r + 5));
      Presentation p = from_parts(0, gens, rels);
      // plain text carries no dimension; attach one when all symbols are
      // indexed and the largest index bounds it
      int max_idx = 0;
      bool canonical = true;
      for (const auto& gen : p.generators) {
        if (gen.kind == GeneratorId::Kind::Named) canonical = false;
        max_idx = std::max({max_idx, gen.i, gen.j});
      }
      if (canonical && max_idx >= 1) {
        p.n = max_idx;
        for (const auto& gen : p.generators)
          p.evaluation.emplace(gen, generator_matrix(gen, p.n));
      }
      return p;
    }
    case PresentationFormat::gap:
      throw ParseError("gap format is write-only", 0);
  }
  throw std::logic_error("unreachable");
}

}  // namespace gamma2
