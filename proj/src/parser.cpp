#include "lieforge/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lieforge {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(strip(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

long to_long(const std::string& s, std::size_t line, const char* what) {
  if (!is_integer(s)) {
    throw ParseError(line, std::string("expected an integer ") + what +
                               ", got '" + s + "'");
  }
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("integer out of range: '") + s + "'");
  }
}

mpq_class to_rational(const std::string& s, std::size_t line) {
  auto parts = split(s, '/');
  if (parts.size() > 2) {
    throw ParseError(line, "malformed rational '" + s + "'");
  }
  long num = to_long(parts[0], line, "numerator");
  long den = parts.size() == 2 ? to_long(parts[1], line, "denominator") : 1;
  if (den == 0) throw ParseError(line, "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// "[i,j]" on the left of '='; returns 0-based indices
std::pair<std::size_t, std::size_t> parse_bracket_lhs(const std::string& lhs,
                                                      std::size_t dim,
                                                      std::size_t line) {
  std::string t = strip(lhs);
  if (t.size() < 5 || t.front() != '[' || t.back() != ']') {
    throw ParseError(line, "expected a bracket pair like [1,2]");
  }
  auto idx = split(t.substr(1, t.size() - 2), ',');
  if (idx.size() != 2) {
    throw ParseError(line, "expected exactly two indices in '" + t + "'");
  }
  long i = to_long(idx[0], line, "index");
  long j = to_long(idx[1], line, "index");
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > dim ||
      static_cast<std::size_t>(j) > dim) {
    throw ParseError(line, "index out of range in '" + t + "' (dim " +
                               std::to_string(dim) + ")");
  }
  return {static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1};
}

// RHS combination "c1*k1 + c2*k2" or "0"; calls put(coeff, index) per term
template <typename Put>
void parse_combination(const std::string& rhs, std::size_t dim,
                       std::size_t line, Put put) {
  std::string t = strip(rhs);
  if (t == "0") return;
  for (const std::string& term : split(t, '+')) {
    if (term.empty()) throw ParseError(line, "empty term in '" + rhs + "'");
    auto parts = split(term, '*');
    if (parts.size() > 2) {
      throw ParseError(line, "malformed term '" + term + "'");
    }
    std::string idx_tok = parts.back();
    long k = to_long(idx_tok, line, "basis index");
    if (k < 1 || static_cast<std::size_t>(k) > dim) {
      throw ParseError(line, "basis index out of range in '" + term + "'");
    }
    mpq_class c = parts.size() == 2 ? to_rational(parts[0], line)
                                    : mpq_class(1);
    put(c, static_cast<std::size_t>(k) - 1);
  }
}

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = strip(raw);
    if (!raw.empty()) out.push_back({n, raw});
  }
  return out;
}

Field parse_field(const std::string& tok, std::size_t line) {
  if (tok == "Q") return Field::rationals();
  if (tok.size() >= 2 && tok[0] == 'F' && is_integer(tok.substr(1))) {
    long p = to_long(tok.substr(1), line, "characteristic");
    if (p < 2) throw ParseError(line, "characteristic must be at least 2");
    try {
      return Field::gf(static_cast<std::uint64_t>(p));
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  throw ParseError(line, "unknown field '" + tok + "' (use Q or F<p>)");
}

DefinitionFile parse_algebra(const std::vector<Line>& lines, std::size_t at,
                             const std::string& name, Field f,
                             std::size_t dim) {
  std::vector<Vec> c(dim * dim, zero_vec(f, dim));
  std::vector<std::vector<char>> given(dim, std::vector<char>(dim, 0));

  while (at < lines.size() && lines[at].text[0] == '[') {
    const Line& ln = lines[at];
    auto eq = ln.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError(ln.number, "bracket line needs '='");
    }
    auto [i, j] = parse_bracket_lhs(ln.text.substr(0, eq), dim, ln.number);
    Vec v = zero_vec(f, dim);
    parse_combination(ln.text.substr(eq + 1), dim, ln.number,
                      [&](const mpq_class& q, std::size_t k) {
                        v[k] = v[k] + Scalar::from_mpq(f, q);
                      });
    if (i == j && !vec_is_zero(v)) {
      throw ValidationError(ValidationError::Kind::not_alternating, i, i, 0,
                            "line " + std::to_string(ln.number) + ": [" +
                                std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + "] must be zero");
    }
    if (given[i][j]) {
      throw ParseError(ln.number, "duplicate bracket [" +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + "]");
    }
    given[i][j] = 1;
    c[i * dim + j] = v;
    if (given[j][i]) {
      if (c[j * dim + i] != vec_neg(v)) {
        throw ValidationError(
            ValidationError::Kind::not_antisymmetric, i, j, 0,
            "line " + std::to_string(ln.number) + ": [" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                "] conflicts with the earlier [" + std::to_string(j + 1) +
                "," + std::to_string(i + 1) + "]");
      }
    } else {
      c[j * dim + i] = vec_neg(v);
    }
    ++at;
  }

  DefinitionFile df;
  df.algebra = LieAlgebra::validated(name, f, dim, std::move(c));

  // optional representation blocks
  while (at < lines.size()) {
    auto head = words(lines[at].text);
    if (head.size() != 5 || head[0] != "rep" || head[2] != "on" ||
        head[3] != "dim") {
      throw ParseError(lines[at].number,
                       "expected 'rep NAME on dim M', got '" +
                           lines[at].text + "'");
    }
    long m = to_long(head[4], lines[at].number, "module dimension");
    if (m < 1) throw ParseError(lines[at].number, "module dimension < 1");
    std::size_t mdim = static_cast<std::size_t>(m);
    std::vector<Matrix> phi(dim, Matrix(f, mdim, mdim));
    ++at;
    while (at < lines.size() && words(lines[at].text)[0] == "phi") {
      const Line& ln = lines[at];
      auto eq = ln.text.find('=');
      if (eq == std::string::npos) {
        throw ParseError(ln.number, "phi line needs '='");
      }
      auto head_words = words(ln.text.substr(0, eq));
      if (head_words.size() != 2) {
        throw ParseError(ln.number, "expected 'phi i = [...]'");
      }
      long gi = to_long(head_words[1], ln.number, "generator index");
      if (gi < 1 || static_cast<std::size_t>(gi) > dim) {
        throw ParseError(ln.number, "generator index out of range");
      }
      std::string body = strip(ln.text.substr(eq + 1));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw ParseError(ln.number, "matrix literal must be bracketed");
      }
      auto rows = split(body.substr(1, body.size() - 2), ';');
      if (rows.size() != mdim) {
        throw ParseError(ln.number, "expected " + std::to_string(mdim) +
                                        " matrix rows");
      }
      Matrix mat(f, mdim, mdim);
      for (std::size_t r = 0; r < mdim; ++r) {
        auto cells = split(rows[r], ',');
        if (cells.size() != mdim) {
          throw ParseError(ln.number, "expected " + std::to_string(mdim) +
                                          " entries per row");
        }
        for (std::size_t cix = 0; cix < mdim; ++cix) {
          mat.at(r, cix) =
              Scalar::from_mpq(f, to_rational(cells[cix], ln.number));
        }
      }
      phi[static_cast<std::size_t>(gi) - 1] = mat;
      ++at;
    }
    df.reps.push_back(
        Representation::validated(head[1], *df.algebra, std::move(phi)));
  }
  return df;
}

DefinitionFile parse_ring(const std::vector<Line>& lines, std::size_t at,
                          const std::string& name,
                          const std::vector<std::uint32_t>& factors) {
  const std::size_t r = factors.size();

  // encode sums of generators without a ring instance
  std::vector<std::uint64_t> strides(r);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < r; ++i) {
    strides[i] = order;
    order *= factors[i];
  }

  std::vector<std::vector<std::uint32_t>> table(
      r, std::vector<std::uint32_t>(r, 0));
  std::vector<std::vector<char>> given(r, std::vector<char>(r, 0));

  auto neg = [&](std::uint32_t a) {
    std::uint64_t e = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::uint64_t ak = (a / strides[k]) % factors[k];
      e += ((factors[k] - ak) % factors[k]) * strides[k];
    }
    return static_cast<std::uint32_t>(e);
  };

  while (at < lines.size()) {
    const Line& ln = lines[at];
    if (ln.text[0] != '[') {
      throw ParseError(ln.number, "unexpected line in a ring definition: '" +
                                      ln.text + "'");
    }
    auto eq = ln.text.find('=');
    if (eq == std::string::npos) {
      throw ParseError(ln.number, "bracket line needs '='");
    }
    auto [i, j] = parse_bracket_lhs(ln.text.substr(0, eq), r, ln.number);
    std::uint64_t code = 0;
    parse_combination(
        ln.text.substr(eq + 1), r, ln.number,
        [&](const mpq_class& q, std::size_t k) {
          if (q.get_den() != 1) {
            throw ParseError(ln.number,
                             "ring coefficients must be integers");
          }
          long c = static_cast<long>(q.get_num().get_si());
          long m = static_cast<long>(factors[k]);
          long res = ((c % m) + m) % m;
          std::uint64_t ck = (code / strides[k]) % factors[k];
          code -= ck * strides[k];
          code += ((ck + static_cast<std::uint64_t>(res)) % factors[k]) *
                  strides[k];
        });
    std::uint32_t v = static_cast<std::uint32_t>(code);
    if (i == j && v != 0) {
      throw ValidationError(ValidationError::Kind::not_alternating, i, i, 0,
                            "line " + std::to_string(ln.number) + ": [" +
                                std::to_string(i + 1) + "," +
                                std::to_string(i + 1) + "] must be zero");
    }
    if (given[i][j]) {
      throw ParseError(ln.number, "duplicate bracket [" +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + "]");
    }
    given[i][j] = 1;
    table[i][j] = v;
    if (given[j][i]) {
      if (table[j][i] != neg(v)) {
        throw ValidationError(
            ValidationError::Kind::not_antisymmetric, i, j, 0,
            "line " + std::to_string(ln.number) + ": [" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                "] conflicts with the earlier [" + std::to_string(j + 1) +
                "," + std::to_string(i + 1) + "]");
      }
    } else if (i != j) {
      table[j][i] = neg(v);
    }
    ++at;
  }

  DefinitionFile df;
  df.ring = FiniteLieRing::validated(name, factors, std::move(table));
  return df;
}

}  // namespace

DefinitionFile parse_definition(const std::string& text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty definition");

  auto head = words(lines[0].text);
  if (head[0] == "algebra") {
    if (head.size() != 6 || head[2] != "over" || head[4] != "dim") {
      throw ParseError(lines[0].number,
                       "expected 'algebra NAME over FIELD dim N'");
    }
    Field f = parse_field(head[3], lines[0].number);
    long dim = to_long(head[5], lines[0].number, "dimension");
    if (dim < 0) throw ParseError(lines[0].number, "negative dimension");
    return parse_algebra(lines, 1, head[1], f,
                         static_cast<std::size_t>(dim));
  }
  if (head[0] == "ring") {
    if (head.size() < 3 || head[2] != "factors") {
      throw ParseError(lines[0].number,
                       "expected 'ring NAME factors m1,m2,...'");
    }
    std::string rest;
    for (std::size_t w = 3; w < head.size(); ++w) rest += head[w];
    std::vector<std::uint32_t> factors;
    for (const std::string& tok : split(rest, ',')) {
      long m = to_long(tok, lines[0].number, "factor");
      if (m < 2) {
        throw ParseError(lines[0].number, "factors must be at least 2");
      }
      factors.push_back(static_cast<std::uint32_t>(m));
    }
    return parse_ring(lines, 1, head[1], factors);
  }
  throw ParseError(lines[0].number,
                   "definition must start with 'algebra' or 'ring'");
}

DefinitionFile parse_definition_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition(buf.str());
}

namespace {

std::string rational_str(const mpq_class& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::string combination_str(const Vec& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[k].is_one()) {
      out += std::to_string(k + 1);
    } else {
      out += rational_str(v[k].value()) + "*" + std::to_string(k + 1);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string serialize(const DefinitionFile& df) {
  std::ostringstream out;
  if (df.is_algebra()) {
    const LieAlgebra& l = *df.algebra;
    out << "algebra " << l.name() << " over " << l.field().str() << " dim "
        << l.dim() << "\n";
    for (std::size_t i = 0; i < l.dim(); ++i) {
      for (std::size_t j = i + 1; j < l.dim(); ++j) {
        if (vec_is_zero(l.structure(i, j))) continue;
        out << "[" << i + 1 << "," << j + 1
            << "] = " << combination_str(l.structure(i, j)) << "\n";
      }
    }
    for (const Representation& rep : df.reps) {
      out << "rep " << rep.name << " on dim " << rep.module_dim << "\n";
      for (std::size_t i = 0; i < rep.phi.size(); ++i) {
        out << "phi " << i + 1 << " = [";
        for (std::size_t rrow = 0; rrow < rep.module_dim; ++rrow) {
          if (rrow) out << ";";
          for (std::size_t ccol = 0; ccol < rep.module_dim; ++ccol) {
            if (ccol) out << ",";
            out << rational_str(rep.phi[i].at(rrow, ccol).value());
          }
        }
        out << "]\n";
      }
    }
    return out.str();
  }

  const FiniteLieRing& r = *df.ring;
  out << "ring " << r.name() << " factors ";
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (i) out << ",";
    out << r.factors()[i];
  }
  out << "\n";
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = i + 1; j < r.rank(); ++j) {
      std::uint32_t v = r.bracket(r.generator(i), r.generator(j));
      if (v == 0) continue;
      auto tuple = r.decode(v);
      std::string comb;
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (tuple[k] == 0) continue;
        if (!comb.empty()) comb += " + ";
        if (tuple[k] == 1) {
          comb += std::to_string(k + 1);
        } else {
          comb += std::to_string(tuple[k]) + "*" + std::to_string(k + 1);
        }
      }
      out << "[" << i + 1 << "," << j + 1 << "] = " << comb << "\n";
    }
  }
  return out.str();
}

}  // namespace lieforge
