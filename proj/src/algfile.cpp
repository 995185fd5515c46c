#include "zda/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace zda {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void perr(Errc code, int line, int col, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg,
              line, col);
}

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

long parse_int_tok(const Token& t, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trail");
    return v;
  } catch (...) {
    perr(Errc::parse_error, line, t.col, "expected integer, got '" + t.text + "'");
  }
}

}  // namespace

Algebra parse_algebra_file(const std::string& text) {
  std::optional<Tower> tower;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  std::string name;
  std::vector<Elem> constants;
  std::vector<bool> seen_pair;

  auto basis_index = [&](const std::string& id) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == id) return i;
    return std::nullopt;
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "name") {
      if (toks.size() != 2) perr(Errc::parse_error, lineno, toks[0].col, "usage: name <ident>");
      name = toks[1].text;
      continue;
    }
    if (head == "field") {
      if (tower) perr(Errc::parse_error, lineno, toks[0].col, "duplicate field declaration");
      if (toks.size() < 2 || toks[1].text != "Q")
        perr(Errc::parse_error, lineno, toks[0].col, "field declaration must start with 'field Q'");
      std::vector<long> rads;
      std::size_t i = 2;
      while (i < toks.size()) {
        if (toks[i].text != "adjoin" || i + 2 >= toks.size() || toks[i + 1].text != "sqrt")
          perr(Errc::parse_error, lineno, toks[i].col, "expected 'adjoin sqrt <int>'");
        rads.push_back(parse_int_tok(toks[i + 2], lineno));
        i += 3;
      }
      try {
        tower = Tower::make(rads);
      } catch (const Error& e) {
        perr(e.code(), lineno, toks[0].col, e.what());
      }
      continue;
    }
    if (head == "dim") {
      if (toks.size() != 2) perr(Errc::parse_error, lineno, toks[0].col, "usage: dim <int>");
      long d = parse_int_tok(toks[1], lineno);
      if (d < 1 || d > 6) perr(Errc::parse_error, lineno, toks[1].col, "dimension out of range");
      dim = static_cast<std::size_t>(d);
      continue;
    }
    if (head == "basis") {
      if (!dim) perr(Errc::parse_error, lineno, toks[0].col, "basis requires a prior dim line");
      if (toks.size() != *dim + 1)
        perr(Errc::parse_error, lineno, toks[0].col,
             "expected " + std::to_string(*dim) + " basis names");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!is_ident(toks[i].text))
          perr(Errc::parse_error, lineno, toks[i].col, "bad basis name '" + toks[i].text + "'");
        if (basis_index(toks[i].text))
          perr(Errc::parse_error, lineno, toks[i].col, "duplicate basis name '" + toks[i].text + "'");
        basis.push_back(toks[i].text);
      }
      if (!tower) tower = Tower{};  // default to the rationals
      constants.assign(*dim * *dim * *dim, Elem(*tower));
      seen_pair.assign(*dim * *dim, false);
      continue;
    }

    // product line: everything else
    if (!tower || !dim || basis.empty())
      perr(Errc::parse_error, lineno, toks[0].col,
           "product lines must follow field, dim and basis declarations");
    std::size_t eq = raw.find('=');
    if (eq == std::string::npos)
      perr(Errc::parse_error, lineno, toks[0].col, "expected '=' in product line");
    std::string lhs = raw.substr(0, eq), rhs = raw.substr(eq + 1);
    // lhs: bi*bj
    std::string lhs_stripped;
    for (char c : lhs)
      if (!std::isspace(static_cast<unsigned char>(c))) lhs_stripped += c;
    std::size_t star = lhs_stripped.find('*');
    if (star == std::string::npos || lhs_stripped.find('*', star + 1) != std::string::npos)
      perr(Errc::parse_error, lineno, 1, "left side must be '<ident>*<ident>'");
    std::string id1 = lhs_stripped.substr(0, star), id2 = lhs_stripped.substr(star + 1);
    auto i1 = basis_index(id1), i2 = basis_index(id2);
    if (!i1) perr(Errc::unknown_basis_name, lineno, 1, "unknown basis name '" + id1 + "'");
    if (!i2) perr(Errc::unknown_basis_name, lineno, 1, "unknown basis name '" + id2 + "'");
    if (seen_pair[*i1 * *dim + *i2])
      perr(Errc::duplicate_product, lineno, 1,
           "product " + id1 + "*" + id2 + " defined more than once");
    seen_pair[*i1 * *dim + *i2] = true;

    // rhs: signed terms, each a coefficient token run followed by one ident
    std::vector<Token> rtoks = tokenize(rhs);
    for (Token& t : rtoks) t.col += static_cast<int>(eq) + 1;
    Vec result = zero_vec(*tower, *dim);
    std::size_t pos = 0;
    int sign = +1;
    auto paren_delta = [](const std::string& s) {
      int d = 0;
      for (char c : s) d += c == '(' ? 1 : c == ')' ? -1 : 0;
      return d;
    };
    while (pos < rtoks.size()) {
      if (rtoks[pos].text == "+" || rtoks[pos].text == "-") {
        sign = rtoks[pos].text == "+" ? +1 : -1;
        ++pos;
        continue;
      }
      // collect tokens until the next top-level +/- separator
      std::vector<Token> chunk;
      int depth = 0;
      while (pos < rtoks.size() &&
             !(depth == 0 && (rtoks[pos].text == "+" || rtoks[pos].text == "-"))) {
        depth += paren_delta(rtoks[pos].text);
        chunk.push_back(rtoks[pos++]);
      }
      if (chunk.empty()) perr(Errc::parse_error, lineno, 1, "empty term");
      if (chunk.size() == 1 && chunk[0].text == "0") {
        sign = +1;
        continue;
      }
      const Token& last = chunk.back();
      auto bi = basis_index(last.text);
      if (!bi)
        perr(Errc::unknown_basis_name, lineno, last.col,
             "term must end in a basis name, got '" + last.text + "'");
      Elem coeff(*tower, 1);
      if (chunk.size() > 1) {
        std::string expr;
        for (std::size_t i = 0; i + 1 < chunk.size(); ++i) {
          if (i) expr += "*";
          std::string piece = chunk[i].text;
          while (!piece.empty() && piece.back() == '*') piece.pop_back();
          expr += piece;
        }
        try {
          coeff = parse_element(expr, *tower);
        } catch (const Error& e) {
          if (e.code() == Errc::coefficient_not_in_tower)
            perr(Errc::coefficient_not_in_tower, lineno, chunk[0].col, e.what());
          perr(Errc::parse_error, lineno, chunk[0].col,
               std::string("bad coefficient '") + expr + "': " + e.what());
        }
      }
      if (sign < 0) coeff = -coeff;
      result[*bi] += coeff;
      sign = +1;
    }
    for (std::size_t k = 0; k < *dim; ++k)
      constants[(*i1 * *dim + *i2) * *dim + k] = result[k];
  }

  if (!tower || !dim || basis.empty())
    throw Error(Errc::parse_error, "incomplete file: field, dim and basis are required", 0, 0);
  Algebra a = Algebra::make(*dim, *tower, std::move(constants), name);
  a.set_basis_names(basis);
  return a;
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open file: " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

std::string to_alg_text(const Algebra& a) {
  std::ostringstream os;
  if (!a.name().empty()) os << "name " << a.name() << "\n";
  os << "field Q";
  for (long d : a.tower().radicands()) os << " adjoin sqrt " << d;
  os << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const std::string& b : a.basis_names()) os << " " << b;
  os << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec p = a.basis_product(i, j);
      if (is_zero_vec(p)) continue;
      os << a.basis_names()[i] << "*" << a.basis_names()[j] << " =";
      bool first = true;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (p[k].is_zero()) continue;
        Elem c = p[k];
        std::size_t nonzero = 0;
        for (const Rat& q : c.coords())
          if (q != 0) ++nonzero;
        bool neg = nonzero == 1 && c.sign() < 0;
        if (neg) c = -c;
        os << (first ? (neg ? " - " : " ") : (neg ? " - " : " + "));
        first = false;
        if (!(c == Elem(a.tower(), 1))) {
          std::string cs = c.str();
          if (nonzero > 1) {
            // parenthesize sums and strip spaces so the coefficient stays one token
            std::string compact;
            for (char ch : cs)
              if (ch != ' ') compact += ch;
            cs = "(" + compact + ")";
          }
          os << cs << " ";
        }
        os << a.basis_names()[k];
      }
      os << "\n";
    }
  return os.str();
}

}  // namespace zda
