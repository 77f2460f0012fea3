#include "dblgpd/cubical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dblgpd::cube {

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr leaf(const std::string& name, int dim, std::map<int, Sign> fixed) {
  Term t;
  t.kind = Term::Kind::generator;
  t.name = name;
  t.dim = dim - static_cast<int>(fixed.size());
  t.fixed = std::move(fixed);
  return make(std::move(t));
}

bool same(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->dim != b->dim || a->index != b->index) return false;
  switch (a->kind) {
    case Term::Kind::generator:
      return a->name == b->name && a->fixed == b->fixed;
    case Term::Kind::connection:
      if (a->sign != b->sign) return false;
      return same(a->left, b->left);
    case Term::Kind::degeneracy:
    case Term::Kind::inversion:
      return same(a->left, b->left);
    case Term::Kind::composition:
      return same(a->left, b->left) && same(a->right, b->right);
  }
  return false;
}

void require_index(int i, int lo, int hi, const char* op) {
  if (i < lo || i > hi) {
    throw InputError(std::string(op) + ": index " + std::to_string(i) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

void Signature::declare(const std::string& name, int dim,
                        const std::map<std::pair<int, Sign>, TermPtr>& faces) {
  if (gens_.count(name)) throw InputError("generator declared twice: " + name);
  if (dim < 0 || dim > 3) throw InputError("generator " + name + " has dimension outside 0..3");
  for (const auto& [key, f] : faces) {
    require_index(key.first, 1, dim, "declare");
    if (!f || f->dim != dim - 1) {
      throw InputError("face " + std::to_string(key.first) + sign_name(key.second) + " of " +
                       name + " has the wrong dimension");
    }
  }
  gens_[name] = {name, dim, faces};
}

const Generator& Signature::at(const std::string& name) const {
  auto it = gens_.find(name);
  if (it == gens_.end()) throw InputError("unknown generator " + name);
  return it->second;
}

// ---------------------------------------------------------------------------
// Smart constructors

TermPtr gen(const Signature& sig, const std::string& name) {
  return leaf(name, sig.at(name).dim, {});
}

TermPtr eps(int i, TermPtr t) {
  require_index(i, 1, t->dim + 1, "eps");
  if (t->kind == Term::Kind::degeneracy && i <= t->index) {
    return eps(t->index + 1, eps(i, t->left));
  }
  Term out;
  out.kind = Term::Kind::degeneracy;
  out.dim = t->dim + 1;
  out.index = i;
  out.left = std::move(t);
  return make(std::move(out));
}

TermPtr conn(Sign a, int i, TermPtr t) {
  require_index(i, 1, t->dim, "conn");
  if (t->kind == Term::Kind::degeneracy) {
    const int k = t->index;
    if (k == i) return eps(i, eps(i, t->left));
    if (k < i) return eps(k, conn(a, i - 1, t->left));
    return eps(k + 1, conn(a, i, t->left));
  }
  Term out;
  out.kind = Term::Kind::connection;
  out.dim = t->dim + 1;
  out.index = i;
  out.sign = a;
  out.left = std::move(t);
  return make(std::move(out));
}

TermPtr inv(int i, TermPtr t) {
  require_index(i, 1, t->dim, "inv");
  if (t->kind == Term::Kind::degeneracy) {
    const int k = t->index;
    if (k == i) return t;
    return eps(k, inv(i < k ? i : i - 1, t->left));
  }
  if (t->kind == Term::Kind::inversion && t->index == i) return t->left;
  Term out;
  out.kind = Term::Kind::inversion;
  out.dim = t->dim;
  out.index = i;
  out.left = std::move(t);
  return make(std::move(out));
}

TermPtr comp(int i, TermPtr a, TermPtr b) {
  require_index(i, 1, a->dim, "comp");
  if (a->dim != b->dim) throw CompositionError("comp: operands of different dimension");
  if (a->kind == Term::Kind::degeneracy && b->kind == Term::Kind::degeneracy &&
      a->index == b->index) {
    const int k = a->index;
    if (k == i) {
      if (same(a->left, b->left)) return a;
    } else {
      return eps(k, comp(i < k ? i : i - 1, a->left, b->left));
    }
  }
  Term out;
  out.kind = Term::Kind::composition;
  out.dim = a->dim;
  out.index = i;
  out.left = std::move(a);
  out.right = std::move(b);
  return make(std::move(out));
}

TermPtr constant(TermPtr x, int dim) {
  while (x->dim < dim) x = eps(1, x);
  return x;
}

// ---------------------------------------------------------------------------
// Faces

namespace {

// A generator leaf with the given original coordinates fixed, replaced by a
// declared face whenever one of the fixed coordinates carries one.
TermPtr expand(const Signature& sig, const std::string& name, const std::map<int, Sign>& fixed) {
  const auto& g = sig.at(name);
  for (const auto& [c, s] : fixed) {
    auto it = g.faces.find({c, s});
    if (it == g.faces.end()) continue;
    TermPtr out = it->second;
    for (auto rest = fixed.rbegin(); rest != fixed.rend(); ++rest) {
      if (rest->first == c) continue;
      const int index = rest->first < c ? rest->first : rest->first - 1;
      out = face(sig, out, index, rest->second);
    }
    return out;
  }
  return leaf(name, g.dim, fixed);
}

}  // namespace

TermPtr face(const Signature& sig, const TermPtr& t, int i, Sign a) {
  require_index(i, 1, t->dim, "face");
  switch (t->kind) {
    case Term::Kind::generator: {
      const auto& g = sig.at(t->name);
      int seen = 0;
      int original = 0;
      for (int c = 1; c <= g.dim; ++c) {
        if (t->fixed.count(c)) continue;
        if (++seen == i) {
          original = c;
          break;
        }
      }
      auto fixed = t->fixed;
      fixed[original] = a;
      return expand(sig, t->name, fixed);
    }
    case Term::Kind::degeneracy: {
      const int j = t->index;
      if (i == j) return t->left;
      if (i < j) return eps(j - 1, face(sig, t->left, i, a));
      return eps(j, face(sig, t->left, i - 1, a));
    }
    case Term::Kind::connection: {
      const int j = t->index;
      const Sign alpha = t->sign;
      if (i == j || i == j + 1) {
        // min(1, s) = s, min(0, s) = 0; dually for max.
        const Sign identity_side = alpha == Sign::plus ? Sign::plus : Sign::minus;
        if (a == identity_side) return t->left;
        return eps(j, face(sig, t->left, j, a));
      }
      if (i < j) return conn(alpha, j - 1, face(sig, t->left, i, a));
      return conn(alpha, j, face(sig, t->left, i - 1, a));
    }
    case Term::Kind::inversion: {
      const int j = t->index;
      if (i == j) return face(sig, t->left, i, flip(a));
      return inv(i < j ? j - 1 : j, face(sig, t->left, i, a));
    }
    case Term::Kind::composition: {
      const int j = t->index;
      if (i == j) return a == Sign::minus ? face(sig, t->left, j, a) : face(sig, t->right, j, a);
      return comp(i < j ? j - 1 : j, face(sig, t->left, i, a), face(sig, t->right, i, a));
    }
  }
  throw InputError("face: malformed term");
}

TermPtr compose_checked(const Signature& sig, int i, const TermPtr& a, const TermPtr& b) {
  require_index(i, 1, a->dim, "compose");
  if (a->dim != b->dim) throw CompositionError("compose: operands of different dimension");
  const auto end = face(sig, a, i, Sign::plus);
  const auto start = face(sig, b, i, Sign::minus);
  std::string where;
  if (!equivalent(sig, end, start, 16, &where)) {
    throw CompositionError("not composable in direction " + std::to_string(i) + ": " +
                           to_sexpr(end) + " vs " + to_sexpr(start) + " at " + where);
  }
  return comp(i, a, b);
}

TermPtr matrix_composite(const Signature& sig, const std::vector<std::vector<TermPtr>>& rows,
                         int row_dir, int col_dir) {
  if (rows.empty() || rows.front().empty()) throw CompositionError("empty matrix");
  const auto width = rows.front().size();
  for (const auto& row : rows)
    if (row.size() != width) throw CompositionError("ragged matrix");
  // Entry-wise adjacency, so a failure names the offending pair.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      const auto label = "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
      if (c + 1 < width &&
          !equivalent(sig, face(sig, rows[r][c], col_dir, Sign::plus),
                      face(sig, rows[r][c + 1], col_dir, Sign::minus))) {
        throw CompositionError("entries " + label + " and its right neighbour do not meet");
      }
      if (r + 1 < rows.size() &&
          !equivalent(sig, face(sig, rows[r][c], row_dir, Sign::plus),
                      face(sig, rows[r + 1][c], row_dir, Sign::minus))) {
        throw CompositionError("entries " + label + " and the one below do not meet");
      }
    }
  }
  TermPtr out;
  for (const auto& row : rows) {
    TermPtr line = row.front();
    for (std::size_t c = 1; c < width; ++c) line = comp(col_dir, line, row[c]);
    out = out ? comp(row_dir, out, line) : line;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Coord dyadic(std::int64_t num, std::int64_t den) {
  if (den <= 0 || (den & (den - 1)) != 0 || den > kOne) {
    throw InputError("denominator " + std::to_string(den) + " is not a power of two <= 2^30");
  }
  if (num < 0 || num > den) throw InputError("coordinate outside [0, 1]");
  return num * (kOne / den);
}

namespace {

Value evaluate_generator(const Signature& sig, const Generator& g, const std::vector<Coord>& p) {
  for (int c = 1; c <= g.dim; ++c) {
    const Coord x = p[c - 1];
    if (x != 0 && x != kOne) continue;
    auto it = g.faces.find({c, x == 0 ? Sign::minus : Sign::plus});
    if (it == g.faces.end()) continue;
    std::vector<Coord> rest = p;
    rest.erase(rest.begin() + (c - 1));
    return evaluate(sig, it->second, rest);
  }
  return {g.name, p};
}

}  // namespace

Value evaluate(const Signature& sig, const TermPtr& t, const std::vector<Coord>& p) {
  if (static_cast<int>(p.size()) != t->dim) {
    throw InputError("evaluate: point of dimension " + std::to_string(p.size()) +
                     " for a term of dimension " + std::to_string(t->dim));
  }
  for (auto x : p)
    if (x < 0 || x > kOne) throw InputError("evaluate: coordinate outside [0, 1]");
  switch (t->kind) {
    case Term::Kind::generator: {
      const auto& g = sig.at(t->name);
      std::vector<Coord> full;
      std::size_t next = 0;
      for (int c = 1; c <= g.dim; ++c) {
        auto it = t->fixed.find(c);
        if (it != t->fixed.end()) {
          full.push_back(it->second == Sign::minus ? 0 : kOne);
        } else {
          full.push_back(p[next++]);
        }
      }
      return evaluate_generator(sig, g, full);
    }
    case Term::Kind::degeneracy: {
      auto q = p;
      q.erase(q.begin() + (t->index - 1));
      return evaluate(sig, t->left, q);
    }
    case Term::Kind::connection: {
      auto q = p;
      const auto i = static_cast<std::size_t>(t->index - 1);
      const Coord s = q[i];
      const Coord u = q[i + 1];
      q[i] = t->sign == Sign::minus ? std::max(s, u) : std::min(s, u);
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(i + 1));
      return evaluate(sig, t->left, q);
    }
    case Term::Kind::inversion: {
      auto q = p;
      q[t->index - 1] = kOne - q[t->index - 1];
      return evaluate(sig, t->left, q);
    }
    case Term::Kind::composition: {
      auto q = p;
      Coord& x = q[t->index - 1];
      if (x <= kOne / 2) {
        x *= 2;
        return evaluate(sig, t->left, q);
      }
      x = 2 * x - kOne;
      return evaluate(sig, t->right, q);
    }
  }
  throw InputError("evaluate: malformed term");
}

std::vector<std::vector<Coord>> grid(int dim, int resolution) {
  std::vector<std::vector<Coord>> out{{}};
  for (int d = 0; d < dim; ++d) {
    std::vector<std::vector<Coord>> next;
    for (const auto& p : out) {
      for (int k = 0; k <= resolution; ++k) {
        auto q = p;
        q.push_back(dyadic(k, resolution));
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string show_point(const std::vector<Coord>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    // Reduce the fraction for printing.
    std::int64_t num = p[i];
    std::int64_t den = kOne;
    while (num % 2 == 0 && den > 1) {
      num /= 2;
      den /= 2;
    }
    out += den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
  return out + ")";
}

bool equivalent(const Signature& sig, const TermPtr& a, const TermPtr& b, int resolution,
                std::string* witness) {
  if (a->dim != b->dim) {
    if (witness) *witness = "dimensions differ";
    return false;
  }
  for (const auto& p : grid(a->dim, resolution)) {
    if (evaluate(sig, a, p) != evaluate(sig, b, p)) {
      if (witness) *witness = show_point(p);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text

std::string to_sexpr(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::generator: {
      if (t->fixed.empty()) return t->name;
      std::string out = "(face " + t->name;
      for (const auto& [c, s] : t->fixed) out += " " + std::to_string(c) + sign_name(s);
      return out + ")";
    }
    case Term::Kind::degeneracy:
      return "(eps " + std::to_string(t->index) + " " + to_sexpr(t->left) + ")";
    case Term::Kind::connection:
      return std::string("(conn ") + sign_name(t->sign) + " " + std::to_string(t->index) + " " +
             to_sexpr(t->left) + ")";
    case Term::Kind::inversion:
      return "(inv " + std::to_string(t->index) + " " + to_sexpr(t->left) + ")";
    case Term::Kind::composition:
      return "(comp " + std::to_string(t->index) + " " + to_sexpr(t->left) + " " +
             to_sexpr(t->right) + ")";
  }
  return "?";
}

namespace {

class Parser {
 public:
  Parser(const Signature& sig, const std::string& text) : sig_(sig) {
    std::string atom;
    auto flush = [&] {
      if (!atom.empty()) tokens_.push_back(std::move(atom));
      atom.clear();
    };
    for (char ch : text) {
      if (ch == '(' || ch == ')') {
        flush();
        tokens_.emplace_back(1, ch);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        atom += ch;
      }
    }
    flush();
  }

  TermPtr parse() {
    auto t = term();
    if (pos_ != tokens_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("s-expression: " + what + " at token " + std::to_string(pos_));
  }

  const std::string& next() {
    if (pos_ == tokens_.size()) fail("unexpected end");
    return tokens_[pos_++];
  }

  void expect(const std::string& tok) {
    if (next() != tok) fail("expected '" + tok + "'");
  }

  int number() {
    const auto& tok = next();
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) fail("bad index " + tok);
      return v;
    } catch (const std::logic_error&) {
      fail("bad index " + tok);
    }
  }

  Sign sign() {
    const auto& tok = next();
    if (tok == "-") return Sign::minus;
    if (tok == "+") return Sign::plus;
    fail("bad sign " + tok);
  }

  TermPtr term() {
    const std::string head = next();
    if (head != "(") {
      if (head == ")") fail("unexpected ')'");
      return gen(sig_, head);
    }
    const std::string op = next();
    TermPtr out;
    if (op == "face") {
      const std::string name = next();
      const auto& g = sig_.at(name);
      std::map<int, Sign> fixed;
      while (pos_ < tokens_.size() && tokens_[pos_] != ")") {
        const auto tok = next();
        if (tok.size() != 2 || !std::isdigit(static_cast<unsigned char>(tok[0])) ||
            (tok[1] != '-' && tok[1] != '+')) {
          fail("bad face " + tok);
        }
        const int c = tok[0] - '0';
        if (c < 1 || c > g.dim) fail("face index out of range");
        fixed[c] = tok.back() == '-' ? Sign::minus : Sign::plus;
      }
      out = leaf(name, g.dim, fixed);
    } else if (op == "eps") {
      const int i = number();
      out = eps(i, term());
    } else if (op == "conn") {
      const Sign a = sign();
      const int i = number();
      out = conn(a, i, term());
    } else if (op == "inv") {
      const int i = number();
      out = inv(i, term());
    } else if (op == "comp") {
      const int i = number();
      auto a = term();
      auto b = term();
      out = comp(i, a, b);
    } else {
      fail("unknown operator " + op);
    }
    expect(")");
    return out;
  }

  const Signature& sig_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_sexpr(const Signature& sig, const std::string& text) {
  return Parser(sig, text).parse();
}

}  // namespace dblgpd::cube
