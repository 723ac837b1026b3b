#include "qfg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "qfg/error.hpp"

namespace qfg {

namespace {

bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(const std::string& s, const Quiver& q, std::uint32_t p) : s_(s), q_(q), p_(p) {}

  PathElement parse() {
    skip();
    if (rest() == "0") return {};
    PathElement x = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return x;
  }

 private:
  std::string rest() const {
    std::string r = s_.substr(pos_);
    while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.pop_back();
    return r;
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  PathElement expr() {
    PathElement x;
    Scalar sign(1);
    if (at('+') || at('-')) {
      if (s_[pos_] == '-') sign = Scalar(-1);
      ++pos_;
    }
    x += term() * sign;
    while (at('+') || at('-')) {
      Scalar s = s_[pos_] == '-' ? Scalar(-1) : Scalar(1);
      ++pos_;
      x += term() * s;
    }
    return x;
  }

  PathElement term() {
    skip();
    Scalar c(1);
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) c = rational();
    std::optional<PathElement> x;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      char ch = s_[pos_];
      bool star = false;
      if (ch == '*') {
        if (!x) throw ParseError("'*' without a left factor", pos_);
        star = true;
        ++pos_;
        skip();
        if (pos_ >= s_.size()) throw ParseError("'*' without a right factor", pos_);
        ch = s_[pos_];
      }
      if (!identStart(ch) && ch != '(') {
        if (star) throw ParseError("expected a factor after '*'", pos_);
        break;
      }
      std::size_t start = pos_;
      PathElement f = factor();
      if (!x) {
        x = std::move(f);
      } else {
        PathElement prod = *x * f;
        if (prod.isZero() && !x->isZero() && !f.isZero())
          throw ParseError("factor does not compose with what precedes it", start);
        x = std::move(prod);
      }
    }
    if (!x) throw ParseError("expected a path", pos_);
    return *x * c;
  }

  Scalar rational() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) throw ParseError("malformed rational", start);
    }
    if (pos_ < s_.size() && (identChar(s_[pos_]) || s_[pos_] == '.')) throw ParseError("malformed rational", start);
    try {
      Scalar v = Scalar::parse(s_.substr(start, pos_ - start), p_);
      if (v.isZero() && s_.substr(start, pos_ - start).find('/') != std::string::npos &&
          s_.substr(start, pos_ - start).back() == '0')
        throw ParseError("zero denominator", start);
      return v;
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational", start);
    } catch (const std::domain_error&) {
      throw ParseError("malformed rational", start);
    }
  }

  PathElement factor() {
    skip();
    if (s_[pos_] == '(') {
      ++pos_;
      PathElement x = expr();
      if (!at(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return x;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && identChar(s_[pos_])) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (auto a = q_.findArrow(name)) return PathElement(Path(q_, std::vector<ArrowId>{*a}));
    if (name.size() > 2 && name.compare(0, 2, "e_") == 0)
      if (auto v = q_.findVertex(name.substr(2))) return PathElement(Path(q_, *v));
    throw ParseError("unknown identifier '" + name + "'", start);
  }

  const std::string& s_;
  const Quiver& q_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool validName(const std::string& s) {
  if (s.empty() || !std::isalnum(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), identChar);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg, std::size_t offset) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, offset);
}

}  // namespace

PathElement parseExpression(const std::string& s, const Quiver& q, std::uint32_t characteristic) {
  PathElement x = ExprParser(s, q, characteristic).parse();
  if (characteristic == 0) return x;
  PathElement out;
  for (const auto& [p, c] : x.terms()) out.add(p, c.inField(characteristic));
  return out;
}

const char* kindName(InputDocument::Kind k) {
  switch (k) {
    case InputDocument::Kind::Potential: return "potential";
    case InputDocument::Kind::Dimer: return "dimer";
    default: return "quiver-algebra";
  }
}

InputDocument parseDocument(const std::string& text) {
  InputDocument doc;
  std::istringstream in(text);
  std::string raw, section;
  std::size_t lineNo = 0, offset = 0;
  bool sawPotential = false;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::size_t lineStart = offset;
    offset += raw.size() + 1;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineNo, "unterminated section header", lineStart);
      section = trim(line.substr(1, line.size() - 2));
      if (section != "vertices" && section != "arrows" && section != "relations" && section != "potential" &&
          section != "options")
        fail(lineNo, "unknown section [" + section + "]", lineStart);
      if (section == "potential") sawPotential = true;
      continue;
    }
    if (section.empty()) fail(lineNo, "content before the first section", lineStart);
    if (section == "vertices") {
      std::string tok;
      std::istringstream ts(line);
      std::string all;
      for (char c : line) all += c == ',' ? ' ' : c;
      std::istringstream vs(all);
      while (vs >> tok) {
        if (!validName(tok)) fail(lineNo, "bad vertex name '" + tok + "'", lineStart);
        doc.vertices.push_back(tok);
      }
    } else if (section == "arrows") {
      // name: src -> tgt [deg=d]
      std::size_t colon = line.find(':');
      std::size_t arrow = line.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        fail(lineNo, "expected 'name: source -> target [deg=d]'", lineStart);
      InputDocument::ArrowDecl a;
      a.line = lineNo;
      a.name = trim(line.substr(0, colon));
      a.source = trim(line.substr(colon + 1, arrow - colon - 1));
      std::string tail = trim(line.substr(arrow + 2));
      std::size_t br = tail.find('[');
      a.target = trim(tail.substr(0, br));
      if (br != std::string::npos) {
        std::string opt = trim(tail.substr(br));
        if (opt.back() != ']') fail(lineNo, "unterminated arrow option", lineStart);
        opt = trim(opt.substr(1, opt.size() - 2));
        if (opt.compare(0, 3, "deg") != 0) fail(lineNo, "unknown arrow option '" + opt + "'", lineStart);
        std::size_t eq = opt.find('=');
        if (eq == std::string::npos) fail(lineNo, "expected deg=d", lineStart);
        try {
          std::size_t used = 0;
          std::string num = trim(opt.substr(eq + 1));
          a.degree = std::stoi(num, &used);
          if (used != num.size()) throw std::invalid_argument(num);
        } catch (const std::exception&) {
          fail(lineNo, "degree is not an integer", lineStart);
        }
        if (a.degree < 0) fail(lineNo, "negative degree", lineStart);
      }
      for (const auto* nm : {&a.name, &a.source, &a.target})
        if (!validName(*nm)) fail(lineNo, "bad name '" + *nm + "'", lineStart);
      doc.arrows.push_back(a);
    } else if (section == "relations") {
      doc.relations.push_back({line, lineNo});
    } else if (section == "potential") {
      int sign = 1;
      std::string body = line;
      if (body.front() == '+' || body.front() == '-') {
        sign = body.front() == '-' ? -1 : 1;
        body = trim(body.substr(1));
      }
      if (body.empty()) fail(lineNo, "empty potential term", lineStart);
      doc.potential.push_back({sign, body, lineNo});
    } else {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) fail(lineNo, "expected key = value", lineStart);
      doc.options[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }
  if (doc.vertices.empty()) throw ParseError("no [vertices] given", 0);
  if (sawPotential) doc.kind = InputDocument::Kind::Potential;
  if (auto it = doc.options.find("kind"); it != doc.options.end()) {
    if (it->second == "dimer") doc.kind = InputDocument::Kind::Dimer;
    else if (it->second == "potential") doc.kind = InputDocument::Kind::Potential;
    else if (it->second == "quiver-algebra") doc.kind = InputDocument::Kind::QuiverAlgebra;
    else throw ParseError("unknown kind '" + it->second + "'", 0);
  }
  if (auto it = doc.options.find("char"); it != doc.options.end()) {
    try {
      doc.characteristic = static_cast<std::uint32_t>(std::stoul(it->second));
    } catch (const std::exception&) {
      throw ParseError("char must be 0 or a prime", 0);
    }
  }
  doc.quiver();  // validates names and endpoints
  return doc;
}

InputDocument readDocument(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path, 0);
  std::stringstream ss;
  ss << f.rdbuf();
  return parseDocument(ss.str());
}

QuiverPtr InputDocument::quiver() const {
  std::vector<std::tuple<std::string, std::string, std::string>> as;
  for (const auto& a : arrows) as.push_back({a.name, a.source, a.target});
  try {
    return std::make_shared<Quiver>(Quiver::fromNames(vertices, as));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 0);
  }
}

void InputDocument::seedOrder(const std::vector<std::string>& first) {
  std::vector<ArrowDecl> front, back;
  for (const auto& n : first) {
    auto it = std::find_if(arrows.begin(), arrows.end(), [&](const ArrowDecl& a) { return a.name == n; });
    if (it == arrows.end()) throw ParseError("seed order names unknown arrow '" + n + "'", 0);
    if (std::none_of(front.begin(), front.end(), [&](const ArrowDecl& a) { return a.name == n; })) front.push_back(*it);
  }
  for (const auto& a : arrows)
    if (std::none_of(front.begin(), front.end(), [&](const ArrowDecl& b) { return b.name == a.name; }))
      back.push_back(a);
  front.insert(front.end(), back.begin(), back.end());
  arrows = std::move(front);
}

GradedPresentation presentationOf(const InputDocument& doc) {
  QuiverPtr q = doc.quiver();
  std::vector<PathElement> rels;
  for (const auto& [expr, line] : doc.relations) {
    try {
      PathElement r = parseExpression(expr, *q, doc.characteristic);
      if (!r.isZero()) rels.push_back(std::move(r));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.offset());
    }
  }
  std::map<std::string, int> deg;
  for (const auto& a : doc.arrows) deg[a.name] = a.degree;
  return GradedPresentation(q, rels, ArrowGrading(deg));
}

Potential potentialOf(const InputDocument& doc) {
  QuiverPtr q = doc.quiver();
  std::vector<std::pair<Scalar, Path>> terms;
  for (const auto& [sign, expr, line] : doc.potential) {
    try {
      PathElement x = parseExpression(expr, *q, doc.characteristic);
      if (x.size() != 1) throw ParseError("a potential line must be a single cycle", 0);
      for (const auto& [p, c] : x.terms()) {
        Scalar coef = c * Scalar(sign);
        if (doc.characteristic) coef = coef.inField(doc.characteristic);
        terms.push_back({coef, p});
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what(), e.offset());
    }
  }
  try {
    return Potential(q, terms);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 0);
  }
}

namespace {

std::string header(const Quiver& q, const std::vector<int>& deg) {
  std::string s = "[vertices]\n";
  for (std::size_t v = 0; v < q.vertexCount(); ++v) s += (v ? " " : "") + q.vertexName(static_cast<VertexId>(v));
  s += "\n\n[arrows]\n";
  for (ArrowId a = 0; a < q.arrowCount(); ++a) {
    const Arrow& ar = q.arrow(a);
    s += ar.name + ": " + q.vertexName(ar.source) + " -> " + q.vertexName(ar.target);
    if (!deg.empty() && deg[a]) s += " [deg=" + std::to_string(deg[a]) + "]";
    s += "\n";
  }
  return s;
}

}  // namespace

std::string printDocument(const GradedPresentation& p) {
  std::string s = header(p.q(), p.arrowDegrees());
  if (!p.relations.empty()) {
    s += "\n[relations]\n";
    for (const auto& r : p.relations) s += r.str() + "\n";
  }
  return s;
}

std::string printDocument(const Potential& W) {
  std::string s = header(W.q(), {});
  s += "\n[potential]\n";
  for (const auto& t : W.terms()) {
    Scalar c = t.coef;
    bool neg = c.characteristic() == 0 && c.sign() < 0;
    if (neg) c = -c;
    s += neg ? "- " : "+ ";
    if (!c.isOne()) s += c.str() + " ";
    s += Path(W.q(), t.cycle).str() + "\n";
  }
  return s;
}

}  // namespace qfg
