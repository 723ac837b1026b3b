#include "qfg/quiver.hpp"

#include <tuple>

namespace qfg {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (!vertexIndex_.emplace(vertices_[v], v).second)
      throw StructuralError("duplicate vertex '" + vertices_[v] + "'");
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (ArrowId a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (!arrowIndex_.emplace(ar.name, a).second)
      throw StructuralError("duplicate arrow '" + ar.name + "'");
    if (vertexIndex_.count(ar.name))
      throw StructuralError("arrow '" + ar.name + "' shares its name with a vertex");
    if (ar.source >= vertices_.size() || ar.target >= vertices_.size())
      throw StructuralError("arrow '" + ar.name + "' has an undeclared endpoint");
    out_[ar.source].push_back(a);
    in_[ar.target].push_back(a);
  }
}

Quiver Quiver::fromNames(std::vector<std::string> vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  std::map<std::string, VertexId> idx;
  for (VertexId v = 0; v < vertices.size(); ++v) idx[vertices[v]] = v;
  std::vector<Arrow> list;
  for (const auto& [name, s, t] : arrows) {
    auto si = idx.find(s), ti = idx.find(t);
    if (si == idx.end() || ti == idx.end())
      throw StructuralError("arrow '" + name + "' has an undeclared endpoint");
    list.push_back({name, si->second, ti->second});
  }
  return Quiver(std::move(vertices), std::move(list));
}

std::optional<VertexId> Quiver::findVertex(const std::string& name) const {
  auto it = vertexIndex_.find(name);
  if (it == vertexIndex_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> Quiver::findArrow(const std::string& name) const {
  auto it = arrowIndex_.find(name);
  if (it == arrowIndex_.end()) return std::nullopt;
  return it->second;
}

VertexId Quiver::vertex(const std::string& name) const {
  auto v = findVertex(name);
  if (!v) throw StructuralError("unknown vertex '" + name + "'");
  return *v;
}

ArrowId Quiver::arrowId(const std::string& name) const {
  auto a = findArrow(name);
  if (!a) throw StructuralError("unknown arrow '" + name + "'");
  return *a;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

bool sameQuiver(const Quiver* a, const Quiver* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Path::Path(const Quiver& q, VertexId v) : q_(&q), src_(v), tgt_(v) {
  if (v >= q.vertexCount()) throw StructuralError("vertex index out of range");
}

Path::Path(const Quiver& q, std::vector<ArrowId> arrows) : q_(&q), arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw StructuralError("arrow list of a path must be nonempty");
  for (ArrowId a : arrows_)
    if (a >= q.arrowCount()) throw StructuralError("arrow index out of range");
  src_ = q.arrow(arrows_.front()).source;
  tgt_ = q.arrow(arrows_.back()).target;
  for (std::size_t i = 0; i + 1 < arrows_.size(); ++i)
    if (q.arrow(arrows_[i]).target != q.arrow(arrows_[i + 1]).source)
      throw StructuralError("arrows '" + q.arrow(arrows_[i]).name + "' and '" +
                            q.arrow(arrows_[i + 1]).name + "' do not compose");
}

Path Path::subpath(std::size_t from, std::size_t len) const {
  if (from + len > arrows_.size()) throw ParameterError("subpath out of range");
  if (len == 0) {
    VertexId v = from == 0 ? src_ : q_->arrow(arrows_[from - 1]).target;
    return Path(*q_, v);
  }
  Path p;
  p.q_ = q_;
  p.arrows_.assign(arrows_.begin() + from, arrows_.begin() + from + len);
  p.src_ = q_->arrow(p.arrows_.front()).source;
  p.tgt_ = q_->arrow(p.arrows_.back()).target;
  return p;
}

std::string Path::str() const {
  if (!q_) return "<null>";
  if (arrows_.empty()) return "e_" + q_->vertexName(src_);
  std::string s;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (i) s += '*';
    s += q_->arrow(arrows_[i]).name;
  }
  return s;
}

bool operator<(const Path& a, const Path& b) {
  if (a.arrows_.size() != b.arrows_.size()) return a.arrows_.size() < b.arrows_.size();
  if (a.arrows_ != b.arrows_) return a.arrows_ < b.arrows_;
  return std::tie(a.src_, a.tgt_) < std::tie(b.src_, b.tgt_);
}

std::size_t PathHash::operator()(const Path& p) const noexcept {
  std::size_t h = p.source() * 0x9e3779b97f4a7c15ULL + 17;
  for (ArrowId a : p.arrows()) h = (h ^ a) * 0x100000001b3ULL;
  return h;
}

std::optional<Path> composePaths(const Path& p, const Path& q) {
  if (!sameQuiver(p.quiver(), q.quiver())) throw StructuralError("paths belong to different quivers");
  if (p.target() != q.source()) return std::nullopt;
  if (p.isLazy()) return q;
  if (q.isLazy()) return p;
  std::vector<ArrowId> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path(*p.quiver(), std::move(arrows));
}

ArrowGrading::ArrowGrading(std::map<std::string, int> degrees) : deg_(std::move(degrees)) {
  for (const auto& [name, d] : deg_)
    if (d < 0) throw StructuralError("negative degree for arrow '" + name + "'");
}

ArrowGrading ArrowGrading::constant(const Quiver& q, int d) {
  std::map<std::string, int> m;
  for (const auto& a : q.arrows()) m[a.name] = d;
  return ArrowGrading(std::move(m));
}

int ArrowGrading::degree(const std::string& arrow) const {
  auto it = deg_.find(arrow);
  if (it == deg_.end()) throw StructuralError("grading has no degree for arrow '" + arrow + "'");
  return it->second;
}

void ArrowGrading::set(const std::string& arrow, int d) {
  if (d < 0) throw StructuralError("negative degree for arrow '" + arrow + "'");
  deg_[arrow] = d;
}

std::vector<int> ArrowGrading::forQuiver(const Quiver& q) const {
  std::vector<int> out;
  out.reserve(q.arrowCount());
  for (const auto& a : q.arrows()) out.push_back(degree(a.name));
  return out;
}

int pathDegree(const Path& p, const ArrowGrading& g) {
  int d = 0;
  for (ArrowId a : p.arrows()) d += g.degree(p.quiver()->arrow(a).name);
  return d;
}

PathElement::PathElement(const Path& p, const Scalar& c) {
  if (!c.isZero()) terms_.emplace(p, c);
}

Scalar PathElement::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar() : it->second;
}

void PathElement::add(const Path& p, const Scalar& c) {
  if (c.isZero()) return;
  if (!terms_.empty() && !sameQuiver(terms_.begin()->first.quiver(), p.quiver()))
    throw StructuralError("paths belong to different quivers");
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.isZero()) terms_.erase(it);
}

PathElement& PathElement::operator+=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

PathElement& PathElement::operator*=(const Scalar& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PathElement operator*(const PathElement& a, const PathElement& b) {
  PathElement r;
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_)
      if (auto pq = composePaths(p, q)) r.add(*pq, c * d);
  return r;
}

std::size_t PathElement::maxLength() const {
  std::size_t m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, p.length());
  return m;
}

std::vector<PathElement> PathElement::uniformComponents() const {
  std::map<std::pair<VertexId, VertexId>, PathElement> parts;
  for (const auto& [p, c] : terms_) parts[{p.source(), p.target()}].add(p, c);
  std::vector<PathElement> out;
  for (auto& [k, v] : parts) out.push_back(std::move(v));
  return out;
}

std::optional<int> PathElement::homogeneousDegree(const ArrowGrading& g) const {
  std::optional<int> d;
  for (const auto& [p, c] : terms_) {
    int e = pathDegree(p, g);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d ? d : 0;
}

std::string PathElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Scalar mag = c;
    bool neg = c.characteristic() == 0 && c.sign() < 0;
    if (neg) mag = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (!mag.isOne()) s += mag.str() + " ";
    s += p.str();
    first = false;
  }
  return s;
}

}  // namespace qfg
