#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qfg/error.hpp"
#include "qfg/scalar.hpp"

namespace qfg {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
  std::string name;
  VertexId source;
  VertexId target;
};

class Quiver {
 public:
  Quiver() = default;
  /// Throws StructuralError on duplicate names or undeclared endpoints.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
  /// Convenience: arrows given as (name, source name, target name).
  static Quiver fromNames(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows);

  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t arrowCount() const { return arrows_.size(); }
  const std::string& vertexName(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<VertexId> findVertex(const std::string& name) const;
  std::optional<ArrowId> findArrow(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  // throws StructuralError
  ArrowId arrowId(const std::string& name) const;  // throws StructuralError

  /// Arrows leaving / entering a vertex, in declaration order.
  const std::vector<ArrowId>& outgoing(VertexId v) const { return out_.at(v); }
  const std::vector<ArrowId>& incoming(VertexId v) const { return in_.at(v); }

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId> vertexIndex_;
  std::map<std::string, ArrowId> arrowIndex_;
  std::vector<std::vector<ArrowId>> out_, in_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// A path: source vertex plus composable arrows; no arrows means e_v.
/// Holds a non-owning pointer to its quiver.
class Path {
 public:
  Path() = default;
  Path(const Quiver& q, VertexId v);
  /// Throws StructuralError when arrows do not compose or the list is empty.
  Path(const Quiver& q, std::vector<ArrowId> arrows);

  const Quiver* quiver() const { return q_; }
  VertexId source() const { return src_; }
  VertexId target() const { return tgt_; }
  const std::vector<ArrowId>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }
  bool isLazy() const { return arrows_.empty(); }
  bool isCycle() const { return src_ == tgt_; }

  /// Sub-path of arrows [from, from+len).
  Path subpath(std::size_t from, std::size_t len) const;
  std::string str() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.arrows_ == b.arrows_;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  /// Canonical storage order: length, then arrow ids, then endpoints.
  friend bool operator<(const Path& a, const Path& b);

 private:
  const Quiver* q_ = nullptr;
  VertexId src_ = 0, tgt_ = 0;
  std::vector<ArrowId> arrows_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

/// pq (p first, then q); nullopt is the zero path.
std::optional<Path> composePaths(const Path& p, const Path& q);

bool sameQuiver(const Quiver* a, const Quiver* b);

class ArrowGrading {
 public:
  ArrowGrading() = default;
  explicit ArrowGrading(std::map<std::string, int> degrees);
  static ArrowGrading constant(const Quiver& q, int d);

  int degree(const std::string& arrow) const;  // throws StructuralError
  bool has(const std::string& arrow) const { return deg_.count(arrow) != 0; }
  void set(const std::string& arrow, int d);
  const std::map<std::string, int>& degrees() const { return deg_; }
  /// Degrees indexed by arrow id; throws if the grading is not total on q.
  std::vector<int> forQuiver(const Quiver& q) const;

  friend bool operator==(const ArrowGrading& a, const ArrowGrading& b) { return a.deg_ == b.deg_; }

 private:
  std::map<std::string, int> deg_;
};

int pathDegree(const Path& p, const ArrowGrading& g);

/// Finite linear combination of paths with exact coefficients.
class PathElement {
 public:
  using Terms = std::map<Path, Scalar>;

  PathElement() = default;
  PathElement(const Path& p, const Scalar& c = Scalar(1));  // NOLINT(google-explicit-constructor)

  bool isZero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Path& p) const;
  void add(const Path& p, const Scalar& c);

  PathElement& operator+=(const PathElement& o);
  PathElement& operator-=(const PathElement& o);
  PathElement& operator*=(const Scalar& c);
  friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
  friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
  friend PathElement operator*(PathElement a, const Scalar& c) { return a *= c; }
  friend PathElement operator*(const Scalar& c, PathElement a) { return a *= c; }
  PathElement operator-() const { return *this * Scalar(-1); }
  /// Path-algebra product, bilinear extension of composePaths.
  friend PathElement operator*(const PathElement& a, const PathElement& b);

  friend bool operator==(const PathElement& a, const PathElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PathElement& a, const PathElement& b) { return !(a == b); }

  std::size_t maxLength() const;
  /// Splits into pieces e_u x e_v, ordered by (u, v).
  std::vector<PathElement> uniformComponents() const;
  /// Returns the degree if every term has the same degree, nullopt otherwise.
  std::optional<int> homogeneousDegree(const ArrowGrading& g) const;
  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace qfg
