#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfg/potential.hpp"
#include "qfg/presentation.hpp"

namespace qfg {

/// Parses expr := term (('+'|'-') term)*, term := [rational] factor+,
/// factor := identifier | '(' expr ')'. Juxtaposition or '*' composes left
/// to right; e_v is the lazy path at v. Offsets in ParseError are byte
/// positions in s.
PathElement parseExpression(const std::string& s, const Quiver& q, std::uint32_t characteristic = 0);

/// Sectioned text input: [vertices], [arrows], [relations], [potential],
/// [options]. '#' starts a comment.
struct InputDocument {
  enum class Kind { QuiverAlgebra, Potential, Dimer };
  struct ArrowDecl {
    std::string name, source, target;
    int degree = 0;
    std::size_t line = 0;
  };
  Kind kind = Kind::QuiverAlgebra;
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<std::pair<std::string, std::size_t>> relations;                // expression, line
  std::vector<std::tuple<int, std::string, std::size_t>> potential;          // sign, cycle, line
  std::map<std::string, std::string> options;
  std::uint32_t characteristic = 0;

  QuiverPtr quiver() const;
  /// Moves the listed arrows to the front, which makes them largest in
  /// every monomial order.
  void seedOrder(const std::vector<std::string>& first);
};

InputDocument parseDocument(const std::string& text);
InputDocument readDocument(const std::string& path);

GradedPresentation presentationOf(const InputDocument& doc);
Potential potentialOf(const InputDocument& doc);

std::string printDocument(const GradedPresentation& p);
std::string printDocument(const Potential& W);

const char* kindName(InputDocument::Kind k);

}  // namespace qfg
