#pragma once

// JSON formats. Residues travel as decimal strings; an element of O is a
// string (f = 1) or an array of f strings in the power basis. Readers accept
// a few expression forms on top of literals:
//   {"teichmuller": x}, {"log": x}, {"root": x, "e": k}
// for elements and {"omega": n} for series.

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "iwasawa/artin.hpp"
#include "iwasawa/bivariate.hpp"
#include "iwasawa/module.hpp"
#include "iwasawa/series.hpp"

namespace iwasawa::io {

using Json = nlohmann::ordered_json;

class Node;

/// Parsed input plus a map from JSON pointers to source lines, so schema
/// errors can name the offending line.
class Document {
 public:
  /// Throws InvalidInput with "source:line:column" on malformed JSON.
  static Document parse(const std::string& text, std::string source = "input");

  Node root() const;
  int line_of(const std::string& pointer) const;
  const std::string& source() const noexcept { return source_; }

 private:
  Json value_;
  std::string source_;
  std::map<std::string, int> lines_;
};

class Node {
 public:
  Node(const Json* value, std::string pointer, const Document* doc)
      : value_(value), pointer_(std::move(pointer)), doc_(doc) {}

  const Json& json() const noexcept { return *value_; }
  const std::string& pointer() const noexcept { return pointer_; }

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;
  std::optional<Node> find(const std::string& key) const;
  Node at(std::size_t index) const;
  std::size_t size() const;
  std::vector<std::string> keys() const;

  bool is_array() const { return value_->is_array(); }
  bool is_object() const { return value_->is_object(); }
  bool is_string() const { return value_->is_string(); }

  long as_long() const;
  int as_int() const;
  bool as_bool() const;
  std::string as_string() const;
  /// Integer literal given as a JSON integer or a decimal string.
  Integer as_integer() const;

  [[noreturn]] void error(const std::string& message) const;

 private:
  const Json* value_;
  std::string pointer_;
  const Document* doc_;
};

// Readers

ContextPtr read_context(const Node& n, std::optional<int> precision_override = std::nullopt);
PadicElement read_element(const Node& n, const ContextPtr& ctx);
/// `degree_override` (--tdegree) beats the "D" field; with neither, D is
/// the number of coefficients minus one.
IwasawaSeries read_series(const Node& n, const ContextPtr& ctx,
                          std::optional<int> degree_override = std::nullopt);
BivariateSeries read_bivariate(const Node& n, const ContextPtr& ctx,
                               std::optional<int> t_degree_override = std::nullopt);
Matrix<PadicElement> read_matrix(const Node& n, const ContextPtr& ctx);
Matrix<IwasawaSeries> read_series_matrix(const Node& n, const ContextPtr& ctx,
                                         std::optional<int> degree_override);
Matrix<BivariateSeries> read_bivariate_matrix(const Node& n, const ContextPtr& ctx,
                                              std::optional<int> t_degree_override);
exact::ZPoly read_zpoly(const Node& n);
exact::RationalMatrix read_rational_matrix(const Node& n);
StructureData read_structure(const Node& n);
FiniteGroup read_group(const Node& n);
CharacterData read_character(const Node& n, const FiniteGroup& group, const ContextPtr& ctx);
FiniteModule read_finite_module(const Node& n, const FiniteGroup& group, const ContextPtr& ctx);
/// {"q_exponent": c}, {"order": "125"} or "INFINITE".
QuotientOrder read_quotient_order(const Node& n, const ContextPtr& ctx);

// Writers

Json to_json(const PadicContext& ctx);
Json to_json(const PadicElement& x);
Json to_json(const IwasawaSeries& f);
Json to_json(const BivariateSeries& f);
Json to_json(std::span<const PadicElement> poly);
Json to_json(const QuotientOrder& order, const Integer& q);
Json to_json(const exact::ZPoly& poly);
Json to_json(const StructureData& data);
Json to_json(const Matrix<PadicElement>& m);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace iwasawa::io
