#include "iwasawa/io.hpp"

#include <algorithm>
#include <cctype>

namespace iwasawa::io {

namespace {

std::string escape_pointer_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

// Walks well-formed JSON text and records the line on which each value
// starts, keyed by JSON pointer.
class LineScanner {
 public:
  LineScanner(const std::string& text, std::map<std::string, int>& out) : s_(text), out_(out) {}

  void run() { value(""); }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }

  std::string string_token() {
    const std::size_t start = i_++;
    while (i_ < s_.size() && s_[i_] != '"') i_ += s_[i_] == '\\' ? 2 : 1;
    ++i_;
    return Json::parse(s_.substr(start, i_ - start)).get<std::string>();
  }

  void value(const std::string& path) {
    skip_ws();
    out_[path] = line_;
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++i_;
      skip_ws();
      if (s_[i_] == close) {
        ++i_;
        return;
      }
      for (std::size_t index = 0;; ++index) {
        skip_ws();
        std::string child;
        if (c == '{') {
          child = path + "/" + escape_pointer_token(string_token());
          skip_ws();
          ++i_;  // ':'
        } else {
          child = path + "/" + std::to_string(index);
        }
        value(child);
        skip_ws();
        if (s_[i_++] == close) return;
      }
    }
    if (c == '"') {
      string_token();
      return;
    }
    while (i_ < s_.size() && std::string_view(",]} \t\r\n").find(s_[i_]) == std::string_view::npos) ++i_;
  }

  const std::string& s_;
  std::map<std::string, int>& out_;
  std::size_t i_ = 0;
  int line_ = 1;
};

Integer parse_decimal(const Node& n, const std::string& text) {
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  const std::size_t digits = t.size() - (!t.empty() && t[0] == '-' ? 1 : 0);
  if (digits == 0 || !std::all_of(t.end() - static_cast<long>(digits), t.end(),
                                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    n.error("expected a decimal integer, got \"" + text + "\"");
  }
  return Integer(t);
}

// Integer or "a/b" with b prime to p, as an element of O/p^N.
PadicElement scalar_from_text(const Node& n, const std::string& text, const ContextPtr& ctx) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return PadicElement::from_integer(ctx, parse_decimal(n, text));
  const Integer num = parse_decimal(n, text.substr(0, slash));
  const Integer den = parse_decimal(n, text.substr(slash + 1));
  const auto d = PadicElement::from_integer(ctx, den);
  if (!d.is_unit()) n.error("denominator of " + text + " is divisible by p");
  return PadicElement::from_integer(ctx, num) * d.inverse();
}

std::vector<Integer> integer_coordinates(const Node& n, const ContextPtr& ctx) {
  std::vector<Integer> coords(ctx->degree(), 0);
  if (n.is_array()) {
    if (static_cast<int>(n.size()) != ctx->degree()) {
      n.error("expected " + std::to_string(ctx->degree()) + " coordinates");
    }
    for (std::size_t i = 0; i < n.size(); ++i) coords[i] = n.at(i).as_integer();
  } else {
    coords[0] = n.as_integer();
  }
  return coords;
}

std::vector<Node> series_coefficient_nodes(const Node& n) {
  const Node list = n.is_array() ? n : n.at("coeffs");
  if (!list.is_array()) list.error("coefficients must be an array");
  std::vector<Node> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.push_back(list.at(i));
  return out;
}

// Degree implied by a series node when nothing else fixes it.
int natural_degree(const Node& n) {
  if (n.is_object() && n.has("D")) return n.at("D").as_int();
  if (n.is_object() && n.has("omega")) n.error("omega series need an explicit truncation degree");
  return std::max<int>(0, static_cast<int>(series_coefficient_nodes(n).size()) - 1);
}

template <class T, class F>
Matrix<T> read_matrix_with(const Node& n, F&& read_entry) {
  if (!n.is_array() || n.size() == 0) n.error("matrix must be a nonempty array of rows");
  const std::size_t rows = n.size();
  const std::size_t cols = n.at(0).size();
  std::vector<T> data;
  for (std::size_t i = 0; i < rows; ++i) {
    const Node row = n.at(i);
    if (!row.is_array() || row.size() != cols) row.error("rows must be arrays of equal length");
    for (std::size_t j = 0; j < cols; ++j) data.push_back(read_entry(row.at(j)));
  }
  return Matrix<T>(rows, cols, std::move(data));
}

}  // namespace

// Document / Node

Document Document::parse(const std::string& text, std::string source) {
  Document doc;
  doc.source_ = std::move(source);
  try {
    doc.value_ = Json::parse(text);
  } catch (const Json::parse_error& err) {
    const std::size_t byte = std::min<std::size_t>(err.byte, text.size());
    int line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    const std::size_t column = byte > line_start ? byte - line_start : 1;
    std::string what = err.what();
    const auto pos = what.find("syntax error");
    if (pos != std::string::npos) what = what.substr(pos);
    fail(ErrorKind::InvalidInput, doc.source_ + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                      ": malformed JSON: " + what);
  }
  LineScanner(text, doc.lines_).run();
  return doc;
}

Node Document::root() const { return Node(&value_, "", this); }

int Document::line_of(const std::string& pointer) const {
  const auto it = lines_.find(pointer);
  return it == lines_.end() ? 0 : it->second;
}

void Node::error(const std::string& message) const {
  const std::string where = pointer_.empty() ? "/" : pointer_;
  fail(ErrorKind::InvalidInput,
       doc_->source() + ":" + std::to_string(doc_->line_of(pointer_)) + ": " + where + ": " + message);
}

bool Node::has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(const std::string& key) const {
  if (!value_->is_object()) error("expected an object");
  const auto it = value_->find(key);
  if (it == value_->end()) error("missing field \"" + key + "\"");
  return Node(&*it, pointer_ + "/" + escape_pointer_token(key), doc_);
}

std::optional<Node> Node::find(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

Node Node::at(std::size_t index) const {
  if (!value_->is_array()) error("expected an array");
  if (index >= value_->size()) error("index " + std::to_string(index) + " out of range");
  return Node(&(*value_)[index], pointer_ + "/" + std::to_string(index), doc_);
}

std::size_t Node::size() const {
  if (!value_->is_array() && !value_->is_object()) error("expected an array");
  return value_->size();
}

std::vector<std::string> Node::keys() const {
  if (!value_->is_object()) error("expected an object");
  std::vector<std::string> out;
  for (auto it = value_->begin(); it != value_->end(); ++it) out.push_back(it.key());
  return out;
}

long Node::as_long() const {
  if (value_->is_number_integer()) return value_->get<long>();
  if (value_->is_string()) {
    const Integer v = parse_decimal(*this, value_->get<std::string>());
    if (!v.fits_slong_p()) error("integer out of range");
    return v.get_si();
  }
  error("expected an integer");
}

int Node::as_int() const {
  const long v = as_long();
  if (v < -(1L << 30) || v > (1L << 30)) error("integer out of range");
  return static_cast<int>(v);
}

bool Node::as_bool() const {
  if (!value_->is_boolean()) error("expected true or false");
  return value_->get<bool>();
}

std::string Node::as_string() const {
  if (!value_->is_string()) error("expected a string");
  return value_->get<std::string>();
}

Integer Node::as_integer() const {
  if (value_->is_number_unsigned()) return Integer(std::to_string(value_->get<unsigned long long>()));
  if (value_->is_number_integer()) return Integer(std::to_string(value_->get<long long>()));
  if (value_->is_string()) return parse_decimal(*this, value_->get<std::string>());
  error("expected an integer or a decimal string");
}

// Readers

ContextPtr read_context(const Node& n, std::optional<int> precision_override) {
  const long p = n.at("p").as_long();
  const int f = n.has("f") ? n.at("f").as_int() : 1;
  const int precision = precision_override ? *precision_override : n.at("N").as_int();
  try {
    if (const auto m = n.find("modulus")) {
      std::vector<Integer> modulus;
      for (std::size_t i = 0; i < m->size(); ++i) modulus.push_back(m->at(i).as_integer());
      return PadicContext::create(p, f, precision, std::move(modulus));
    }
    return PadicContext::create(p, f, precision);
  } catch (const Error& err) {
    n.error(err.message());
  }
}

PadicElement read_element(const Node& n, const ContextPtr& ctx) {
  const Json& j = n.json();
  if (j.is_number_integer()) return PadicElement::from_integer(ctx, n.as_integer());
  if (j.is_string()) return scalar_from_text(n, j.get<std::string>(), ctx);
  if (j.is_array()) {
    if (static_cast<int>(n.size()) != ctx->degree()) {
      n.error("expected " + std::to_string(ctx->degree()) + " coordinates");
    }
    PadicElement out(ctx);
    std::vector<Integer> basis(ctx->degree(), 0);
    for (std::size_t i = 0; i < n.size(); ++i) {
      std::fill(basis.begin(), basis.end(), Integer(0));
      basis[i] = 1;
      out += read_element(n.at(i), ctx) * PadicElement::from_coordinates(ctx, basis);
    }
    return out;
  }
  if (j.is_object()) {
    try {
      if (const auto x = n.find("teichmuller")) return teichmuller(read_element(*x, ctx));
      if (const auto x = n.find("log")) return iwasawa_log(read_element(*x, ctx));
      if (const auto x = n.find("root")) {
        const long e = n.at("e").as_long();
        if (e <= 0) n.at("e").error("root exponent must be positive");
        return nth_root(read_element(*x, ctx), static_cast<unsigned long>(e));
      }
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::InvalidInput) throw;
      // Keep the mathematical error kind; add the location.
      fail(err.kind(), n.pointer() + ": " + err.message());
    }
    n.error("unknown element expression");
  }
  n.error("expected an element of O");
}

IwasawaSeries read_series(const Node& n, const ContextPtr& ctx, std::optional<int> degree_override) {
  const int d = degree_override ? *degree_override : natural_degree(n);
  if (d < 0) n.error("truncation degree must be >= 0");
  if (n.is_object() && n.has("omega")) {
    try {
      return omega(n.at("omega").as_int(), ctx, d);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::InvalidInput) n.error(err.message());
      throw;
    }
  }
  const auto nodes = series_coefficient_nodes(n);
  const bool is_exact = n.is_object() && n.has("exact") && n.at("exact").as_bool();
  if (is_exact) {
    std::vector<std::vector<Integer>> coords;
    for (const auto& c : nodes) coords.push_back(integer_coordinates(c, ctx));
    for (std::size_t i = static_cast<std::size_t>(d) + 1; i < coords.size(); ++i) {
      if (std::any_of(coords[i].begin(), coords[i].end(), [](const Integer& x) { return x != 0; })) {
        nodes[i].error("exact polynomial exceeds the truncation degree " + std::to_string(d));
      }
    }
    return IwasawaSeries::from_exact_coordinates(ctx, d, std::move(coords));
  }
  std::vector<PadicElement> coeffs;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    PadicElement c = read_element(nodes[i], ctx);
    if (i > static_cast<std::size_t>(d)) {
      if (!c.is_zero()) nodes[i].error("coefficient beyond the truncation degree " + std::to_string(d));
      continue;
    }
    coeffs.push_back(std::move(c));
  }
  return IwasawaSeries::from_coefficients(ctx, d, std::move(coeffs));
}

BivariateSeries read_bivariate(const Node& n, const ContextPtr& ctx, std::optional<int> t_degree_override) {
  const Node coeffs = n.is_array() ? n : n.at("coeffs");
  if (!coeffs.is_array()) coeffs.error("coefficients must be an array");
  // Rows of T-coefficients, or a flat row-major list sized (DY+1)(DT+1).
  // For f > 1 a flat entry is itself an array, so the sizes decide.
  const bool sized_flat = n.is_object() && n.has("DY") && n.has("DT") &&
                          coeffs.size() == static_cast<std::size_t>(n.at("DY").as_int() + 1) *
                                               static_cast<std::size_t>(n.at("DT").as_int() + 1);
  bool nested = coeffs.size() > 0 && coeffs.at(0).is_array();
  if (nested && ctx->degree() > 1 && sized_flat) {
    const Node first = coeffs.at(0);
    nested = first.size() > 0 && first.at(0).is_array();
  }
  std::vector<std::vector<PadicElement>> rows;
  int dy = 0;
  int dt = 0;
  if (nested) {
    std::size_t width = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const Node row = coeffs.at(j);
      if (!row.is_array()) row.error("expected a row of T-coefficients");
      rows.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) rows.back().push_back(read_element(row.at(i), ctx));
      width = std::max(width, row.size());
    }
    dy = n.is_object() && n.has("DY") ? n.at("DY").as_int() : static_cast<int>(coeffs.size()) - 1;
    dt = n.is_object() && n.has("DT") ? n.at("DT").as_int() : static_cast<int>(width) - 1;
  } else {
    if (!n.is_object()) n.error("flat coefficient lists need DY and DT");
    dy = n.at("DY").as_int();
    dt = n.at("DT").as_int();
    const auto expected = static_cast<std::size_t>(dy + 1) * static_cast<std::size_t>(dt + 1);
    if (coeffs.size() != expected) coeffs.error("expected " + std::to_string(expected) + " coefficients");
    rows.assign(dy + 1, {});
    for (std::size_t k = 0; k < expected; ++k) {
      rows[k / static_cast<std::size_t>(dt + 1)].push_back(read_element(coeffs.at(k), ctx));
    }
  }
  if (dy < 0 || dt < 0) n.error("truncation degrees must be >= 0");
  if (static_cast<int>(rows.size()) > dy + 1) coeffs.error("more rows than DY allows");
  if (t_degree_override) {
    for (auto& row : rows) {
      for (std::size_t i = static_cast<std::size_t>(*t_degree_override) + 1; i < row.size(); ++i) {
        if (!row[i].is_zero()) n.error("coefficient beyond the T truncation degree");
      }
      if (static_cast<int>(row.size()) > *t_degree_override + 1) row.resize(*t_degree_override + 1, PadicElement(ctx));
    }
    dt = *t_degree_override;
  }
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) > dt + 1) n.error("row longer than DT allows");
  }
  return BivariateSeries::from_rows(ctx, dy, dt, rows);
}

Matrix<PadicElement> read_matrix(const Node& n, const ContextPtr& ctx) {
  return read_matrix_with<PadicElement>(n, [&](const Node& e) { return read_element(e, ctx); });
}

Matrix<IwasawaSeries> read_series_matrix(const Node& n, const ContextPtr& ctx, std::optional<int> degree_override) {
  if (!degree_override) {
    int d = 0;
    read_matrix_with<int>(n, [&](const Node& e) {
      d = std::max(d, natural_degree(e));
      return 0;
    });
    degree_override = d;
  }
  return read_matrix_with<IwasawaSeries>(n, [&](const Node& e) { return read_series(e, ctx, degree_override); });
}

Matrix<BivariateSeries> read_bivariate_matrix(const Node& n, const ContextPtr& ctx,
                                              std::optional<int> t_degree_override) {
  auto m = read_matrix_with<BivariateSeries>(n, [&](const Node& e) { return read_bivariate(e, ctx, t_degree_override); });
  int dy = 0;
  int dt = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      dy = std::max(dy, m(i, j).y_degree());
      dt = std::max(dt, m(i, j).t_degree());
    }
  }
  // Pad every entry into the common window.
  return m.map([&](const BivariateSeries& f) {
    BivariateSeries out(f.context(), dy, dt);
    for (int j = 0; j <= f.y_degree(); ++j) {
      for (int i = 0; i <= f.t_degree(); ++i) out(j, i) = f(j, i);
    }
    return out;
  });
}

exact::ZPoly read_zpoly(const Node& n) {
  if (!n.is_array()) n.error("expected an array of integer coefficients");
  exact::ZPoly out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n.at(i).as_integer());
  exact::trim(out);
  return out;
}

exact::RationalMatrix read_rational_matrix(const Node& n) {
  return [&] {
    if (!n.is_array() || n.size() == 0) n.error("matrix must be a nonempty array of rows");
    exact::RationalMatrix out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      const Node row = n.at(i);
      if (!row.is_array() || row.size() != n.at(0).size()) row.error("rows must be arrays of equal length");
      out.emplace_back();
      for (std::size_t j = 0; j < row.size(); ++j) {
        const Node e = row.at(j);
        if (e.is_string() && e.as_string().find('/') != std::string::npos) {
          const std::string t = e.as_string();
          const auto slash = t.find('/');
          const Integer den = parse_decimal(e, t.substr(slash + 1));
          if (den == 0) e.error("zero denominator");
          exact::Rational r(parse_decimal(e, t.substr(0, slash)), den);
          r.canonicalize();
          out.back().push_back(r);
        } else {
          out.back().push_back(exact::Rational(e.as_integer()));
        }
      }
    }
    return out;
  }();
}

StructureData read_structure(const Node& n) {
  StructureData data;
  if (const auto r = n.find("free_rank")) data.free_rank = r->as_int();
  if (const auto fs = n.find("factors")) {
    for (std::size_t i = 0; i < fs->size(); ++i) data.factors.push_back(read_zpoly(fs->at(i)));
  }
  if (const auto ms = n.find("mus")) {
    for (std::size_t i = 0; i < ms->size(); ++i) data.mus.push_back(ms->at(i).as_int());
  }
  return data;
}

FiniteGroup read_group(const Node& n) {
  if (const auto c = n.find("cyclic")) {
    const int m = c->as_int();
    if (m < 1 || m > 4096) c->error("cyclic group order out of range");
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels.push_back("g^" + std::to_string(i));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) table[i][j] = static_cast<std::size_t>((i + j) % m);
    }
    return FiniteGroup(std::move(labels), std::move(table));
  }
  const Node elems = n.at("elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) labels.push_back(elems.at(i).as_string());
  const Node t = n.at("table");
  if (!t.is_array() || t.size() != labels.size()) t.error("table must have one row per element");
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Node row = t.at(i);
    if (!row.is_array() || row.size() != labels.size()) row.error("table row has the wrong length");
    table.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const Node e = row.at(j);
      if (e.is_string()) {
        const auto it = std::find(labels.begin(), labels.end(), e.as_string());
        if (it == labels.end()) e.error("unknown element " + e.as_string());
        table.back().push_back(static_cast<std::size_t>(it - labels.begin()));
      } else {
        const long k = e.as_long();
        if (k < 0 || k >= static_cast<long>(labels.size())) e.error("element index out of range");
        table.back().push_back(static_cast<std::size_t>(k));
      }
    }
  }
  try {
    return FiniteGroup(std::move(labels), std::move(table));
  } catch (const Error& err) {
    n.error(err.message());
  }
}

CharacterData read_character(const Node& n, const FiniteGroup& group, const ContextPtr& ctx) {
  CharacterData chi{group, std::vector<PadicElement>(group.order(), PadicElement(ctx)), 1};
  const Node values = n.at("values");
  if (values.is_array()) {
    if (values.size() != group.order()) values.error("one value per group element");
    for (std::size_t i = 0; i < values.size(); ++i) chi.values[i] = read_element(values.at(i), ctx);
  } else {
    for (const auto& label : values.keys()) {
      std::size_t idx = 0;
      try {
        idx = group.index_of(label);
      } catch (const Error& err) {
        values.at(label).error(err.message());
      }
      chi.values[idx] = read_element(values.at(label), ctx);
    }
    if (values.keys().size() != group.order()) values.error("one value per group element");
  }
  chi.dim = n.has("dim") ? n.at("dim").as_int() : static_cast<int>(chi.values[group.identity()].coordinates()[0].get_si());
  return chi;
}

FiniteModule read_finite_module(const Node& n, const FiniteGroup& group, const ContextPtr& ctx) {
  FiniteModule m;
  m.exponent = n.at("exponent").as_int();
  m.rank = n.at("rank").as_int();
  if (m.exponent < 0 || m.rank < 0) n.error("exponent and rank must be >= 0");
  if (m.exponent > ctx->precision()) n.at("exponent").error("module exponent exceeds the precision N");
  const auto work = ctx->with_precision(std::max(m.exponent, 1));
  const Node action = n.at("action");
  m.action.assign(group.order(), Matrix<PadicElement>());
  if (action.is_array()) {
    if (action.size() != group.order()) action.error("one action matrix per group element");
    for (std::size_t i = 0; i < action.size(); ++i) m.action[i] = read_matrix(action.at(i), work);
  } else {
    for (const auto& label : action.keys()) m.action[group.index_of(label)] = read_matrix(action.at(label), work);
    if (action.keys().size() != group.order()) action.error("one action matrix per group element");
  }
  return m;
}

QuotientOrder read_quotient_order(const Node& n, const ContextPtr& ctx) {
  if (n.is_string() && n.as_string() == "INFINITE") return QuotientOrder::infinity();
  if (n.is_object() && n.has("q_exponent")) {
    const long c = n.at("q_exponent").as_long();
    if (c < 0) n.error("q_exponent must be >= 0");
    return QuotientOrder::finite(c);
  }
  const Node v = n.is_object() ? n.at("order") : n;
  Integer order = v.as_integer();
  long c = 0;
  while (order > 1 && mpz_divisible_p(order.get_mpz_t(), ctx->q().get_mpz_t())) {
    order /= ctx->q();
    ++c;
  }
  if (order != 1) v.error("order is not a power of q = " + ctx->q().get_str());
  return QuotientOrder::finite(c);
}

// Writers

Json to_json(const PadicContext& ctx) {
  Json j;
  j["p"] = ctx.p();
  j["f"] = ctx.degree();
  j["N"] = ctx.precision();
  Json m = Json::array();
  for (const auto& c : ctx.modulus()) m.push_back(c.get_str());
  j["modulus"] = m;
  return j;
}

Json to_json(const PadicElement& x) {
  const auto coords = x.coordinates();
  if (coords.size() == 1) return coords[0].get_str();
  Json j = Json::array();
  for (const auto& c : coords) j.push_back(c.get_str());
  return j;
}

Json to_json(std::span<const PadicElement> poly) {
  Json j = Json::array();
  for (const auto& c : poly) j.push_back(to_json(c));
  return j;
}

Json to_json(const IwasawaSeries& f) {
  Json j;
  j["D"] = f.degree_bound();
  j["coeffs"] = to_json(f.coefficients());
  j["exact"] = f.exact();
  return j;
}

Json to_json(const BivariateSeries& f) {
  Json j;
  j["DY"] = f.y_degree();
  j["DT"] = f.t_degree();
  Json rows = Json::array();
  for (int y = 0; y <= f.y_degree(); ++y) {
    Json row = Json::array();
    for (int t = 0; t <= f.t_degree(); ++t) row.push_back(to_json(f(y, t)));
    rows.push_back(row);
  }
  j["coeffs"] = rows;
  return j;
}

Json to_json(const QuotientOrder& order, const Integer& q) {
  Json j;
  j["order"] = order.to_string(q);
  if (order.infinite) {
    j["q_exponent"] = nullptr;
  } else {
    j["q_exponent"] = order.q_exponent;
  }
  return j;
}

Json to_json(const exact::ZPoly& poly) {
  Json j = Json::array();
  for (const auto& c : poly) j.push_back(c.get_str());
  return j;
}

Json to_json(const StructureData& data) {
  Json j;
  j["free_rank"] = data.free_rank;
  Json fs = Json::array();
  for (const auto& f : data.factors) fs.push_back(to_json(f));
  j["factors"] = fs;
  j["mus"] = data.mus;
  return j;
}

Json to_json(const Matrix<PadicElement>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace iwasawa::io
