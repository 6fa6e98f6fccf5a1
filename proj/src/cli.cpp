#include "iwasawa/cli.hpp"

#include <functional>
#include <map>
#include <random>

#include "iwasawa/io.hpp"

namespace iwasawa::cli {

namespace {

using io::Json;
using io::Node;

struct Job {
  const Node& root;
  const Options& options;
  Json report;
  int exit_code = kSuccess;
};

using Handler = std::function<void(Job&)>;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BoundExceeded:
      return kMathFailure;
    case ErrorKind::PrecisionAmbiguous:
    case ErrorKind::PrecisionLoss:
    case ErrorKind::ZeroAtPrecision:
    case ErrorKind::IrregularAtPrecision:
      return kPrecisionAmbiguous;
    default:
      return kInputError;
  }
}

ContextPtr context_of(Job& job) {
  const auto ctx = io::read_context(job.root.at("ctx"), job.options.precision);
  job.report["ctx"] = io::to_json(*ctx);
  return ctx;
}

std::optional<int> degree_of(const Job& job) {
  if (job.options.tdegree) return job.options.tdegree;
  if (const auto d = job.root.find("D")) return d->as_int();
  return std::nullopt;
}

// Common window for several series read from one input.
std::vector<IwasawaSeries> read_series_list(const Job& job, const std::vector<Node>& nodes, const ContextPtr& ctx) {
  std::vector<IwasawaSeries> out;
  for (const auto& n : nodes) out.push_back(io::read_series(n, ctx, degree_of(job)));
  if (!degree_of(job)) {
    int d = 0;
    for (const auto& s : out) d = std::max(d, s.degree_bound());
    for (auto& s : out) s = s.with_degree_bound(d);
  }
  return out;
}

std::vector<Node> list_nodes(const Node& n) {
  if (!n.is_array()) n.error("expected an array");
  std::vector<Node> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n.at(i));
  return out;
}

std::vector<int> read_levels(const Node& n) {
  std::vector<int> out;
  for (const auto& x : list_nodes(n)) {
    const int v = x.as_int();
    if (v < 0) x.error("levels must be >= 0");
    out.push_back(v);
  }
  return out;
}

const char* status_text(bool pass) { return pass ? "PASS" : "FAIL"; }

Json weierstrass_json(const WeierstrassData& w) {
  Json j;
  j["mu"] = w.mu;
  j["lambda"] = w.lambda();
  j["precision"] = w.precision;
  j["distinguished"] = io::to_json(w.distinguished);
  j["unit"] = io::to_json(w.unit);
  j["canonical"] = io::to_json(w.canonical());
  return j;
}

void cmd_weierstrass(Job& job) {
  const auto ctx = context_of(job);
  const auto f = io::read_series(job.root.at("series"), ctx, degree_of(job));
  const auto w = weierstrass_prepare(f);
  const Json data = weierstrass_json(w);
  for (auto& [k, v] : data.items()) job.report[k] = v;
  job.report["is_distinguished"] = is_distinguished(w.distinguished);
  if (const auto g_node = job.root.find("dividend")) {
    const auto g = io::read_series(*g_node, ctx, f.degree_bound());
    const auto qr = weierstrass_divide(g, w.distinguished);
    job.report["quotient"] = io::to_json(qr.quotient);
    job.report["remainder"] = io::to_json(qr.remainder);
  }
}

void cmd_invariants(Job& job) {
  const auto ctx = context_of(job);
  const auto f = io::read_series(job.root.at("series"), ctx, degree_of(job));
  const auto [mu, lambda] = mu_lambda(f);
  job.report["mu"] = mu;
  job.report["lambda"] = lambda;
  job.report["constant_quotient_order"] = io::to_json(constant_quotient_order(f), ctx->q());
  job.report["order_of_vanishing_at_zero"] = order_of_vanishing_at_zero(f);
  if (const auto levels = job.root.find("levels")) {
    Json rows = Json::array();
    for (int n : read_levels(*levels)) {
      Json row;
      row["n"] = n;
      row["coprime_to_cyclotomic"] = coprime_to_cyclotomic(f, n);
      rows.push_back(row);
    }
    job.report["cyclotomic"] = rows;
  }
  if (const auto points = job.root.find("evaluate_at")) {
    Json values = Json::array();
    for (const auto& t : list_nodes(*points)) {
      const auto x = io::read_element(t, ctx);
      const auto v = evaluate(f, x);
      Json row;
      row["t"] = io::to_json(x);
      row["value"] = io::to_json(v);
      row["valuation"] = v.valuation();
      values.push_back(row);
    }
    job.report["evaluations"] = values;
  }
}

ModulePresentation read_presentation(Job& job, const ContextPtr& ctx) {
  if (const auto s = job.root.find("structure")) {
    const auto d = degree_of(job);
    if (!d) job.root.error("a structure input needs a truncation degree D");
    try {
      return presentation_from_structure(io::read_structure(*s), ctx, *d);
    } catch (const Error& err) {
      if (err.kind() == ErrorKind::NotDistinguished || err.kind() == ErrorKind::InvalidInput) s->error(err.message());
      throw;
    }
  }
  return ModulePresentation{io::read_series_matrix(job.root.at("matrix"), ctx, degree_of(job))};
}

void cmd_charpoly(Job& job) {
  const auto ctx = context_of(job);
  if (job.root.has("matrix") || job.root.has("structure")) {
    const auto pres = read_presentation(job, ctx);
    if (!pres.matrix.square()) job.root.at("matrix").error("presentation must be square");
    job.report["determinant"] = io::to_json(determinant(pres.matrix));
    const auto ch = char_series(pres);
    const auto [mu, lambda] = mu_lambda(ch);
    job.report["char_series"] = io::to_json(ch);
    job.report["mu"] = mu;
    job.report["lambda"] = lambda;
  }
  if (const auto minors = job.root.find("minors")) {
    const auto series = read_series_list(job, list_nodes(*minors), ctx);
    job.report["pseudo_null"] = pseudo_null_test(series);
  }
  if (!job.report.contains("char_series") && !job.report.contains("pseudo_null")) {
    job.root.error("expected \"matrix\", \"structure\" or \"minors\"");
  }
}

StructureData random_structure(std::mt19937_64& rng, long p) {
  StructureData data;
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> deg(1, 4);
  std::uniform_int_distribution<long> coeff(-3, 3);
  const int factors = count(rng);
  for (int i = 0; i < factors; ++i) {
    exact::ZPoly f(deg(rng) + 1, 0);
    f.back() = 1;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) f[k] = Integer(p) * coeff(rng);
    data.factors.push_back(std::move(f));
  }
  return data;
}

void cmd_control_check(Job& job) {
  const auto ctx = context_of(job);
  const long p = ctx->p();
  const auto levels = job.root.has("levels") ? read_levels(job.root.at("levels")) : std::vector<int>{0, 1, 2, 3};
  bool pass = true;
  if (const auto s = job.root.find("structure")) {
    const auto data = io::read_structure(*s);
    try {
      validate_structure(data, p);
    } catch (const Error& err) {
      s->error(err.message());
    }
    const int e = job.root.at("e_expected").as_int();
    const auto report = control_check(data, p, e, levels);
    job.report["structure"] = io::to_json(data);
    job.report["e_expected"] = e;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      Json r;
      r["n"] = row.n;
      r["formula_rank"] = row.formula_rank;
      r["bruteforce_rank"] = row.bruteforce_rank;
      r["pass"] = row.pass;
      rows.push_back(r);
    }
    job.report["rows"] = rows;
    pass = report.pass;
  }
  if (const auto trials = job.root.find("random_trials")) {
    const int count = trials->as_int();
    if (count < 0) trials->error("random_trials must be >= 0");
    const std::uint64_t seed = job.options.seed.value_or(0);
    std::mt19937_64 rng(seed);
    int mismatches = 0;
    for (int t = 0; t < count; ++t) {
      const auto data = random_structure(rng, p);
      for (int n : levels) {
        if (coinvariant_rank(data, p, n) != coinvariant_rank_bruteforce(data, p, n)) ++mismatches;
      }
    }
    Json r;
    r["seed"] = seed;
    r["trials"] = count;
    r["mismatches"] = mismatches;
    job.report["random"] = r;
    pass = pass && mismatches == 0;
  }
  if (!job.root.has("structure") && !job.root.has("random_trials")) {
    job.root.error("expected \"structure\" or \"random_trials\"");
  }
  job.report["status"] = status_text(pass);
  if (!pass) job.exit_code = kMathFailure;
}

void cmd_constant_term(Job& job) {
  const auto ctx = context_of(job);
  const auto report = constant_term_check(read_presentation(job, ctx));
  job.report["char_order"] = io::to_json(report.char_order, ctx->q());
  job.report["quotient_order"] = io::to_json(report.quotient_order, ctx->q());
  switch (report.status) {
    case ConstantTermStatus::Pass:
      job.report["status"] = "PASS";
      break;
    case ConstantTermStatus::TrivialZero:
      job.report["status"] = "TRIVIAL_ZERO";
      break;
    case ConstantTermStatus::Fail:
      job.report["status"] = "FAIL";
      job.exit_code = kMathFailure;
      break;
  }
}

void cmd_divides(Job& job) {
  const auto ctx = context_of(job);
  const auto fg = read_series_list(job, {job.root.at("f"), job.root.at("g")}, ctx);
  const bool invert_p = job.root.has("invert_p") && job.root.at("invert_p").as_bool();
  job.report["invert_p"] = invert_p;
  job.report["divides"] = divides(fg[0], fg[1], invert_p);
}

void cmd_specialize(Job& job) {
  const auto ctx = context_of(job);
  const auto y = io::read_element(job.root.at("y"), ctx);
  job.report["y"] = io::to_json(y);
  if (const auto s = job.root.find("series")) {
    const auto f = io::read_bivariate(*s, ctx, job.options.tdegree);
    const auto out = specialize_Y(f, y);
    job.report["specialized"] = io::to_json(out);
    job.report["precision"] = out.context()->precision();
  }
  if (const auto m = job.root.find("matrix")) {
    const auto pres = io::read_bivariate_matrix(*m, ctx, job.options.tdegree);
    if (!pres.square()) m->error("presentation must be square");
    const auto report = char_specialization_check(pres, y);
    job.report["specialized_char"] = io::to_json(report.specialized_char);
    job.report["char_of_specialized"] = io::to_json(report.char_of_specialized);
    job.report["precision"] = report.specialized_char.context()->precision();
    job.report["status"] = status_text(report.pass);
    if (!report.pass) job.exit_code = kMathFailure;
  }
  if (!job.root.has("series") && !job.root.has("matrix")) job.root.error("expected \"series\" or \"matrix\"");
}

void cmd_grid(Job& job) {
  const auto ctx = context_of(job);
  const int r = job.root.has("r") ? job.root.at("r").as_int() : 0;
  const long e = job.root.has("e") ? job.root.at("e").as_long() : 1;
  const int n_max = job.root.at("n_max").as_int();
  if (e <= 0) job.root.at("e").error("e must be positive");
  const auto grid = weight_grid(ctx, r, static_cast<unsigned long>(e), n_max);
  job.report["r"] = grid.r;
  job.report["e"] = grid.e;
  Json entries = Json::array();
  for (const auto& entry : grid.entries) {
    Json j;
    j["n"] = entry.n;
    j["k"] = entry.k.get_str();
    j["y"] = io::to_json(entry.y);
    j["valuation"] = entry.y.valuation();
    entries.push_back(j);
  }
  job.report["entries"] = entries;
}

void cmd_regulator(Job& job) {
  const auto ctx = context_of(job);
  const auto s = io::read_matrix(job.root.at("s_plus"), ctx);
  if (!s.square()) job.root.at("s_plus").error("S+ must be square");
  const auto reg = regulator(s);
  job.report["value"] = io::to_json(reg.value);
  job.report["precision"] = reg.precision;
  if (reg.valuation) {
    job.report["valuation"] = *reg.valuation;
  } else {
    job.report["valuation"] = nullptr;
  }
  job.report["sel_sharp_order"] = io::to_json(sel_sharp_order(s), ctx->q());
}

Json hecke_json(const HeckeRoots& roots) {
  Json j;
  j["kind"] = roots.kind == RootKind::Split ? "SPLIT" : "INERT";
  if (roots.alpha) j["alpha"] = io::to_json(*roots.alpha);
  if (roots.beta) j["beta"] = io::to_json(*roots.beta);
  if (roots.alpha_squared) j["alpha_squared"] = io::to_json(*roots.alpha_squared);
  j["regular"] = roots.regular;
  j["precision"] = roots.precision;
  return j;
}

void cmd_predict_l0(Job& job) {
  const auto ctx = context_of(job);
  StabilizationData stab;
  if (const auto w = job.root.find("weight_one")) {
    const auto roots = hecke_roots(io::read_element(w->at("a_p"), ctx), io::read_element(w->at("eps_p"), ctx));
    job.report["hecke_roots"] = hecke_json(roots);
    if (roots.kind != RootKind::Split) w->error("Hecke polynomial has no roots in O; inert stabilization is not supported");
    const std::string which = w->has("root") ? w->at("root").as_string() : "alpha";
    if (which != "alpha" && which != "beta") w->at("root").error("root must be \"alpha\" or \"beta\"");
    stab.d = 2;
    stab.d_plus = 1;
    stab.frob_minus = Matrix<PadicElement>(1, 1, which == "alpha" ? *roots.alpha : *roots.beta);
    stab.s_plus = Matrix<PadicElement>(1, 1, io::read_element(w->at("log_eps"), ctx));
    stab.class_order = w->has("class_order") ? io::read_quotient_order(w->at("class_order"), ctx) : QuotientOrder::finite(0);
  } else {
    stab.d = job.root.at("d").as_int();
    stab.d_plus = job.root.at("d_plus").as_int();
    if (stab.d_plus < stab.d) {
      stab.frob_minus = io::read_matrix(job.root.at("frob_minus"), ctx);
    }
    stab.s_plus = io::read_matrix(job.root.at("s_plus"), ctx);
    stab.class_order = job.root.has("class_order") ? io::read_quotient_order(job.root.at("class_order"), ctx)
                                                   : QuotientOrder::finite(0);
  }
  const auto pred = predicted_constant_term(stab);
  job.report["d"] = stab.d;
  job.report["d_plus"] = stab.d_plus;
  job.report["trivial_zero_count"] = pred.trivial_zero_count;
  job.report["class_root_exponent"] = pred.class_root_exponent;
  if (!pred.valuation) {
    job.report["status"] = "TRIVIAL_ZERO";
    job.report["valuation"] = nullptr;
    return;
  }
  job.report["status"] = "FINITE";
  job.report["valuation"] = *pred.valuation;
  job.report["regulator_valuation"] = pred.regulator_valuation;
  job.report["sel_sharp_order"] = io::to_json(pred.sel_sharp, ctx->q());
  job.report["decomposition_holds"] =
      !pred.sel_sharp.infinite && *pred.valuation == pred.sel_sharp.q_exponent + pred.class_root_exponent;
}

bool is_zero_element(const GroupAlgebraElement& a) {
  return std::all_of(a.begin(), a.end(), [](const PadicElement& x) { return x.is_zero(); });
}

void cmd_idempotent(Job& job) {
  const auto ctx = context_of(job);
  const auto group = io::read_group(job.root.at("group"));
  std::vector<CharacterData> chars;
  std::vector<std::string> names;
  const auto char_nodes = list_nodes(job.root.at("characters"));
  for (std::size_t i = 0; i < char_nodes.size(); ++i) {
    chars.push_back(io::read_character(char_nodes[i], group, ctx));
    names.push_back(char_nodes[i].has("name") ? char_nodes[i].at("name").as_string() : "chi" + std::to_string(i));
  }
  std::vector<GroupAlgebraElement> idem;
  Json out = Json::array();
  bool pass = true;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    idem.push_back(idempotent_coeffs(chars[i]));
    Json c;
    c["name"] = names[i];
    Json coeffs;
    for (std::size_t g = 0; g < group.order(); ++g) coeffs[group.labels()[g]] = io::to_json(idem.back()[g]);
    c["coefficients"] = coeffs;
    const bool is_idem = group_algebra_multiply(group, idem.back(), idem.back()) == idem.back();
    c["idempotent"] = is_idem;
    pass = pass && is_idem;
    out.push_back(c);
  }
  job.report["characters"] = out;
  bool orthogonal = true;
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = 0; j < idem.size(); ++j) {
      if (i != j) orthogonal = orthogonal && is_zero_element(group_algebra_multiply(group, idem[i], idem[j]));
    }
  }
  GroupAlgebraElement sum(group.order(), PadicElement(ctx));
  for (const auto& e : idem) {
    for (std::size_t g = 0; g < group.order(); ++g) sum[g] += e[g];
  }
  GroupAlgebraElement one(group.order(), PadicElement(ctx));
  one[group.identity()] = PadicElement::from_integer(ctx, 1);
  job.report["orthogonal"] = orthogonal;
  job.report["complete"] = sum == one;
  pass = pass && orthogonal;
  if (const auto m = job.root.find("module")) {
    const auto module = io::read_finite_module(*m, group, ctx);
    Json orders = Json::array();
    QuotientOrder product = QuotientOrder::finite(0);
    for (std::size_t i = 0; i < chars.size(); ++i) {
      const auto order = isotypic_component(module, chars[i]);
      Json o = io::to_json(order, ctx->q());
      o["name"] = names[i];
      orders.push_back(o);
      product = product * order;
    }
    const auto total = QuotientOrder::finite(static_cast<long>(module.exponent) * module.rank);
    job.report["isotypic_orders"] = orders;
    job.report["module_order"] = io::to_json(total, ctx->q());
    const bool multiplies = product == total;
    job.report["orders_multiply"] = multiplies;
    // The product identity only applies to a complete table.
    if (sum == one) pass = pass && multiplies;
  }
  job.report["status"] = status_text(pass);
  if (!pass) job.exit_code = kMathFailure;
}

void cmd_triv_zeros(Job& job) {
  const bool exact_entries = job.root.has("exact") && job.root.at("exact").as_bool();
  if (exact_entries) {
    job.report["exact"] = true;
    job.report["trivial_zero_count"] = trivial_zero_count(io::read_rational_matrix(job.root.at("frob_minus")));
    return;
  }
  const auto ctx = context_of(job);
  const auto f = io::read_matrix(job.root.at("frob_minus"), ctx);
  if (!f.square()) job.root.at("frob_minus").error("Frobenius matrix must be square");
  job.report["exact"] = false;
  job.report["trivial_zero_count"] = trivial_zero_count(f);
}

void cmd_limit_div(Job& job) {
  const auto ctx = context_of(job);
  const auto a_nodes = list_nodes(job.root.at("a_seq"));
  const auto b_nodes = list_nodes(job.root.at("b_seq"));
  if (a_nodes.size() != b_nodes.size()) job.root.at("b_seq").error("a_seq and b_seq differ in length");
  std::vector<Node> all = a_nodes;
  all.insert(all.end(), b_nodes.begin(), b_nodes.end());
  all.push_back(job.root.at("a_lim"));
  all.push_back(job.root.at("b_lim"));
  const auto series = read_series_list(job, all, ctx);
  const std::size_t n = a_nodes.size();
  const std::vector<IwasawaSeries> a(series.begin(), series.begin() + static_cast<long>(n));
  const std::vector<IwasawaSeries> b(series.begin() + static_cast<long>(n), series.begin() + static_cast<long>(2 * n));
  const int k_max = job.root.at("K_max").as_int();
  const auto report = limit_divisibility_check(a, b, series[2 * n], series[2 * n + 1], k_max);
  job.report["K"] = report.k;
  job.report["status"] = report.status == LimitStatus::Pass ? "PASS" : "FAIL";
  if (report.status != LimitStatus::Pass) job.exit_code = kMathFailure;
}

struct Entry {
  CommandInfo info;
  Handler handler;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> table = {
      {{"weierstrass", {"weierstrass_prepare", "weierstrass_divide", "is_distinguished", "omega", "teichmuller",
                        "iwasawa_log", "nth_root", "valuation"}},
       cmd_weierstrass},
      {{"invariants",
        {"mu_lambda", "constant_quotient_order", "order_of_vanishing_at_zero", "coprime_to_cyclotomic", "evaluate",
         "valuation"}},
       cmd_invariants},
      {{"charpoly", {"determinant", "char_series", "pseudo_null_test", "presentation_from_structure"}}, cmd_charpoly},
      {{"control-check", {"control_check", "coinvariant_rank", "coinvariant_rank_bruteforce", "validate_structure"}},
       cmd_control_check},
      {{"constant-term", {"constant_term_check", "finite_quotient_order", "char_series", "constant_quotient_order"}},
       cmd_constant_term},
      {{"divides", {"divides"}}, cmd_divides},
      {{"specialize", {"specialize_Y", "char_specialization_check"}}, cmd_specialize},
      {{"grid", {"weight_grid", "nth_root"}}, cmd_grid},
      {{"regulator", {"regulator", "sel_sharp_order"}}, cmd_regulator},
      {{"predict-l0", {"predicted_constant_term", "hecke_roots", "trivial_zero_count", "regulator", "sel_sharp_order"}},
       cmd_predict_l0},
      {{"idempotent", {"idempotent_coeffs", "isotypic_component"}}, cmd_idempotent},
      {{"triv-zeros", {"trivial_zero_count"}}, cmd_triv_zeros},
      {{"limit-div", {"limit_divisibility_check", "divides"}}, cmd_limit_div},
  };
  return table;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Json j;
  j["command"] = command;
  j["status"] = "ERROR";
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j;
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> infos = [] {
    std::vector<CommandInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Result run(const std::string& command, const std::string& input, const Options& options, const std::string& source) {
  const auto& table = registry();
  const auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.name == command; });
  if (it == table.end()) {
    return {kInputError, io::dump(error_report(command, "InvalidInput", "unknown command " + command))};
  }
  try {
    const auto doc = io::Document::parse(input, source);
    const Node root = doc.root();
    if (!root.is_object()) root.error("input must be a JSON object");
    Job job{root, options, Json::object(), kSuccess};
    job.report["command"] = command;
    it->handler(job);
    if (!job.report.contains("status")) job.report["status"] = "OK";
    return {job.exit_code, io::dump(job.report)};
  } catch (const Error& err) {
    return {exit_code_for(err.kind()), io::dump(error_report(command, std::string(to_string(err.kind())), err.message()))};
  } catch (const Json::exception& err) {
    return {kInputError, io::dump(error_report(command, "InvalidInput", err.what()))};
  }
}

}  // namespace iwasawa::cli
