#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so the
// tests can drive it in-process.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "metent/metent.hpp"

namespace metent::cli {

enum ExitCode { kOk = 0, kInvalidInput = 2, kNonCompact = 3, kCapExceeded = 4 };

struct Options {
  std::string model;
  std::string p = "2";
  std::string q = "2";
  std::string eps;
  std::string eps_grid;
  std::string eta = "1";
  std::string gamma = "1";
  std::string rogers_k = "1024";
  std::uint64_t resolution = 64;
  std::string format = "json";
  std::string out;
  std::string axes;
  std::string dims;
  std::string b;
  std::string s;
  std::uint64_t d = 1;
  std::string p1 = "2";
  std::string vol = "1";
  std::string bound = "upper";
  std::string split = "1/2";
  std::string query = "exact";
  bool nats = false;
  bool centers = false;
  bool tail_summable = false;
  bool liminf_positive = false;
  bool gamma_pq_flag = false;
  bool volume_ratio_flag = false;
  bool zeta_series_flag = false;
};

namespace detail {

inline double number(const std::string& text, const char* what) {
  if (text.empty()) throw InvalidInput(std::string("missing value for ") + what);
  return static_cast<double>(parse_rational(text));
}

inline double positive(const std::string& text, const char* what) {
  const double v = number(text, what);
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidInput(std::string(what) + " must be positive");
  return v;
}

inline HolderExponent exponent(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return HolderExponent::infinity();
  return HolderExponent(parse_rational(text));
}

inline std::vector<double> number_list(const std::string& text, const char* what) {
  if (text.empty()) throw InvalidInput(std::string("missing value for ") + what);
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item, what));
  return out;
}

inline std::vector<double> eps_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InvalidInput("--eps-grid must be start:stop:count");
  const double start = positive(parts[0], "grid start");
  const double stop = positive(parts[1], "grid stop");
  const double count = number(parts[2], "grid count");
  if (!(count >= 1.0) || count != std::floor(count) || count > 1e6) throw InvalidInput("grid count must be a positive integer");
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(start * std::pow(stop / start, t));
  }
  return out;
}

inline Json certificate_json(const BoundCertificate& c) {
  Json j = {{"effective_dim", c.effective_dim},
            {"block_sizes", c.block_sizes},
            {"inner_radii", c.inner_radii},
            {"tail_radius", c.tail_radius},
            {"tail_case", c.tail_case},
            {"finite_case", c.finite_case},
            {"eta", c.eta},
            {"kappa", c.kappa},
            {"omega_log2_size", c.omega_log2_size},
            {"radius_reported", c.radius_reported}};
  if (c.parametric) {
    j["parametric"] = true;
    j["rogers_k"] = c.rogers_k;
    j["gamma"] = c.gamma;
  }
  return j;
}

inline Json regime_json(const Regime& r) {
  Json j = {{"case", to_string(r.regime)}, {"b_star", r.b_star}, {"compact", r.compact()}};
  if (r.lower_const) j["lower_const"] = *r.lower_const;
  if (r.upper_const) j["upper_const"] = *r.upper_const;
  if (r.exact_const) j["exact_const"] = *r.exact_const;
  return j;
}

/// One evaluated value, before serialization.
struct Row {
  double epsilon = 0.0;
  double value_bits = 0.0;
  std::string kind;
  Json certificate;
  std::vector<std::string> warnings;
};

}  // namespace detail

/// Parses argv-style arguments (without the program name), runs the query and
/// writes the result to `out` (or --out). Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Metric entropy of ellipsoids: exact values, certified bounds and asymptotics"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_flag("--nats", o.nats, "report natural-log values instead of bits");
  };
  auto add_model = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--model", o.model,
                                "canonical:b=..,c=.. | two_term:c1=..,c2=..,alpha1=..,alpha2=.. | table:v1,v2,.. | JSON | @file");
    if (required) opt->required();
  };
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "exponent p in [1, inf]");
    sub->add_option("--q", o.q, "exponent q in [1, inf]");
  };
  auto add_eps = [&](CLI::App* sub) {
    sub->add_option("--eps", o.eps, "radius");
    sub->add_option("--eps-grid", o.eps_grid, "log-spaced radii start:stop:count");
  };

  auto* exact = app.add_subcommand("exact", "exact entropy for p = q = inf");
  add_model(exact, true);
  add_eps(exact);
  exact->add_flag("--centers", o.centers, "emit the optimal covering centers (finite tables)");
  add_common(exact);

  auto* bfin = app.add_subcommand("bound-finite", "bounds for a finite-dimensional ellipsoid");
  bfin->add_option("--axes", o.axes, "comma-separated non-increasing semi-axes")->required();
  add_pq(bfin);
  add_eps(bfin);
  bfin->add_option("--eta", o.eta, "density-bound slack eta");
  bfin->add_option("--bound", o.bound, "upper, lower, FD1, FD2 or box")
      ->check(CLI::IsMember({"upper", "lower", "FD1", "FD2", "box"}));
  add_common(bfin);

  auto* binf = app.add_subcommand("bound-infinite", "certified upper bound by block decomposition");
  add_model(binf, true);
  add_pq(binf);
  add_eps(binf);
  binf->add_option("--split", o.split, "share of eps^q given to the tail");
  add_common(binf);

  auto* mixed = app.add_subcommand("mixed-bound", "bounds for an ellipsoid of Euclidean balls");
  add_model(mixed, true);
  mixed->add_option("--dims", o.dims, "comma-separated block dimensions")->required();
  add_eps(mixed);
  mixed->add_option("--gamma", o.gamma, "lattice exponent gamma >= 1");
  mixed->add_option("--rogers-k", o.rogers_k, "ball-covering constant K (parametric)");
  mixed->add_option("--bound", o.bound, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
  add_common(mixed);

  auto* cls = app.add_subcommand("classify", "compactness regime and constants");
  add_pq(cls);
  cls->add_option("--b", o.b, "decay index b")->required();
  cls->add_flag("--tail-summable", o.tail_summable, "sum of mu_n^{1/b} is finite");
  cls->add_flag("--liminf-positive", o.liminf_positive, "liminf n mu_n^{1/b} > 0 (default for canonical)");
  add_common(cls);

  auto* asym = app.add_subcommand("asymptotic", "leading-order asymptotics");
  add_model(asym, true);
  add_pq(asym);
  add_eps(asym);
  add_common(asym);

  auto* est = app.add_subcommand("estimator", "effective-dimension entropy estimate (Hilbert case)");
  add_model(est, true);
  add_eps(est);
  add_common(est);

  auto* orc = app.add_subcommand("oracle", "grid covering/packing oracle, d <= 3");
  orc->add_option("--axes", o.axes, "comma-separated non-increasing semi-axes")->required();
  add_pq(orc);
  add_eps(orc);
  orc->add_option("--resolution", o.resolution, "grid intervals per axis (>= 8)");
  orc->add_option("--eta", o.eta, "density-bound slack eta");
  add_common(orc);

  auto* bes = app.add_subcommand("besov", "entropy band of a Besov ball");
  bes->add_option("--s", o.s, "smoothness s")->required();
  bes->add_option("--d", o.d, "domain dimension");
  bes->add_option("--p1", o.p1, "integrability p1 in [1, inf]");
  bes->add_option("--vol", o.vol, "domain volume");
  add_eps(bes);
  add_common(bes);

  auto* cst = app.add_subcommand("constants", "Gamma_{p,q}, V_{p,q,d}, S(b)");
  add_pq(cst);
  cst->add_flag("--gamma-pq", o.gamma_pq_flag, "Gamma_{p,q}");
  cst->add_flag("--volume-ratio", o.volume_ratio_flag, "V_{p,q,d}");
  cst->add_flag("--zeta-series", o.zeta_series_flag, "S(b)");
  cst->add_option("--d", o.d, "dimension for --volume-ratio");
  cst->add_option("--b", o.b, "b for --zeta-series");
  add_common(cst);

  auto* swp = app.add_subcommand("sweep", "CSV table of one query over an eps grid");
  swp->add_option("--query", o.query, "exact, bound-infinite, estimator or asymptotic")
      ->check(CLI::IsMember({"exact", "bound-infinite", "estimator", "asymptotic"}));
  add_model(swp, true);
  add_pq(swp);
  swp->add_option("--eps-grid", o.eps_grid, "log-spaced radii start:stop:count")->required();
  swp->add_option("--format", o.format, "csv (default) or json")->check(CLI::IsMember({"json", "csv"}));
  swp->add_option("--out", o.out, "write output to this file");
  swp->add_flag("--nats", o.nats, "report natural-log values instead of bits");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "sweep" && !sub->count("--format")) o.format = "csv";

  Json query = {{"subcommand", name}};
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto res = opt->results();
    query[opt->get_name().substr(opt->get_name().find_first_not_of('-'))] = res.size() == 1 ? Json(res.front()) : Json(res);
  }

  std::vector<detail::Row> rows;
  Json extra;  // subcommand-specific payload merged into the JSON output
  int status = kOk;

  auto radii = [&]() -> std::vector<double> {
    if (!o.eps_grid.empty()) return detail::eps_grid(o.eps_grid);
    return {detail::positive(o.eps, "--eps")};
  };

  auto evaluate = [&](const std::string& what, double eps) -> detail::Row {
    detail::Row row;
    row.epsilon = eps;
    const SemiAxisModel model = parse_model_spec(o.model);
    if (what == "exact") {
      const HyperrectEntropy h = exact_entropy(model, eps);
      row.value_bits = h.bits;
      row.kind = to_string(ResultKind::Exact);
      row.certificate = {{"effective_dim", h.effective_dim},
                         {"counting_formula_bits", exact_entropy_counting(model, eps).bits}};
      if (h.per_axis_counts.size() <= 1000) row.certificate["per_axis_counts"] = h.per_axis_counts;
    } else if (what == "bound-infinite") {
      InfiniteBoundOptions opt;
      opt.split = detail::positive(o.split, "--split");
      const auto r = infinite_upper_bound(model, detail::exponent(o.p), detail::exponent(o.q), eps, opt);
      row.value_bits = r.result.bits;
      row.kind = to_string(r.result.kind);
      row.certificate = detail::certificate_json(r.certificate);
    } else if (what == "estimator") {
      row.value_bits = entropy_estimator(model, eps);
      row.kind = to_string(ResultKind::Asymptotic);
      row.certificate = {{"effective_dim", counting(model, eps, 1)}};
    } else {  // asymptotic
      const HolderExponent p = detail::exponent(o.p);
      const HolderExponent q = detail::exponent(o.q);
      row.kind = to_string(ResultKind::Asymptotic);
      const bool hilbert = !p.is_infinite() && !q.is_infinite() && p.value() == 2.0 && q.value() == 2.0;
      if (const auto* c = model.as_canonical()) {
        const Band band = canonical_band(p, q, c->b, c->c, eps);
        row.certificate = {{"band_lower", band.lower},
                           {"band_upper", band.upper},
                           {"upper_order_only", band.upper_order_only},
                           {"regime", to_string(band.regime)},
                           {"b_star", band.b_star}};
        if (hilbert) {
          row.value_bits = hilbert_leading(c->b, c->c, eps);
        } else if (p.is_infinite() && q.is_infinite()) {
          row.value_bits = canonical_asymptotic(c->b, c->c, eps);
        } else {
          row.value_bits = band.lower;
          row.warnings.emplace_back("value is the lower edge of the leading-term band");
        }
        if (band.upper_order_only) row.warnings.emplace_back("upper band edge is a growth order; its constant is not established");
      } else if (const auto* t = model.as_two_term(); t != nullptr && hilbert) {
        row.value_bits = hilbert_second_order(t->alpha1, t->alpha2, t->c1, t->c2, eps);
      } else {
        throw InvalidInput("asymptotic needs a canonical model, or a two-term model with p = q = 2");
      }
    }
    return row;
  };

  try {
    if (name == "exact" || name == "bound-infinite" || name == "estimator" || name == "asymptotic") {
      for (double eps : radii()) rows.push_back(evaluate(name, eps));
      if (name == "exact" && o.centers) {
        const SemiAxisModel model = parse_model_spec(o.model);
        if (!model.length()) throw InvalidInput("--centers needs a finite table model");
        const auto centers = optimal_covering(model.as_table()->values, rows.front().epsilon);
        extra["centers"] = centers;
      }
    } else if (name == "sweep") {
      for (double eps : detail::eps_grid(o.eps_grid)) rows.push_back(evaluate(o.query, eps));
    } else if (name == "bound-finite") {
      const FiniteEllipsoid e(detail::exponent(o.p), detail::number_list(o.axes, "--axes"));
      const HolderExponent q = detail::exponent(o.q);
      const double eta = detail::positive(o.eta, "--eta");
      for (double eps : radii()) {
        detail::Row row;
        row.epsilon = eps;
        FiniteBound fb;
        if (o.bound == "lower") {
          fb = volume_lower_bound(e, q, eps);
        } else if (o.bound == "FD1" || o.bound == "FD2") {
          fb = density_upper_bound(e, q, eps, eta, o.bound == "FD1" ? BoundCase::FD1 : BoundCase::FD2);
        } else if (o.bound == "box") {
          fb = box_grid_upper_bound(e, q, eps);
        } else {
          fb = best_upper_bound(e, q, eps);
        }
        row.value_bits = fb.log2_bound;
        row.kind = fb.kind == BoundKind::Lower ? "lower" : "upper";
        row.certificate = {{"case_tag", to_string(fb.case_tag)},
                           {"kappa_used", fb.kappa_used},
                           {"eta", fb.eta},
                           {"volume_lower", volume_lower_bound(e, q, eps).log2_bound}};
        if (std::isfinite(fb.valid_radius_range.upper)) {
          row.certificate["admissible"] = {0.0, fb.valid_radius_range.upper};
        }
        rows.push_back(std::move(row));
      }
    } else if (name == "mixed-bound") {
      std::vector<std::uint64_t> dims;
      for (double v : detail::number_list(o.dims, "--dims")) {
        if (!(v >= 1.0) || v != std::floor(v)) throw InvalidInput("--dims must be positive integers");
        dims.push_back(static_cast<std::uint64_t>(v));
      }
      const MixedEllipsoidSpec spec{parse_model_spec(o.model), dims};
      for (double eps : radii()) {
        detail::Row row;
        if (o.bound == "lower") {
          const EntropyResult r = mixed_lower_bound(spec, eps);
          row = {r.epsilon, r.bits, to_string(r.kind), Json::object(), {}};
        } else {
          const auto r = mixed_upper_bound(spec, eps, detail::number(o.gamma, "--gamma"),
                                           detail::positive(o.rogers_k, "--rogers-k"));
          row = {r.result.epsilon, r.result.bits, to_string(r.result.kind), detail::certificate_json(r.certificate),
                 {"depends on the unquantified ball-covering constant K (parametric)"}};
          row.certificate["requested_epsilon"] = eps;
        }
        rows.push_back(std::move(row));
      }
    } else if (name == "classify") {
      const HolderExponent p = detail::exponent(o.p);
      const HolderExponent q = detail::exponent(o.q);
      const Rational b = parse_rational(o.b);
      const bool liminf = o.liminf_positive || !o.tail_summable;
      const Regime r = classify(p, q, b, o.tail_summable, liminf);
      extra["regime"] = detail::regime_json(r);
      if (!r.compact()) status = kNonCompact;
    } else if (name == "oracle") {
      const FiniteEllipsoid e(detail::exponent(o.p), detail::number_list(o.axes, "--axes"));
      const HolderExponent q = detail::exponent(o.q);
      for (double eps : radii()) {
        const SandwichReport rep = sandwich_report(e, q, eps, o.resolution, detail::positive(o.eta, "--eta"));
        detail::Row row;
        row.epsilon = eps;
        row.value_bits = std::log2(static_cast<double>(rep.oracle.pack_count));
        row.kind = "lower";
        Json checks = Json::array();
        for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
        row.certificate = {{"cover_count", rep.oracle.cover_count},
                           {"pack_count", rep.oracle.pack_count},
                           {"grid_resolution", rep.oracle.grid_resolution},
                           {"delta", rep.oracle.delta},
                           {"volume_lower", rep.volume_lower},
                           {"upper", rep.upper},
                           {"upper_case", rep.upper_case},
                           {"checks", checks},
                           {"all_pass", rep.all_pass()}};
        if (rep.exact) row.certificate["exact"] = *rep.exact;
        rows.push_back(std::move(row));
      }
    } else if (name == "besov") {
      BesovSpec spec;
      spec.s = detail::positive(o.s, "--s");
      spec.d = o.d;
      spec.p1 = detail::exponent(o.p1);
      spec.vol = detail::positive(o.vol, "--vol");
      extra["model"] = to_json(semi_axes_from_besov(spec));
      for (double eps : radii()) {
        const BesovBand band = besov_entropy_band(spec, eps);
        detail::Row row;
        row.epsilon = eps;
        row.value_bits = band.band.lower;
        row.kind = to_string(ResultKind::Asymptotic);
        row.certificate = {{"band_lower", band.band.lower},
                           {"band_upper", band.band.upper},
                           {"upper_order_only", band.band.upper_order_only},
                           {"b_star", band.b_star},
                           {"volume_exponent", band.volume_exponent},
                           {"validity_radius", band.validity_radius},
                           {"validity_radius_is_heuristic", true},
                           {"up_to_frame_constants", band.up_to_frame_constants}};
        row.warnings = band.warnings;
        row.warnings.emplace_back("band holds up to wavelet-frame constants");
        rows.push_back(std::move(row));
      }
    } else if (name == "constants") {
      const HolderExponent p = detail::exponent(o.p);
      const HolderExponent q = detail::exponent(o.q);
      const bool any = o.gamma_pq_flag || o.volume_ratio_flag || o.zeta_series_flag;
      if (o.gamma_pq_flag) extra["gamma_pq"] = gamma_pq(p, q);
      if (o.volume_ratio_flag) extra["volume_ratio"] = volume_ratio(p, q, o.d);
      if (o.zeta_series_flag) extra["zeta_series"] = zeta_series_constant(detail::positive(o.b, "--b"));
      if (!any) {
        const std::vector<std::string> grid = {"1", "1.5", "2", "3", "inf"};
        Json g = Json::array();
        for (const auto& a : grid) {
          for (const auto& c : grid) {
            const HolderExponent pa = detail::exponent(a);
            const HolderExponent qc = detail::exponent(c);
            g.push_back({{"p", a}, {"q", c}, {"gamma_pq", gamma_pq(pa, qc)}, {"volume_ratio_d10", volume_ratio(pa, qc, 10)}});
          }
        }
        extra["table"] = g;
        Json sb = Json::array();
        for (double bv : {0.25, 0.5, 1.0, 2.0, 4.0}) sb.push_back({{"b", bv}, {"S", zeta_series_constant(bv)}});
        extra["zeta_series"] = sb;
      }
    }
  } catch (const NonCompactRegime& e) {
    err << "error: " << e.what() << "\n";
    out << Json{{"query", query}, {"error", e.what()}, {"error_kind", "non-compact"}}.dump(2) << "\n";
    return kNonCompact;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    out << Json{{"query", query}, {"error", e.what()}, {"error_kind", "cap-exceeded"}, {"reported_size", e.reported_size()}}
               .dump(2)
        << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  const double unit = o.nats ? std::numbers::ln2 : 1.0;
  const std::string value_key = o.nats ? "value_nats" : "value_bits";
  std::ostringstream text;
  if (o.format == "csv") {
    if (name == "exact" && o.centers) {
      for (const auto& c : extra["centers"]) {
        for (std::size_t i = 0; i < c.size(); ++i) text << (i ? "," : "") << c[i].get<double>();
        text << "\n";
      }
    } else {
      text << "epsilon," << value_key << ",kind\n";
      text.precision(17);
      for (const auto& r : rows) text << r.epsilon << "," << r.value_bits * unit << "," << r.kind << "\n";
    }
  } else {
    auto row_json = [&](const detail::Row& r) {
      Json j = {{"query", query}, {value_key, r.value_bits * unit}, {"kind", r.kind}, {"epsilon", r.epsilon},
                {"warnings", r.warnings}};
      if (!r.certificate.is_null()) j["certificate"] = r.certificate;
      return j;
    };
    Json doc;
    if (rows.empty()) {
      doc = {{"query", query}, {"warnings", Json::array()}};
    } else if (rows.size() == 1) {
      doc = row_json(rows.front());
    } else {
      doc = {{"query", query}, {"rows", Json::array()}};
      for (const auto& r : rows) doc["rows"].push_back(row_json(r));
    }
    for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it) doc[it.key()] = it.value();
    text << doc.dump(2) << "\n";
  }
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return kInvalidInput;
    }
    file << text.str();
  }
  return status;
}

}  // namespace metent::cli
