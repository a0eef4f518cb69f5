#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pade/errors.hpp"

namespace pade::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;
// Relative distance under which computed roots count as one multiple root.
constexpr double kMultiplicityTol = 1e-6;
// Table cells are one class when their (P, Q) lines agree to this accuracy.
constexpr double kClassTol = 1e-8;

double parse_double(const std::string& token, const std::string& what) {
  std::istringstream in(token);
  in.imbue(std::locale::classic());
  double x = 0.0;
  std::string rest;
  if (!(in >> x) || (in >> rest) || !std::isfinite(x)) {
    throw InputError("invalid " + what + " '" + token + "'");
  }
  return x;
}

Complex parse_complex_token(const std::string& token, const std::string& what) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) return {parse_double(token, what), 0.0};
  return {parse_double(token.substr(0, comma), what),
          parse_double(token.substr(comma + 1), what)};
}

ordered_json complex_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json complex_list(const std::vector<Complex>& v) {
  ordered_json a = ordered_json::array();
  for (const Complex& z : v) a.push_back(complex_json(z));
  return a;
}

ordered_json real_list(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(x);
  return a;
}

ordered_json index_list(const std::set<int>& s) {
  ordered_json a = ordered_json::array();
  for (int k : s) a.push_back(k);
  return a;
}

ordered_json order_json(PadeOrder o) { return {{"m", o.m}, {"n", o.n}}; }

struct RootGroup {
  Complex value;
  int multiplicity;
};

// Greedy clustering of numerically split multiple roots.
std::vector<RootGroup> group_roots(const std::vector<Complex>& roots) {
  std::vector<RootGroup> groups;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    Complex sum = roots[i];
    int count = 1;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] &&
          std::abs(roots[j] - roots[i]) <= kMultiplicityTol * std::max(1.0, std::abs(roots[i]))) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    groups.push_back({sum / static_cast<double>(count), count});
  }
  return groups;
}

ordered_json grouped_roots_json(const std::vector<Complex>& roots) {
  ordered_json a = ordered_json::array();
  for (const RootGroup& g : group_roots(roots)) {
    a.push_back({{"value", complex_json(g.value)}, {"multiplicity", g.multiplicity}});
  }
  return a;
}

ordered_json doublets_json(const DoubletReport& r) {
  ordered_json a = ordered_json::array();
  for (const Doublet& d : r.doublets) {
    a.push_back({{"zero", complex_json(d.zero)}, {"pole", complex_json(d.pole)},
                 {"distance", d.distance}});
  }
  return a;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dump_value(const ordered_json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case ordered_json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ordered_json(key).dump() + ": ";
        dump_value(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case ordered_json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const ordered_json& e) {
        return e.is_structured();
      });
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) out += "\n" + pad;
        dump_value(e, out, depth + 1);
      }
      if (!flat) out += "\n" + close_pad;
      out += "]";
      return;
    }
    case ordered_json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string text_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

std::string text_list(const std::vector<Complex>& v) {
  std::string s;
  for (const Complex& z : v) s += (s.empty() ? "" : "  ") + text_complex(z);
  return s.empty() ? "(none)" : s;
}

std::string text_indices(const std::set<int>& s) {
  std::string out;
  for (int k : s) out += (out.empty() ? "" : " ") + std::to_string(k);
  return out.empty() ? "(none)" : out;
}

PadeOrder cfg_order(const RunConfig& cfg) { return {cfg.m, cfg.n}; }

// Unit vector spanning the (P, Q) coefficient line, padded to fixed lengths.
Eigen::VectorXcd class_vector(const ReducedPade& r, int p_len, int q_len) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(p_len + q_len);
  for (std::size_t k = 0; k < r.numerator.size(); ++k) v[static_cast<Eigen::Index>(k)] = r.numerator[k];
  for (std::size_t k = 0; k < r.denominator.size(); ++k) {
    v[p_len + static_cast<Eigen::Index>(k)] = r.denominator[k];
  }
  return v / v.norm();
}

bool same_line(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Complex proj = b.dot(a);  // b^H a
  return (a - proj * b).norm() <= kClassTol;
}

}  // namespace

std::vector<Complex> parse_coefficient_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<Complex> out;
  std::string token;
  while (in >> token) out.push_back(parse_complex_token(token, "coefficient"));
  if (out.empty()) throw EmptyInput("empty coefficient list");
  return out;
}

Complex parse_center(const std::string& text) { return parse_complex_token(text, "center"); }

std::optional<double> resolve_tolerance(const RunConfig& cfg) {
  std::optional<double> tol = cfg.tol;
  if (!tol) {
    if (const char* env = std::getenv("PADE_TOL"); env != nullptr && *env != '\0') {
      tol = parse_double(env, "PADE_TOL");
    }
  }
  if (tol && !(*tol > 0.0)) throw InputError("tolerance must be positive");
  return tol;
}

PowerSeries load_series(const RunConfig& cfg) {
  const bool from_file = cfg.coeffs.has_value();
  const bool from_spec = cfg.num.has_value() || cfg.den.has_value();
  if (from_file == from_spec) {
    throw InputError("give exactly one input: --num/--den or --coeffs");
  }
  std::size_t count = 0;
  if (cfg.subcommand == Subcommand::table) {
    if (cfg.m_max < 0 || cfg.n_max < 0) throw InputError("--mmax/--nmax must be non-negative");
    count = static_cast<std::size_t>(cfg.m_max + cfg.n_max + 1);
  } else {
    if (cfg.m < 0 || cfg.n < 0) throw InputError("-m/-n must be non-negative");
    count = static_cast<std::size_t>(cfg.m + cfg.n + 1);
  }

  if (from_file) {
    PowerSeries f = read_coefficients(*cfg.coeffs);
    if (cfg.center && *cfg.center != f.center()) {
      throw InputError("--center conflicts with the center header of the coefficient file");
    }
    f.require(count, "coefficient file");
    return f;
  }
  if (!cfg.num || !cfg.den) throw InputError("--num and --den must be given together");
  const RationalSpec spec(Polynomial(*cfg.num), Polynomial(*cfg.den));
  return taylor_of_rational(spec, cfg.center.value_or(Complex{}), count);
}

ordered_json approximate_report(const RunConfig& cfg) {
  const PowerSeries f = load_series(cfg);
  const std::optional<double> tol = resolve_tolerance(cfg);
  const ReducedPade r = reduced_pade(f, cfg_order(cfg), cfg.cleanup, tol);
  const ZeroPoleSet roots = zeros_and_poles(r.numerator, r.denominator);

  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["order"] = order_json(r.order);
  j["center"] = complex_json(r.center);
  j["kappa"] = r.indices.kappa();
  j["mu1"] = r.indices.mu1();
  j["mu2"] = r.indices.mu2();
  j["deficiency"] = r.deficiency;
  j["baker_exists"] = r.baker_exists;
  j["cleanup_applied"] = r.cleanup_applied;
  j["degenerate_window"] = r.degenerate_window;
  j["numerator"] = complex_list(r.numerator.coeffs());
  j["denominator"] = complex_list(r.denominator.coeffs());
  j["zeroed_p"] = index_list(r.zeroed_p);
  j["zeroed_q"] = index_list(r.zeroed_q);
  j["singular_values"] = {{"Tm", real_list(r.indices.rank_report().singular)},
                          {"Tkernel", real_list(r.kernel_rank_report.singular)}};
  j["gaps"] = {{"Tm", r.indices.rank_report().gap}, {"Tkernel", r.kernel_rank_report.gap}};
  j["tolerance_used"] = {{"Tm", r.indices.rank_report().tolerance},
                         {"Tkernel", r.kernel_rank_report.tolerance},
                         {"source", tol ? "user" : "default"}};
  j["warnings"] = r.warnings;
  j["zeros"] = complex_list(roots.zeros.roots);
  j["poles"] = complex_list(roots.poles.roots);
  return j;
}

namespace {

ordered_json summary_json(const ApproximantSummary& s) {
  ordered_json j;
  j["numerator"] = complex_list(s.numerator.coeffs());
  j["denominator"] = complex_list(s.denominator.coeffs());
  j["effective_degrees"] = {{"numerator", s.numerator.effective_degree()},
                            {"denominator", s.denominator.effective_degree()}};
  j["zeros"] = complex_list(s.roots.zeros.roots);
  j["poles"] = complex_list(s.roots.poles.roots);
  j["doublet_count"] = s.doublets.doublets.size();
  j["doublets"] = doublets_json(s.doublets);
  return j;
}

}  // namespace

ordered_json compare_report(const RunConfig& cfg) {
  const PowerSeries f = load_series(cfg);
  const Comparison c = compare(f, cfg_order(cfg), resolve_tolerance(cfg), cfg.pairing_tol,
                               cfg.cleanup);
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["order"] = order_json(cfg_order(cfg));
  j["center"] = complex_json(f.center());
  j["pairing_tol"] = cfg.pairing_tol;
  j["classical"] = summary_json(c.classical);
  ordered_json red = summary_json(c.reduced_summary);
  red["kappa"] = c.reduced.indices.kappa();
  red["deficiency"] = c.reduced.deficiency;
  red["gaps"] = {{"Tm", c.reduced.indices.rank_report().gap},
                 {"Tkernel", c.reduced.kernel_rank_report.gap}};
  red["warnings"] = c.reduced.warnings;
  j["reduced"] = std::move(red);
  return j;
}

ordered_json roots_report(const RunConfig& cfg) {
  const PowerSeries f = load_series(cfg);
  const ReducedPade r = reduced_pade(f, cfg_order(cfg), cfg.cleanup, resolve_tolerance(cfg));
  const ZeroPoleSet roots = zeros_and_poles(r.numerator, r.denominator);
  auto trim_json = [](const RootSet& s) {
    return ordered_json{{"effective_degree", s.effective_degree},
                        {"trimmed_leading", s.trimmed_leading}};
  };
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["order"] = order_json(r.order);
  j["center"] = complex_json(r.center);
  j["deficiency"] = r.deficiency;
  j["common_shift"] = roots.common_shift;
  j["zeros"] = grouped_roots_json(roots.zeros.roots);
  j["poles"] = grouped_roots_json(roots.poles.roots);
  j["trimming"] = {{"numerator", trim_json(roots.zeros)},
                   {"denominator", trim_json(roots.poles)}};
  j["warnings"] = r.warnings;
  return j;
}

ordered_json table_report(const RunConfig& cfg) {
  const PowerSeries f = load_series(cfg);
  const std::optional<double> tol = resolve_tolerance(cfg);
  const int p_len = cfg.m_max + 1;
  const int q_len = cfg.n_max + 1;

  std::vector<Eigen::VectorXcd> representatives;
  ordered_json cells = ordered_json::array();
  for (int m = 0; m <= cfg.m_max; ++m) {
    for (int n = 0; n <= cfg.n_max; ++n) {
      const ReducedPade r = reduced_pade(f, {m, n}, cfg.cleanup, tol);
      const Eigen::VectorXcd v = class_vector(r, p_len, q_len);
      std::size_t cls = 0;
      while (cls < representatives.size() && !same_line(v, representatives[cls])) ++cls;
      if (cls == representatives.size()) representatives.push_back(v);
      cells.push_back({{"m", m}, {"n", n}, {"class", cls}, {"kappa", r.indices.kappa()},
                       {"deficiency", r.deficiency}});
    }
  }
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["mmax"] = cfg.m_max;
  j["nmax"] = cfg.n_max;
  j["center"] = complex_json(f.center());
  j["class_count"] = representatives.size();
  j["cells"] = std::move(cells);
  return j;
}

std::string dump_json(const ordered_json& j) {
  std::string out;
  dump_value(j, out, 0);
  out += "\n";
  return out;
}

namespace {

void write_approximate(const ordered_json& j, OutputFormat fmt, std::ostream& out) {
  auto list = [&](const char* key) {
    std::vector<Complex> v;
    for (const auto& e : j[key]) v.emplace_back(e[0].get<double>(), e[1].get<double>());
    return v;
  };
  if (fmt == OutputFormat::csv) {
    out << "field,index,re,im\n";
    for (const char* key : {"numerator", "denominator", "zeros", "poles"}) {
      const auto v = list(key);
      for (std::size_t k = 0; k < v.size(); ++k) {
        out << key << ',' << k << ',' << format_number(v[k].real()) << ','
            << format_number(v[k].imag()) << '\n';
      }
    }
    return;
  }
  std::set<int> zp(j["zeroed_p"].begin(), j["zeroed_p"].end());
  std::set<int> zq(j["zeroed_q"].begin(), j["zeroed_q"].end());
  out << "order (m,n) = (" << j["order"]["m"] << "," << j["order"]["n"] << ")\n"
      << "kappa = " << j["kappa"] << ", mu1 = " << j["mu1"] << ", mu2 = " << j["mu2"]
      << ", deficiency = " << j["deficiency"]
      << ", baker_exists = " << (j["baker_exists"].get<bool>() ? "yes" : "no") << "\n"
      << "numerator:   " << text_list(list("numerator")) << "\n"
      << "denominator: " << text_list(list("denominator")) << "\n"
      << "zeroed_p: " << text_indices(zp) << "\n"
      << "zeroed_q: " << text_indices(zq) << "\n"
      << "zeros: " << text_list(list("zeros")) << "\n"
      << "poles: " << text_list(list("poles")) << "\n";
  for (const auto& w : j["warnings"]) out << "warning: " << w.get<std::string>() << "\n";
}

void write_compare(const ordered_json& j, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::csv) {
    out << "approximant,deg_p,deg_q,doublets\n";
    for (const char* key : {"classical", "reduced"}) {
      const auto& s = j[key];
      out << key << ',' << s["effective_degrees"]["numerator"] << ','
          << s["effective_degrees"]["denominator"] << ',' << s["doublet_count"] << '\n';
    }
    return;
  }
  for (const char* key : {"classical", "reduced"}) {
    const auto& s = j[key];
    out << key << ": deg P = " << s["effective_degrees"]["numerator"]
        << ", deg Q = " << s["effective_degrees"]["denominator"]
        << ", doublets = " << s["doublet_count"] << "\n";
    for (const auto& d : s["doublets"]) {
      out << "  zero " << text_complex({d["zero"][0].get<double>(), d["zero"][1].get<double>()})
          << "  pole " << text_complex({d["pole"][0].get<double>(), d["pole"][1].get<double>()})
          << "  distance " << d["distance"].get<double>() << "\n";
    }
  }
}

void write_roots(const ordered_json& j, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::csv) {
    out << "kind,re,im,multiplicity\n";
    for (const char* key : {"zeros", "poles"}) {
      for (const auto& r : j[key]) {
        out << key << ',' << format_number(r["value"][0].get<double>()) << ','
            << format_number(r["value"][1].get<double>()) << ',' << r["multiplicity"] << '\n';
      }
    }
    return;
  }
  for (const char* key : {"zeros", "poles"}) {
    out << key << ":\n";
    for (const auto& r : j[key]) {
      out << "  " << text_complex({r["value"][0].get<double>(), r["value"][1].get<double>()})
          << "  (multiplicity " << r["multiplicity"] << ")\n";
    }
  }
  out << "trimmed leading coefficients: numerator "
      << j["trimming"]["numerator"]["trimmed_leading"] << ", denominator "
      << j["trimming"]["denominator"]["trimmed_leading"] << "\n";
}

void write_table(const ordered_json& j, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::csv) {
    out << "m,n,class,kappa,deficiency\n";
    for (const auto& c : j["cells"]) {
      out << c["m"] << ',' << c["n"] << ',' << c["class"] << ',' << c["kappa"] << ','
          << c["deficiency"] << '\n';
    }
    return;
  }
  // Rows are n, columns are m, entries are class ids.
  const int m_max = j["mmax"].get<int>();
  const int n_max = j["nmax"].get<int>();
  out << "n\\m";
  for (int m = 0; m <= m_max; ++m) out << '\t' << m;
  out << '\n';
  for (int n = 0; n <= n_max; ++n) {
    out << n;
    for (int m = 0; m <= m_max; ++m) {
      out << '\t' << j["cells"][static_cast<std::size_t>(m * (n_max + 1) + n)]["class"];
    }
    out << '\n';
  }
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    ordered_json report;
    switch (cfg.subcommand) {
      case Subcommand::approximate: report = approximate_report(cfg); break;
      case Subcommand::compare: report = compare_report(cfg); break;
      case Subcommand::roots: report = roots_report(cfg); break;
      case Subcommand::table: report = table_report(cfg); break;
    }
    if (cfg.format == OutputFormat::json) {
      out << dump_json(report);
    } else {
      switch (cfg.subcommand) {
        case Subcommand::approximate: write_approximate(report, cfg.format, out); break;
        case Subcommand::compare: write_compare(report, cfg.format, out); break;
        case Subcommand::roots: write_roots(report, cfg.format, out); break;
        case Subcommand::table: write_table(report, cfg.format, out); break;
      }
    }
    for (const auto& w : report.value("warnings", ordered_json::array())) {
      err << "warning: " << w.get<std::string>() << "\n";
    }
    return kExitOk;
  } catch (const KernelDimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitKernel;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced Pade approximants via Toeplitz kernel analysis", "pade"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string num_text;
  std::string den_text;
  std::string coeffs_path;
  std::string center_text;
  std::string format_text = "json";

  auto add_common = [&](CLI::App* sub, bool table) {
    auto* num = sub->add_option("--num", num_text, "numerator coefficients, lowest order first");
    auto* den = sub->add_option("--den", den_text, "denominator coefficients, lowest order first");
    auto* file = sub->add_option("--coeffs", coeffs_path, "Taylor coefficient file");
    num->needs(den);
    den->needs(num);
    file->excludes(num)->excludes(den);
    if (table) {
      sub->add_option("--mmax", cfg.m_max, "largest numerator degree")->required();
      sub->add_option("--nmax", cfg.n_max, "largest denominator degree")->required();
    } else {
      sub->add_option("-m", cfg.m, "numerator degree")->required();
      sub->add_option("-n", cfg.n, "denominator degree")->required();
    }
    sub->add_option("--center", center_text, "expansion point re[,im]");
    sub->add_option("--tol", cfg.tol, "absolute rank tolerance for every rank decision");
    sub->add_flag("--no-cleanup", "keep vanishing coefficients as computed");
    sub->add_option("--pairing-tol", cfg.pairing_tol, "relative zero/pole pairing distance");
    sub->add_option("--format", format_text, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };

  struct Entry {
    const char* name;
    const char* help;
    Subcommand kind;
  };
  const Entry entries[] = {
      {"approximate", "reduced Pade approximant", Subcommand::approximate},
      {"compare", "classical baseline versus reduced approximant", Subcommand::compare},
      {"roots", "zeros and poles of the reduced approximant", Subcommand::roots},
      {"table", "equivalence classes over a grid of orders", Subcommand::table},
  };
  for (const Entry& e : entries) add_common(app.add_subcommand(e.name, e.help), e.kind == Subcommand::table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  for (const Entry& e : entries) {
    if (sub->get_name() == e.name) cfg.subcommand = e.kind;
  }
  cfg.cleanup = sub->count("--no-cleanup") == 0;
  cfg.format = format_text == "csv"    ? OutputFormat::csv
               : format_text == "text" ? OutputFormat::text
                                       : OutputFormat::json;
  try {
    if (sub->count("--num") > 0) {
      cfg.num = parse_coefficient_list(num_text);
      cfg.den = parse_coefficient_list(den_text);
    }
    if (sub->count("--coeffs") > 0) cfg.coeffs = coeffs_path;
    if (sub->count("--center") > 0) cfg.center = parse_center(center_text);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (!(cfg.pairing_tol > 0.0)) {
    err << "error: --pairing-tol must be positive\n";
    return kExitInput;
  }
  return run(cfg, out, err);
}

}  // namespace pade::cli
