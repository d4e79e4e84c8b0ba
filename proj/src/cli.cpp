#include "pfk3/cli.hpp"

#include "pfk3/classify.hpp"
#include "pfk3/fixed_data.hpp"
#include "pfk3/lattice.hpp"
#include "pfk3/lattice_io.hpp"
#include "pfk3/obstruction.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

namespace pfk3::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kTypeNames{"A0", "A1", "A2", "B"};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- parsing

void add_format(CLI::App* sub, bool allow_tsv) {
  std::vector<std::string> formats{"text", "json"};
  if (allow_tsv) formats.push_back("tsv");
  sub->add_option("--format", "output format")->check(CLI::IsMember(formats));
}

std::unique_ptr<CLI::App> build_app() {
  auto app = std::make_unique<CLI::App>(
      "Pseudofree Z/3 actions on the K3 surface: classification, lattice models and "
      "smoothability obstructions",
      "pfk3");
  app->require_subcommand(1, 1);

  CLI::App* classify = app->add_subcommand("classify", "list the admissible action types");
  add_format(classify, true);

  CLI::App* verify = app->add_subcommand("verify", "build and check the lattice model of a type");
  auto* type = verify->add_option("--type", "action type")->check(CLI::IsMember(kTypeNames));
  auto* all = verify->add_flag("--all", "verify every type");
  auto* file = verify->add_option("--lattice", "lattice JSON file to verify instead of a model");
  type->excludes(all)->excludes(file);
  all->excludes(file);
  verify->add_option("--mplus", "m+ for checking a lattice file")->check(CLI::NonNegativeNumber);
  verify->add_option("--mminus", "m- for checking a lattice file")->check(CLI::NonNegativeNumber);
  verify->add_flag("--emit-lattice", "print the lattice as JSON instead of the report");
  add_format(verify, false);

  CLI::App* dirac = app->add_subcommand("dirac", "equivariant Dirac index coefficients");
  dirac->add_option("--mplus", "number of (1,2) fixed points")->check(CLI::NonNegativeNumber);
  dirac->add_option("--mminus", "number of (1,1) fixed points")->check(CLI::NonNegativeNumber);
  dirac->add_option("--points", "fixed point list, e.g. \"(1,2)x3,(1,1)x6\"");
  dirac->add_option("--ind1", "non-equivariant index (2 for K3)");
  add_format(dirac, false);

  CLI::App* smooth = app->add_subcommand("smooth", "Seiberg-Witten smoothability verdict");
  smooth->add_option("--type", "action type")->required()->check(CLI::IsMember(kTypeNames));
  smooth->add_option("--surface", "smooth structure")->check(CLI::IsMember({"standard", "e2pq"}));
  smooth->add_option("--p", "first multiple fibre multiplicity")->check(CLI::PositiveNumber);
  smooth->add_option("--q", "second multiple fibre multiplicity")->check(CLI::PositiveNumber);
  add_format(smooth, false);

  CLI::App* gsig = app->add_subcommand("gsig", "G-signature and spin defects of fixed point data");
  gsig->add_option("--points", "fixed point list, e.g. \"(1,2)x3,(1,1)x6\"");
  gsig->add_option("--mplus", "number of (1,2) fixed points")->check(CLI::NonNegativeNumber);
  gsig->add_option("--mminus", "number of (1,1) fixed points")->check(CLI::NonNegativeNumber);
  add_format(gsig, false);
  return app;
}

Subcommand subcommand_from_name(const std::string& name) {
  if (name == "classify") return Subcommand::classify;
  if (name == "verify") return Subcommand::verify;
  if (name == "dirac") return Subcommand::dirac;
  if (name == "smooth") return Subcommand::smooth;
  return Subcommand::gsig;
}

// ---------------------------------------------------------------- option access

class Options {
 public:
  explicit Options(const CommandRequest& request) : options_(request.options) {}

  bool has(const std::string& key) const { return options_.count(key) > 0; }

  std::string get(const std::string& key, const std::string& fallback = {}) const {
    const auto it = options_.find(key);
    return it == options_.end() ? fallback : it->second;
  }

  long long integer(const std::string& key) const {
    const std::string text = get(key);
    try {
      std::size_t used = 0;
      const long long v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    } catch (const std::exception&) {
      throw Error("--" + key + " expects an integer, got '" + text + "'");
    }
  }

  std::optional<long long> maybe_integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

 private:
  const std::map<std::string, std::string>& options_;
};

// Fixed data from --points or --mplus/--mminus.
FixedPointData fixed_data_from(const Options& opts) {
  const bool counts = opts.has("mplus") || opts.has("mminus");
  if (opts.has("points") && counts) throw Error("use either --points or --mplus/--mminus, not both");
  if (opts.has("points")) return parse_fixed_points(opts.get("points"));
  if (!opts.has("mplus") || !opts.has("mminus"))
    throw Error("fixed point data needs --points or both --mplus and --mminus");
  const long long mp = opts.integer("mplus");
  const long long mm = opts.integer("mminus");
  if (mp < 0 || mm < 0) throw Error("fixed point counts must be nonnegative");
  return {mp, mm};
}

// ---------------------------------------------------------------- classify

std::string classify_text(const std::vector<ActionType>& rows) {
  const std::vector<std::string> header{"Type", "#X^G", "m+", "m-", "b2^G", "b+^G", "b-^G", "Sign(X/G)"};
  std::vector<std::vector<std::string>> cells;
  for (const ActionType& r : rows)
    cells.push_back({r.name, std::to_string(r.fixed_count), std::to_string(r.m_plus),
                     std::to_string(r.m_minus), std::to_string(r.b2_G), std::to_string(r.bplus_G),
                     std::to_string(r.bminus_G), std::to_string(r.sign_quotient)});
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      else
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out.str();
}

Json action_type_json(const ActionType& r) {
  Json j;
  j["name"] = r.name;
  j["fixed_count"] = r.fixed_count;
  j["m_plus"] = r.m_plus;
  j["m_minus"] = r.m_minus;
  j["b2_G"] = r.b2_G;
  j["bplus_G"] = r.bplus_G;
  j["bminus_G"] = r.bminus_G;
  j["sign_quotient"] = r.sign_quotient;
  j["euler_quotient"] = r.euler_quotient;
  return j;
}

CommandResult run_classify(const CommandRequest& request) {
  const std::vector<ActionType> rows = enumerate_action_types();
  CommandResult result;
  switch (request.format) {
    case Format::text:
      result.output = classify_text(rows);
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const ActionType& r : rows) arr.push_back(action_type_json(r));
      result.output = dump(arr);
      break;
    }
    case Format::tsv: {
      std::ostringstream out;
      out << "name\tfixed_count\tm_plus\tm_minus\tb2_G\tbplus_G\tbminus_G\tsign_quotient\teuler_quotient\n";
      for (const ActionType& r : rows)
        out << r.name << '\t' << r.fixed_count << '\t' << r.m_plus << '\t' << r.m_minus << '\t'
            << r.b2_G << '\t' << r.bplus_G << '\t' << r.bminus_G << '\t' << r.sign_quotient << '\t'
            << r.euler_quotient << '\n';
      result.output = out.str();
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------- verify

struct VerifyReport {
  std::string type;
  GLattice lattice;
  LatticeVerification verification;
  std::optional<Inertia> sign;
  std::optional<Inertia> fixed_sign;
  std::optional<ModuleDecomposition> decomposition;
  std::optional<FixedPointData> data;
  std::optional<long long> g_sign_lattice;
  std::optional<bool> rep;
  std::optional<bool> gsf;
  std::optional<bool> lefschetz;

  bool passed() const {
    return verification.passed() && rep.value_or(true) && gsf.value_or(true) &&
           lefschetz.value_or(true);
  }
};

VerifyReport build_report(std::string type, GLattice lattice, std::optional<FixedPointData> data) {
  VerifyReport r{std::move(type), std::move(lattice), {}, {}, {}, {}, data, {}, {}, {}, {}};
  r.verification = verify_lattice(r.lattice);
  if (!r.verification.passed()) return r;
  r.sign = signature(r.lattice);
  r.fixed_sign = fixed_signature(r.lattice);
  r.decomposition = module_decomposition(r.lattice);
  r.g_sign_lattice = g_signature_of_lattice(r.lattice);
  if (data) {
    if (data->fixed_count() >= 2) r.rep = check_rep(r.lattice, data->fixed_count());
    r.gsf = check_gsf(r.lattice, *data);
    if (r.lattice.rank() == kK3.b2) r.lefschetz = check_lefschetz(r.lattice, data->fixed_count());
  }
  return r;
}

VerifyReport model_report(const std::string& name) {
  const ActionType type = action_type(name);
  return build_report(name, assemble_type_lattice(type), type.data());
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json inertia_json(const std::optional<Inertia>& s) {
  if (!s) return nullptr;
  return Json::array({s->positive, s->negative});
}

Json report_json(const VerifyReport& r) {
  Json j;
  j["type"] = r.type;
  j["rank"] = r.lattice.rank();
  j["det"] = to_int64(r.verification.determinant);
  j["even"] = r.verification.check("even");
  j["isometry"] = r.verification.check("isometry");
  j["order3"] = r.verification.check("order3");
  j["signature"] = inertia_json(r.sign);
  j["fixed_signature"] = inertia_json(r.fixed_sign);
  if (r.decomposition) {
    Json d;
    d["a"] = r.decomposition->a;
    d["b"] = r.decomposition->b;
    d["c"] = r.decomposition->c;
    j["decomposition"] = d;
  } else {
    j["decomposition"] = nullptr;
  }
  j["rep"] = optional_bool(r.rep);
  j["gsf"] = optional_bool(r.gsf);
  j["lefschetz"] = optional_bool(r.lefschetz);
  return j;
}

std::string mark(bool ok) { return ok ? "[pass] " : "[fail] "; }

std::string inertia_text(const Inertia& s) {
  return "(" + std::to_string(s.positive) + ", " + std::to_string(s.negative) + ")";
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "type: " << r.type << "\n";
  out << "lattice: " << r.lattice.label << "\n";
  out << "rank: " << r.lattice.rank() << "\n";
  for (const CheckResult& c : r.verification.checks)
    out << mark(c.passed) << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  if (r.sign) out << "signature: " << inertia_text(*r.sign) << "\n";
  if (r.fixed_sign) out << "fixed signature: " << inertia_text(*r.fixed_sign) << "\n";
  if (r.decomposition)
    out << "decomposition: Z^" << r.decomposition->a << " + Z[zeta]^" << r.decomposition->b
        << " + Z[G]^" << r.decomposition->c << "\n";
  if (r.data) {
    out << "fixed points: m+ = " << r.data->m_plus << ", m- = " << r.data->m_minus << "\n";
    if (r.rep)
      out << mark(*r.rep) << "REP: trivial rank " << r.decomposition->a << ", #X^G - 2 = "
          << r.data->fixed_count() - 2 << ", Z[zeta] summands " << r.decomposition->b << "\n";
    if (r.gsf)
      out << mark(*r.gsf) << "GSF: Sign(g) = " << *r.g_sign_lattice << " on the lattice, "
          << to_string(g_signature_sum(*r.data, 1)) << " from fixed points (g^2: "
          << to_string(g_signature_sum(*r.data, 2)) << ")\n";
    if (r.lefschetz)
      out << mark(*r.lefschetz) << "Lefschetz: 2 + tr(g) = " << 2 + to_int64(r.lattice.action.trace())
          << ", #X^G = " << r.data->fixed_count() << "\n";
  }
  if (r.verification.passed()) out << "note: TOR not checked (redundant for Z/3)\n";
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

CommandResult run_verify(const CommandRequest& request) {
  const Options opts(request);
  CommandResult result;

  std::vector<VerifyReport> reports;
  if (opts.has("all")) {
    std::vector<std::future<VerifyReport>> jobs;
    for (const std::string& name : kTypeNames)
      jobs.push_back(std::async(std::launch::async, [name] { return model_report(name); }));
    for (auto& job : jobs) reports.push_back(job.get());
  } else if (opts.has("type")) {
    if (opts.has("mplus") || opts.has("mminus"))
      throw Error("--mplus/--mminus apply only to --lattice; model types carry their own data");
    reports.push_back(model_report(opts.get("type")));
  } else if (opts.has("lattice")) {
    std::optional<FixedPointData> data;
    if (opts.has("mplus") || opts.has("mminus")) data = fixed_data_from(opts);
    GLattice lattice = read_lattice_file(opts.get("lattice"));
    reports.push_back(build_report(lattice.label, std::move(lattice), data));
  } else {
    throw Error("verify needs one of --type, --all or --lattice");
  }

  if (opts.has("emit-lattice")) {
    if (reports.size() != 1) throw Error("--emit-lattice needs a single lattice");
    result.output = dump(lattice_to_json(reports.front().lattice));
    return result;
  }

  if (request.format == Format::json) {
    if (reports.size() == 1) {
      result.output = dump(report_json(reports.front()));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      result.output = dump(arr);
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i)
      result.output += (i ? "\n" : "") + report_text(reports[i]);
  }

  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (!ok) {
    result.exit_code = kExitCheckFailed;
    result.diagnostic = "verification failed";
  }
  return result;
}

// ---------------------------------------------------------------- dirac

CommandResult run_dirac(const CommandRequest& request) {
  const Options opts(request);
  const FixedPointData raw = fixed_data_from(opts);
  const long long ind1 = opts.maybe_integer("ind1").value_or(kK3.dirac_index);
  const FixedPointData data = k3_fixed_data(raw.m_plus, raw.m_minus);
  const DiracIndex k = dirac_coefficients(data, ind1);

  CommandResult result;
  if (request.format == Format::json) {
    Json j;
    j["m_plus"] = data.m_plus;
    j["m_minus"] = data.m_minus;
    j["ind1"] = ind1;
    j["k"] = Json::array({k.k0, k.k1, k.k2});
    result.output = dump(j);
  } else {
    result.output = "k = " + to_string(k) + "\n";
  }
  return result;
}

// ---------------------------------------------------------------- smooth

SurfaceModel surface_from(const Options& opts) {
  const std::string kind = opts.get("surface", "standard");
  if (kind == "standard") {
    if (opts.has("p") || opts.has("q")) throw Error("--p/--q apply only to --surface e2pq");
    return SurfaceModel::standard_k3();
  }
  if (!opts.has("p") || !opts.has("q")) throw Error("--surface e2pq needs --p and --q");
  return SurfaceModel::e2pq(opts.integer("p"), opts.integer("q"));
}

CommandResult run_smooth(const CommandRequest& request) {
  const Options opts(request);
  const ActionType type = action_type(opts.get("type"));
  const SurfaceModel surface = surface_from(opts);
  const ObstructionVerdict v = verdict(type, surface);

  CommandResult result;
  if (request.format == Format::json) {
    Json j;
    j["type"] = type.name;
    j["surface"] = surface.name();
    j["k"] = Json::array({v.k.k0, v.k.k1, v.k.k2});
    j["trivial_on_Hplus"] = v.hypotheses.trivial_on_Hplus;
    j["all_small"] = v.hypotheses.all_small;
    j["sw_fact"] = v.sw_fact;
    j["status"] = std::string(to_string(v.status));
    j["reasons"] = v.reasons;
    result.output = dump(j);
  } else {
    std::ostringstream out;
    out << "type: " << type.name << "\n";
    out << "surface: " << surface.name() << "\n";
    out << "k = " << to_string(v.k) << "\n";
    for (const std::string& reason : v.reasons) out << reason << "\n";
    out << "status: " << to_string(v.status) << "\n";
    result.output = out.str();
  }
  return result;
}

// ---------------------------------------------------------------- gsig

CommandResult run_gsig(const CommandRequest& request) {
  const Options opts(request);
  const FixedPointData data = fixed_data_from(opts);
  const CyclotomicNumber sign_g = g_signature_sum(data, 1);
  const CyclotomicNumber sign_g2 = g_signature_sum(data, 2);
  const CyclotomicNumber ind_g = spin_index_sum(data, 1);
  const CyclotomicNumber ind_g2 = spin_index_sum(data, 2);

  CommandResult result;
  if (request.format == Format::json) {
    Json j;
    j["m_plus"] = data.m_plus;
    j["m_minus"] = data.m_minus;
    j["defect_plus"] = to_string(signature_defect(FixedPointType::plus));
    j["defect_minus"] = to_string(signature_defect(FixedPointType::minus));
    j["sign_g"] = to_string(sign_g);
    j["sign_g2"] = to_string(sign_g2);
    j["ind_g"] = to_string(ind_g);
    j["ind_g2"] = to_string(ind_g2);
    result.output = dump(j);
  } else {
    std::ostringstream out;
    out << "fixed points: m+ = " << data.m_plus << ", m- = " << data.m_minus << "\n";
    out << "defect(+) = " << signature_defect(FixedPointType::plus) << "\n";
    out << "defect(-) = " << signature_defect(FixedPointType::minus) << "\n";
    out << "Sign(g) = " << sign_g << "\n";
    out << "Sign(g^2) = " << sign_g2 << "\n";
    out << "ind_g D = " << ind_g << "\n";
    out << "ind_g^2 D = " << ind_g2 << "\n";
    result.output = out.str();
  }
  return result;
}

}  // namespace

ParseOutcome parse_request(const std::vector<std::string>& args) {
  ParseOutcome outcome;
  auto app = build_app();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app->parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app->exit(e, out, err);
    outcome.early.exit_code = code == 0 ? kExitOk : kExitBadInput;
    outcome.early.output = out.str();
    std::string message = err.str();
    if (const auto nl = message.find('\n'); nl != std::string::npos) message.resize(nl);
    outcome.early.diagnostic = message;
    return outcome;
  }

  CLI::App* sub = app->get_subcommands().front();
  outcome.request.subcommand = subcommand_from_name(sub->get_name());
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    if (key == "format") {
      const std::string f = opt->as<std::string>();
      outcome.request.format = f == "json" ? Format::json : f == "tsv" ? Format::tsv : Format::text;
      continue;
    }
    outcome.request.options[key] = opt->get_expected_min() == 0 ? "true" : opt->as<std::string>();
  }
  outcome.ok = true;
  return outcome;
}

CommandResult run(const CommandRequest& request) {
  try {
    switch (request.subcommand) {
      case Subcommand::classify:
        return run_classify(request);
      case Subcommand::verify:
        return run_verify(request);
      case Subcommand::dirac:
        return run_dirac(request);
      case Subcommand::smooth:
        return run_smooth(request);
      case Subcommand::gsig:
        return run_gsig(request);
    }
  } catch (const Error& e) {
    return {kExitBadInput, "", e.what()};
  }
  return {kExitBadInput, "", "unknown subcommand"};
}

CommandResult run_command_line(const std::vector<std::string>& args) {
  ParseOutcome parsed = parse_request(args);
  if (!parsed.ok) return parsed.early;
  return run(parsed.request);
}

}  // namespace pfk3::cli
