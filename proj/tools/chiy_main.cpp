// Command-line front end: exact chi_y genera, Hirzebruch classes,
// coefficient reconstruction from sampled specializations, the derived
// (Taylor) calculus, the built-in catalog, and the self-verification suite.
//
// Output is a single JSON document per input (default) or aligned text with
// --format text. All rationals are printed exactly, in lowest terms.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chiy/chiy.hpp"

namespace {

using chiy::Polynomial;
using chiy::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitParse = 2;
constexpr int kExitModel = 3;
constexpr int kExitVerify = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw chiy::ParseError("cannot read descriptor file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json poly_to_json(const Polynomial& p, int pad_to = -1) {
  json out = json::array();
  const int length = std::max(pad_to, p.degree() + 1);
  for (const Rational& c : p.padded_coeffs(length)) out.push_back(c.str());
  return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

// Class terms as {partition string: coefficient}. Coefficients are single
// strings when the whole class is y-free and coefficient lists otherwise.
json class_to_json(const chiy::GradedClass& cls) {
  bool y_free = true;
  for (const auto& [key, coeff] : cls.terms()) y_free = y_free && coeff.is_constant();
  json out = json::object();
  for (const auto& [key, coeff] : cls.terms()) {
    if (y_free)
      out[chiy::partition_str(key)] = coeff.coeff(0).str();
    else
      out[chiy::partition_str(key)] = poly_to_json(coeff);
  }
  return out;
}

std::string poly_to_text(const Polynomial& p) { return p.str(); }

void emit(const json& doc, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << doc.dump() << "\n";
    return;
  }
  // Minimal aligned text rendering of the document's top-level fields.
  for (const auto& [key, value] : doc.items()) {
    os << key << ": ";
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
}

struct BundleSpec {
  int rank = 0;
  std::vector<Rational> chern;  // chern[i] multiplies h^(i+1)
};

// "rank=1,c1=3,c2=-5/2"
BundleSpec parse_bundle_spec(const std::string& text) {
  BundleSpec spec;
  bool saw_rank = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw chiy::SchemaError("bundle spec entries must look like key=value: '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "rank") {
      const Rational r = Rational::from_string(value);
      if (!r.is_integer() || r.sign() < 0) throw chiy::SchemaError("bundle rank must be a non-negative integer");
      spec.rank = static_cast<int>(r.numerator().convert_to<long long>());
      saw_rank = true;
    } else if (key.size() > 1 && key[0] == 'c') {
      int index = 0;
      try {
        index = std::stoi(key.substr(1));
      } catch (...) {
        throw chiy::SchemaError("unknown bundle field '" + key + "'");
      }
      if (index < 1) throw chiy::SchemaError("bundle Chern indices start at c1");
      if (static_cast<int>(spec.chern.size()) < index) spec.chern.resize(static_cast<std::size_t>(index));
      spec.chern[static_cast<std::size_t>(index) - 1] = Rational::from_string(value);
    } else {
      throw chiy::SchemaError("unknown bundle field '" + key + "'");
    }
  }
  if (!saw_rank) throw chiy::SchemaError("bundle spec needs rank=<r>");
  return spec;
}

// node=value tokens, split on spaces and commas inside each argument.
std::vector<std::pair<Rational, Rational>> parse_samples(const std::vector<std::string>& args) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const std::string& arg : args) {
    std::string token;
    std::stringstream ss(arg);
    while (ss >> token) {
      std::stringstream inner(token);
      std::string piece;
      while (std::getline(inner, piece, ',')) {
        if (piece.empty()) continue;
        const auto eq = piece.find('=');
        if (eq == std::string::npos)
          throw chiy::SchemaError("samples must look like node=value: '" + piece + "'");
        out.emplace_back(Rational::from_string(piece.substr(0, eq)),
                         Rational::from_string(piece.substr(eq + 1)));
      }
    }
  }
  return out;
}

json chi_y_document(const std::string& path, const std::string& at, const std::string& bundle) {
  const chiy::VarietyDescriptor d = chiy::parse_descriptor(read_file(path));
  json doc;
  doc["command"] = "chi-y";
  doc["descriptor"] = chiy::descriptor_to_json(d);
  doc["dim"] = d.dim();

  Polynomial genus;
  if (bundle.empty()) {
    genus = chiy::chi_y(d);
    doc["route"] = chiy::chi_y_route(d);
  } else {
    const BundleSpec spec = parse_bundle_spec(bundle);
    genus = chiy::chi_y_with_bundle(d, spec.rank, spec.chern);
    doc["route"] = "gHRR";
    doc["bundle"] = {{"rank", spec.rank}, {"chern", rationals_to_json(spec.chern)}};
  }
  doc["chi_y"] = poly_to_json(genus, d.dim() + 1);
  doc["polynomial"] = genus.str();
  if (!at.empty()) {
    const Rational y0 = Rational::from_string(at);
    doc["at"] = y0.str();
    doc["value"] = genus.evaluate(y0).str();
  }
  return doc;
}

int cmd_chi_y(const std::vector<std::string>& paths, const std::string& at,
              const std::string& bundle, const std::string& format) {
  // Inputs are independent pure computations; fan out and emit in order.
  std::vector<std::future<json>> futures;
  futures.reserve(paths.size());
  for (const std::string& path : paths)
    futures.push_back(std::async(std::launch::async, chi_y_document, path, at, bundle));
  for (auto& f : futures) emit(f.get(), format, std::cout);
  return kExitOk;
}

int cmd_class(const std::string& path, const std::string& specialize_arg, int component,
              bool has_component, const std::string& format) {
  const chiy::VarietyDescriptor d = chiy::parse_descriptor(read_file(path));
  const chiy::ChernModel model = chiy::chern_data(d);
  chiy::GradedClass cls = chiy::t_y_class(model.tangent_total, model.dim);

  json doc;
  doc["command"] = "class";
  doc["descriptor"] = chiy::descriptor_to_json(d);
  doc["dim"] = model.dim;

  if (!specialize_arg.empty()) {
    Rational y0;
    if (specialize_arg == "chern")
      y0 = -1;
    else if (specialize_arg == "todd")
      y0 = 0;
    else if (specialize_arg == "l")
      y0 = 1;
    else
      y0 = Rational::from_string(specialize_arg);
    cls = chiy::specialize(cls, y0);
    doc["specialize"] = specialize_arg;
    doc["at"] = y0.str();
  }
  if (has_component) {
    cls = chiy::t_p_component(cls, component);
    doc["component"] = component;
  }
  doc["class"] = class_to_json(cls);
  emit(doc, format, std::cout);
  return kExitOk;
}

int cmd_reconstruct(int dim, bool has_dim, const std::vector<std::string>& sample_args,
                    const std::string& variety_path, bool reciprocal, const std::string& format) {
  json doc;
  doc["command"] = "reconstruct";

  if (!variety_path.empty()) {
    const chiy::VarietyDescriptor d = chiy::parse_descriptor(read_file(variety_path));
    const int n = d.dim();
    const Polynomial direct = chiy::chi_y(d);
    const chiy::SamplePlan plan = chiy::default_nodes(n);
    const auto samples = chiy::sample_chi_y(direct, plan);
    const Polynomial rebuilt = chiy::reconstruct_genus(n, samples);

    doc["descriptor"] = chiy::descriptor_to_json(d);
    doc["dim"] = n;
    json nodes = json::array();
    json sample_map = json::object();
    for (const auto& [node, value] : samples) {
      nodes.push_back(node.str());
      sample_map[node.str()] = value.str();
    }
    doc["nodes"] = std::move(nodes);
    doc["samples"] = std::move(sample_map);
    doc["coefficients"] = poly_to_json(rebuilt, n + 1);
    doc["direct"] = poly_to_json(direct, n + 1);
    doc["round_trip"] = (rebuilt == direct) ? "exact" : "mismatch";
    emit(doc, format, std::cout);
    return kExitOk;
  }

  if (!has_dim) throw chiy::SchemaError("reconstruct needs --dim together with --samples");
  const auto samples = parse_samples(sample_args);
  doc["dim"] = dim;

  Polynomial rebuilt;
  if (reciprocal) {
    std::map<long long, Rational> integer_samples;
    for (const auto& [node, value] : samples) {
      if (!node.is_integer())
        throw chiy::SchemaError("reciprocal plans take integer nodes only, got " + node.str());
      integer_samples[node.numerator().convert_to<long long>()] = value;
    }
    if (integer_samples.size() != samples.size())
      throw chiy::DistinctNodesError("duplicate node in the samples");
    rebuilt = chiy::reciprocal_node_plan(dim, integer_samples);
    doc["plan"] = "reciprocal";
  } else {
    rebuilt = chiy::reconstruct_genus(dim, samples);
    doc["plan"] = "direct";
  }
  json nodes = json::array();
  for (const auto& [node, value] : samples) nodes.push_back(node.str());
  doc["nodes"] = std::move(nodes);
  doc["coefficients"] = poly_to_json(rebuilt, dim + 1);
  doc["polynomial"] = rebuilt.str();
  emit(doc, format, std::cout);
  return kExitOk;
}

int cmd_derived(const std::string& path, int p, bool has_p, const std::string& taylor_at,
                bool do_higher_euler, int lw, bool has_lw, const std::string& format) {
  const chiy::VarietyDescriptor d = chiy::parse_descriptor(read_file(path));
  json doc;
  doc["command"] = "derived";
  doc["descriptor"] = chiy::descriptor_to_json(d);

  if (do_higher_euler) {
    const chiy::HodgeDiamond* diamond = d.get_if<chiy::HodgeDiamond>();
    chiy::HodgeDiamond storage;
    if (diamond == nullptr) {
      if (const auto* ps = d.get_if<chiy::ProjectiveSpace>()) {
        storage = chiy::projective_space_diamond(ps->dim);
        diamond = &storage;
      } else {
        throw chiy::UnsupportedModelError("higher Euler characteristics need a Hodge diamond");
      }
    }
    doc["higher_euler"] = rationals_to_json(chiy::higher_euler(*diamond));
    emit(doc, format, std::cout);
    return kExitOk;
  }

  if (has_lw) {
    const chiy::ChernModel model = chiy::chern_data(d);
    const Polynomial genus = chiy::chi_y(d);
    const Rational chi = genus.evaluate(-1);
    const Rational printed = chiy::libgober_wood(lw, model.dim, model.numbers, chi);
    const auto taylor = chiy::taylor_coefficients(genus, -1);
    const Rational derivative_route =
        lw < static_cast<int>(taylor.coeffs.size()) ? taylor.coeffs[static_cast<std::size_t>(lw)] : Rational(0);
    doc["lw"] = lw;
    doc["printed"] = printed.str();
    doc["derivative_route"] = derivative_route.str();
    doc["agree"] = printed == derivative_route;
    emit(doc, format, std::cout);
    return kExitOk;
  }

  const Polynomial genus = chiy::chi_y(d);
  if (!taylor_at.empty()) {
    const Rational alpha = Rational::from_string(taylor_at);
    doc["taylor_at"] = alpha.str();
    doc["coefficients"] = rationals_to_json(chiy::taylor_coefficients(genus, alpha).coeffs);
    emit(doc, format, std::cout);
    return kExitOk;
  }

  const int order = has_p ? p : 1;
  const Polynomial result = chiy::derived_genus(order, genus);
  doc["p"] = order;
  doc["coefficients"] = poly_to_json(result);
  doc["polynomial"] = result.str();
  emit(doc, format, std::cout);
  return kExitOk;
}

int cmd_verify(bool quick, const std::string& format) {
  const std::vector<chiy::CheckResult> results = chiy::run_verification(quick);
  const int failures = chiy::count_status(results, chiy::CheckStatus::Fail);
  const int warnings = chiy::count_status(results, chiy::CheckStatus::Warn);

  if (format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      const char* status = r.status == chiy::CheckStatus::Pass   ? "pass"
                           : r.status == chiy::CheckStatus::Warn ? "warn"
                                                                 : "fail";
      checks.push_back({{"name", r.name}, {"status", status}, {"detail", r.detail}});
    }
    json doc;
    doc["command"] = "verify";
    doc["checks"] = std::move(checks);
    doc["failures"] = failures;
    doc["warnings"] = warnings;
    doc["passed"] = failures == 0;
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& r : results) {
      const char* tag = r.status == chiy::CheckStatus::Pass   ? "[PASS]"
                        : r.status == chiy::CheckStatus::Warn ? "[WARN]"
                                                              : "[FAIL]";
      std::cout << tag << " " << r.name << ": " << r.detail << "\n";
    }
    std::cout << results.size() << " checks, " << failures << " failures, " << warnings
              << " warnings\n";
  }
  return failures == 0 ? kExitOk : kExitVerify;
}

int cmd_catalog(int dim, bool has_dim, const std::string& format) {
  const auto& catalog = chiy::builtin_catalog();
  if (format == "text") {
    for (const auto& entry : catalog) {
      if (has_dim && entry.descriptor.dim() != dim) continue;
      std::cout << entry.name << " (dim " << entry.descriptor.dim() << ", "
                << entry.descriptor.kind() << "): " << poly_to_text(chiy::chi_y(entry.descriptor))
                << "\n";
    }
    return kExitOk;
  }
  json entries = json::object();
  for (const auto& entry : catalog) {
    if (has_dim && entry.descriptor.dim() != dim) continue;
    entries[entry.name] = {{"dim", entry.descriptor.dim()},
                           {"kind", entry.descriptor.kind()},
                           {"chi_y", poly_to_json(chiy::chi_y(entry.descriptor),
                                                  entry.descriptor.dim() + 1)}};
  }
  json doc;
  doc["command"] = "catalog";
  doc["entries"] = std::move(entries);
  std::cout << doc.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chi_y-genus and Hirzebruch characteristic class calculator"};
  app.require_subcommand(1);

  std::string format = "json";

  auto* chi = app.add_subcommand("chi-y", "chi_y genus of a descriptor (optionally bundle-twisted)");
  std::vector<std::string> chi_paths;
  std::string chi_at, chi_bundle, chi_format = "json";
  chi->add_option("descriptor", chi_paths, "descriptor JSON file(s)")->required();
  chi->add_option("--at", chi_at, "evaluate the genus at a rational y0");
  chi->add_option("--bundle", chi_bundle, "bundle spec rank=<r>,c1=<v>,c2=<v>,...");
  chi->add_option("--format", chi_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* cls = app.add_subcommand("class", "Hirzebruch class T_y in the hyperplane basis");
  std::string cls_path, cls_specialize, cls_format = "json";
  int cls_component = 0;
  cls->add_option("descriptor", cls_path, "descriptor JSON file")->required();
  cls->add_option("--specialize", cls_specialize, "chern, todd, l, or a rational y0");
  auto* comp_opt = cls->add_option("--component", cls_component, "extract the y^p component");
  cls->add_option("--format", cls_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* rec = app.add_subcommand("reconstruct", "recover chi_y coefficients from sampled values");
  int rec_dim = 0;
  std::vector<std::string> rec_samples;
  std::string rec_variety, rec_format = "json";
  bool rec_reciprocal = false;
  auto* dim_opt = rec->add_option("--dim", rec_dim, "dimension (number of samples minus one)");
  rec->add_option("--samples", rec_samples, "samples node=value (space or comma separated)");
  rec->add_option("--variety", rec_variety, "descriptor file: sample-then-solve round trip");
  rec->add_flag("--reciprocal", rec_reciprocal, "even-dimension plan with reciprocal nodes");
  rec->add_option("--format", rec_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* der = app.add_subcommand("derived", "derived genera, Taylor expansions, closed forms");
  std::string der_path, der_taylor_at, der_format = "json";
  int der_p = 0, der_lw = 0;
  bool der_higher = false;
  der->add_option("descriptor", der_path, "descriptor JSON file")->required();
  auto* p_opt = der->add_option("--p", der_p, "order of the derived genus");
  der->add_option("--taylor-at", der_taylor_at, "Taylor coefficients at a rational center");
  der->add_flag("--higher-euler", der_higher, "higher Euler characteristics from the Hodge diamond");
  auto* lw_opt = der->add_option("--lw", der_lw, "Libgober-Wood closed form a_p, compared to the derivative route");
  der->add_option("--format", der_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* ver = app.add_subcommand("verify", "run the exact self-verification suite");
  bool ver_quick = false;
  std::string ver_format = "text";
  ver->add_flag("--quick", ver_quick, "reduced ranges");
  ver->add_option("--format", ver_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* cat = app.add_subcommand("catalog", "list built-in varieties and their genera");
  int cat_dim = 0;
  std::string cat_format = "json";
  auto* cat_dim_opt = cat->add_option("--dim", cat_dim, "only entries of this dimension");
  cat->add_option("--format", cat_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (chi->parsed()) return cmd_chi_y(chi_paths, chi_at, chi_bundle, chi_format);
    if (cls->parsed())
      return cmd_class(cls_path, cls_specialize, cls_component, comp_opt->count() > 0, cls_format);
    if (rec->parsed())
      return cmd_reconstruct(rec_dim, dim_opt->count() > 0, rec_samples, rec_variety,
                             rec_reciprocal, rec_format);
    if (der->parsed())
      return cmd_derived(der_path, der_p, p_opt->count() > 0, der_taylor_at, der_higher, der_lw,
                         lw_opt->count() > 0, der_format);
    if (ver->parsed()) return cmd_verify(ver_quick, ver_format);
    if (cat->parsed()) return cmd_catalog(cat_dim, cat_dim_opt->count() > 0, cat_format);
  } catch (const chiy::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const chiy::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const chiy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitModel;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitUnexpected;
  }
  (void)format;
  return kExitOk;
}
