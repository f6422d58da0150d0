#include "entlab/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace entlab {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError("state spec: " + message); }

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return item.key() == k; })) {
      fail("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

double get_number(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail("missing key \"" + std::string(key) + "\" in " + where);
  if (!obj[key].is_number()) fail("key \"" + std::string(key) + "\" in " + where + " must be a number");
  return obj[key].get<double>();
}

double get_number_or(const json& obj, const char* key, double fallback) {
  return obj.contains(key) ? obj[key].get<double>() : fallback;
}

FamilyParams parse_family(const json& obj) {
  if (!obj.is_object()) fail("\"family\" must be an object");
  if (!obj.contains("id") || !obj["id"].is_number_integer()) {
    fail("\"family\" needs an integer \"id\"");
  }
  const int id = obj["id"].get<int>();
  if (id < 1 || id > 6) fail("family id must be in 1..6");
  const auto names = family_diag_names(id);
  if (names.second) {
    expect_keys(obj, "\"family\"", {"id", names.first, names.second, "v", "alpha"});
  } else {
    expect_keys(obj, "\"family\"", {"id", names.first, "v", "alpha"});
  }
  FamilyParams p;
  p.family = id;
  p.diag1 = get_number(obj, "\"family\"", names.first);
  p.diag2 = names.second ? get_number(obj, "\"family\"", names.second) : 0.0;
  p.v = get_number(obj, "\"family\"", "v");
  p.alpha = get_number_or(obj, "alpha", 0.0);
  return p;
}

PureInitialState parse_pure(const json& obj) {
  if (!obj.is_object()) fail("\"pure\" must be an object");
  if (!obj.contains("kind") || !obj["kind"].is_string()) fail("\"pure\" needs a string \"kind\"");
  const std::string kind = obj["kind"].get<std::string>();
  PureInitialState s;
  if (kind == "psi") {
    expect_keys(obj, "\"pure\"", {"kind", "theta", "alpha"});
    s.kind = PureInitialState::Kind::Psi;
    s.alpha = get_number_or(obj, "alpha", 0.0);
  } else if (kind == "phi_plus" || kind == "phi_minus") {
    // The phase of the phi states is fixed by the kind.
    expect_keys(obj, "\"pure\"", {"kind", "theta"});
    s.kind = kind == "phi_plus" ? PureInitialState::Kind::PhiPlus
                                : PureInitialState::Kind::PhiMinus;
    s.alpha = kind == "phi_plus" ? 0.0 : 3.14159265358979323846;
  } else {
    fail("pure kind must be \"psi\", \"phi_plus\" or \"phi_minus\"");
  }
  s.theta = get_number(obj, "\"pure\"", "theta");
  return s;
}

MixedInitialState parse_mixed(const json& obj) {
  if (!obj.is_object()) fail("\"mixed\" must be an object");
  expect_keys(obj, "\"mixed\"", {"kind", "theta"});
  if (!obj.contains("kind") || !obj["kind"].is_number_integer()) {
    fail("\"mixed\" needs an integer \"kind\"");
  }
  MixedInitialState s;
  s.kind = obj["kind"].get<int>();
  if (s.kind < 1 || s.kind > 6) fail("mixed kind must be in 1..6");
  s.theta = get_number(obj, "\"mixed\"", "theta");
  return s;
}

Matrix4 parse_raw(const json& arr) {
  if (!arr.is_array() || arr.size() != 16) {
    fail("\"raw\" must be an array of 16 [re, im] pairs, row-major");
  }
  Matrix4 m;
  for (int i = 0; i < 16; ++i) {
    const json& pair = arr[static_cast<std::size_t>(i)];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      fail("\"raw\" entry " + std::to_string(i) + " must be a [re, im] pair");
    }
    m(i / 4, i % 4) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return m;
}

}  // namespace

StateSpec parse_state_spec(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min(text.size(), static_cast<std::size_t>(e.byte));
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw ConfigError("state spec: parse error at line " + std::to_string(line) + ": " + e.what());
  }
  if (!root.is_object()) fail("top level must be an object");
  expect_keys(root, "the state spec", {"family", "pure", "mixed", "raw"});
  if (root.size() != 1) {
    fail("exactly one of \"family\", \"pure\", \"mixed\", \"raw\" must be present");
  }
  StateSpec spec;
  if (root.contains("family")) spec.value = parse_family(root["family"]);
  else if (root.contains("pure")) spec.value = parse_pure(root["pure"]);
  else if (root.contains("mixed")) spec.value = parse_mixed(root["mixed"]);
  else spec.value = parse_raw(root["raw"]);
  return spec;
}

StateSpec load_state_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read state spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_spec(buffer.str());
}

DensityMatrix realize(const StateSpec& spec) {
  return std::visit(
      [](const auto& v) -> DensityMatrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FamilyParams>) return build_family(v);
        else if constexpr (std::is_same_v<T, PureInitialState>) return pure_initial(v);
        else if constexpr (std::is_same_v<T, MixedInitialState>) return mixed_initial(v);
        else return validate_density_matrix(v);
      },
      spec.value);
}

std::string describe(const StateSpec& spec) {
  std::ostringstream os;
  os.precision(12);
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FamilyParams>) {
          const auto names = family_diag_names(v.family);
          os << "family " << v.family << " (" << names.first << "=" << v.diag1;
          if (names.second) os << ", " << names.second << "=" << v.diag2;
          os << ", v=" << v.v << ", alpha=" << v.alpha << ")";
        } else if constexpr (std::is_same_v<T, PureInitialState>) {
          const char* kind = v.kind == PureInitialState::Kind::Psi ? "psi"
                             : v.kind == PureInitialState::Kind::PhiPlus ? "phi_plus"
                                                                         : "phi_minus";
          os << "pure " << kind << " (theta=" << v.theta << ", alpha=" << v.alpha << ")";
        } else if constexpr (std::is_same_v<T, MixedInitialState>) {
          os << "mixed " << v.kind << " (theta=" << v.theta << ")";
        } else {
          os << "raw 4x4 matrix";
        }
      },
      spec.value);
  return os.str();
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_surface_csv(std::ostream& os, const std::vector<SurfaceSample>& samples) {
  os << "theta,time,T,Sz,S2,s11,s12,N_oracle,N_printed,N_corrected\n";
  for (const SurfaceSample& s : samples) {
    os << format_g17(s.theta) << ',' << format_g17(s.time) << ',' << format_g17(s.scaled_time_T)
       << ',' << format_g17(s.obs.sz) << ',' << format_g17(s.obs.s2) << ','
       << format_g17(s.obs.s11) << ',' << format_g17(s.obs.s12) << ',' << format_g17(s.n_oracle)
       << ',' << format_g17(s.n_printed) << ',' << format_g17(s.n_corrected) << '\n';
  }
}

std::string surface_csv_string(const std::vector<SurfaceSample>& samples) {
  std::ostringstream os;
  write_surface_csv(os, samples);
  return os.str();
}

std::string discrepancy_summary(const DiscrepancyReport& report) {
  std::ostringstream os;
  os << "# documented as-printed inconsistencies (seed=" << report.seed
     << ", samples_per_family=" << report.samples_per_family << ", generator=mt19937_64)\n";
  for (const DocumentedIssue& issue : report.issues) {
    os << "# " << issue.id << " max_abs_deviation=" << format_g17(issue.max_abs_deviation) << "\n"
       << "#   " << issue.description << "\n";
  }
  return os.str();
}

void write_discrepancy_report(std::ostream& os, const DiscrepancyReport& report) {
  os << "context,printed,corrected,oracle,abs_deviation_printed\n";
  for (const DiscrepancyRecord& r : report.records) {
    os << '"' << r.context << "\"," << format_g17(r.printed_value) << ','
       << format_g17(r.corrected_value) << ',' << format_g17(r.oracle_value) << ','
       << format_g17(r.abs_deviation_printed) << '\n';
  }
  os << discrepancy_summary(report);
}

std::string verification_table(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  for (const VerificationReport& r : reports) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " max_err=" << format_g17(r.max_abs_error)
       << " tol=" << format_g17(r.tolerance) << " trials=" << r.trials << "  " << r.claim << "\n";
    for (const VerificationFailure& f : r.failures) {
      os << "       failure: " << f.point << " (error " << format_g17(f.error) << ")\n";
    }
  }
  return os.str();
}

}  // namespace entlab
