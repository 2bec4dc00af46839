#include "uepframe/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uepframe/catalog.hpp"
#include "uepframe/io.hpp"

namespace uep {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Streams& io) {
  std::ostringstream ss;
  if (path == "-") {
    ss << io.in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  ss << f.rdbuf();
  return ss.str();
}

/// Accepts decimals and simple fractions such as "1/32".
double parse_number(const std::string& s) {
  const auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    std::size_t ua = 0, ub = 0;
    const double x = std::stod(a, &ua), y = std::stod(b, &ub);
    if (ua != a.size() || ub != b.size() || y == 0.0) throw std::invalid_argument(s);
    return x / y;
  } catch (const std::exception&) {
    throw InputError("not a number: '" + s + "'");
  }
}

Params parse_params(const std::vector<std::string>& kvs) {
  Params ps;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter must look like key=value: '" + kv + "'");
    std::string key = kv.substr(0, eq);
    if (key == "λ") key = "lambda";
    ps[key] = parse_number(kv.substr(eq + 1));
  }
  return ps;
}

json params_json(const Params& ps) {
  json j = json::object();
  for (const auto& [k, v] : ps) j[k] = v;
  return j;
}

Mask load_mask(const std::string& path, Streams& io, json* meta = nullptr) {
  const json j = parse_json(read_input(path, io), path == "-" ? "stdin" : path);
  // A frame file is accepted wherever a mask is expected.
  const json& mj = j.is_object() && j.contains("generators") && j.contains("mask") ? j["mask"] : j;
  if (meta) *meta = mj.value("meta", json::object());
  return mask_from_json(mj);
}

void emit(Streams& io, const json& j) { io.out << j.dump(2) << '\n'; }

json catalog_list_json() {
  json arr = json::array();
  for (const auto& e : catalog_entries()) {
    json row = json::array();
    json M = json::array();
    for (std::size_t i = 0; i < e.M.rows(); ++i) {
      row = json::array();
      for (std::size_t k = 0; k < e.M.cols(); ++k) row.push_back(e.M(i, k));
      M.push_back(row);
    }
    json entry = {{"name", e.name}, {"dim", e.dim}, {"M", M}, {"description", e.description}};
    if (e.paramSpec)
      entry["param"] = {{"name", e.paramSpec->name},
                        {"lo", e.paramSpec->lo},
                        {"hi", e.paramSpec->hi},
                        {"loOpen", e.paramSpec->loOpen},
                        {"default", e.paramSpec->defaultValue}};
    arr.push_back(entry);
  }
  return arr;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_box(const std::string& spec, std::size_t dim) {
  const std::string prefix = "box:";
  if (spec.rfind(prefix, 0) != 0) throw InputError("support must look like box:lo1,hi1,...");
  std::vector<std::int64_t> nums;
  std::stringstream ss(spec.substr(prefix.size()));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      nums.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("support bound is not an integer: '" + tok + "'");
    }
  }
  if (nums.size() != 2 * dim) throw InputError("support box needs " + std::to_string(2 * dim) + " bounds");
  std::vector<std::pair<std::int64_t, std::int64_t>> b;
  for (std::size_t k = 0; k < dim; ++k) b.push_back({nums[2 * k], nums[2 * k + 1]});
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"Tight wavelet frames from masks via the unitary extension principle", "uepframe"};
  app.require_subcommand(1);

  int code = kExitOk;
  double tol = kDefaultVerifyTolerance;

  // catalog
  auto* cat = app.add_subcommand("catalog", "built-in masks");
  cat->require_subcommand(1);
  auto* catList = cat->add_subcommand("list", "list entries");
  auto* catShow = cat->add_subcommand("show", "print a mask as JSON");
  std::string showName;
  std::vector<std::string> showParams;
  catShow->add_option("name", showName, "entry name")->required();
  catShow->add_option("--param", showParams, "parameter key=value");

  // verify
  auto* ver = app.add_subcommand("verify", "check the UEP identities of a frame file");
  std::string verPath;
  ver->add_option("frame", verPath, "frame JSON or -")->required();
  ver->add_option("--tol", tol, "tolerance");

  // subqmf
  auto* sq = app.add_subcommand("subqmf", "minimum of f on a uniform grid");
  std::string sqPath;
  std::size_t grid = 0;
  sq->add_option("mask", sqPath, "mask JSON or -")->required();
  sq->add_option("--grid", grid, "points per axis");
  sq->add_option("--tol", tol, "tolerance");

  // sumrules
  auto* sr = app.add_subcommand("sumrules", "order of the zero conditions");
  std::string srPath;
  std::size_t maxOrder = 10;
  sr->add_option("mask", srPath, "mask JSON or -")->required();
  sr->add_option("--max-order", maxOrder, "largest order tested");

  // analyze
  auto* an = app.add_subcommand("analyze", "zeros and Hessians of f, existence verdict");
  std::string anPath, plotPath;
  an->add_option("mask", anPath, "mask JSON or -")->required();
  an->add_option("--grid", grid, "points per axis");
  an->add_option("--plot", plotPath, "write f on the grid as CSV");

  // construct
  auto* con = app.add_subcommand("construct", "build frame generators");
  con->require_subcommand(1);
  auto* sos = con->add_subcommand("sos", "from a sum-of-squares certificate");
  std::string sosPath, certSpec;
  std::vector<std::string> certParams;
  sos->add_option("mask", sosPath, "mask JSON or -")->required();
  sos->add_option("--cert", certSpec, "certificate JSON file or builtin name")->required();
  sos->add_option("--param", certParams, "builtin certificate parameter key=value");
  auto* sdp = con->add_subcommand("sdp", "from the semidefinite feasibility problem");
  std::string sdpPath, supportSpec;
  SolveOptions sopts;
  sdp->add_option("mask", sdpPath, "mask JSON or -")->required();
  sdp->add_option("--support", supportSpec, "box:lo1,hi1,... (default: support of p)");
  sdp->add_option("--max-iter", sopts.maxIterations, "iteration cap");
  sdp->add_option("--tol", sopts.residualTol, "residual tolerance");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*catList) {
      emit(io, catalog_list_json());
    } else if (*catShow) {
      const Params ps = parse_params(showParams);
      Mask m = catalog_get(showName, ps);
      Params full = ps;
      if (const auto& spec = catalog_entry(showName).paramSpec; spec && !full.count(spec->name))
        full[spec->name] = spec->defaultValue;
      emit(io, mask_to_json(m, {{"catalog", showName}, {"params", params_json(full)}}));
    } else if (*ver) {
      const json j = parse_json(read_input(verPath, io), verPath == "-" ? "stdin" : verPath);
      const FrameSystem f = frame_from_json(j);
      const auto rep = check_all(f, tol);
      emit(io, report_to_json(rep));
      code = rep.passed ? kExitOk : kExitFailed;
    } else if (*sq) {
      const Mask m = load_mask(sqPath, io);
      const std::size_t n = grid ? grid : default_grid_points(m.dim());
      const auto r = check_subqmf_grid(m, n);
      json j = subqmf_to_json(r);
      j["gridPointsPerAxis"] = n;
      j["passed"] = r.minValue >= -tol;
      emit(io, j);
      code = r.minValue >= -tol ? kExitOk : kExitFailed;
    } else if (*sr) {
      const Mask m = load_mask(srPath, io);
      emit(io, {{"order", sum_rules_order(m, maxOrder)}, {"maxOrder", maxOrder}});
    } else if (*an) {
      const Mask m = load_mask(anPath, io);
      const auto rep = existence_verdict(m, grid);
      for (const auto& w : rep.warnings) err << "warning: " << w << '\n';
      if (!plotPath.empty()) {
        std::ofstream f(plotPath);
        if (!f) throw InputError("cannot write " + plotPath);
        write_grid_csv(m, rep.gridPointsPerAxis, f);
      }
      emit(io, zero_report_to_json(rep));
    } else if (*sos) {
      json meta;
      const Mask m = load_mask(sosPath, io, &meta);
      if (!is_expansive(m.ctx->M())) err << "warning: dilation matrix is not expansive\n";
      SosCertificate cert;
      const auto names = builtin_certificate_names();
      if (std::find(names.begin(), names.end(), certSpec) != names.end()) {
        Params ps;
        if (meta.is_object() && meta.contains("params") && meta["params"].is_object())
          for (const auto& [k, v] : meta["params"].items())
            if (v.is_number()) ps[k] = v.get<double>();
        for (const auto& [k, v] : parse_params(certParams)) ps[k] = v;
        cert = builtin_certificate(certSpec, ps);
      } else {
        cert = certificate_from_json(parse_json(read_input(certSpec, io), certSpec), m.dim());
      }
      const auto lifted = polyphase_lift_cert(m, cert);
      const FrameSystem f = construct_from_sos(m, lifted);
      const auto rep = check_all(f, tol);
      emit(io, frame_to_json(f, rep, meta));
      code = rep.passed ? kExitOk : kExitFailed;
    } else if (*sdp) {
      json meta;
      const Mask m = load_mask(sdpPath, io, &meta);
      if (!is_expansive(m.ctx->M())) err << "warning: dilation matrix is not expansive\n";
      const SupportSet sup = supportSpec.empty() ? SupportSet::of(m.p) : SupportSet::box(parse_box(supportSpec, m.dim()));
      const auto res = construct_frame_sdp(m, sup, sopts);
      if (res.status != SolveStatus::Feasible) {
        err << "semidefinite feasibility stalled after " << res.iterations << " iterations\n";
        emit(io, {{"status", "stalled"}, {"iterations", res.iterations}});
        return kExitStalled;
      }
      json j = frame_to_json(res.frame, check_all(res.frame, 1e-8), meta);
      j["solver"] = {{"status", "feasible"}, {"iterations", res.iterations}, {"rank", res.rank}, {"phase", res.phase},
                     {"supportSize", res.support.size()}};
      emit(io, j);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CatalogError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SupportError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CertificateError& e) {
    err << "certificate error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace uep
