#include "arrchow/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arrchow/arrangement.hpp"
#include "arrchow/chow.hpp"
#include "arrchow/fixtures.hpp"
#include "arrchow/labeling.hpp"
#include "arrchow/permstats.hpp"
#include "arrchow/signed_partition.hpp"
#include "arrchow/suites.hpp"
#include "arrchow/topegraph.hpp"

namespace arrchow {

using Json = nlohmann::ordered_json;

namespace {

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
  for (const char* o : options) {
    if (v == o) return true;
  }
  return false;
}

Json json_big(const BigInt& v) {
  if (!v.fits_slong_p()) return Json(v.get_str());
  return Json(v.get_si());
}

Json json_poly(const IntPolynomial& p) { return Json(p.to_decimal_strings()); }

Json json_ints(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(json_big(x));
  return a;
}

std::string vector_text(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

Json header(const Request& r, const std::string& method) {
  Json j;
  j["family"] = r.family;
  j["n"] = r.family == "file" ? Json(nullptr) : Json(r.n);
  j["s"] = r.s ? Json(*r.s) : Json(nullptr);
  j["method"] = method;
  return j;
}

Arrangement arrangement_for(const Request& r) {
  if (r.family == "a") return make_family(Family::A, r.n);
  if (r.family == "b") return make_family(Family::B, r.n);
  if (r.family == "d") return make_family(Family::D, r.n);
  if (r.family == "dns") return make_family(Family::Dns, r.n, r.s);
  return read_arrangement_file(r.file);
}

LatticeVariant variant_for(const Request& r) {
  if (r.family == "b") return LatticeVariant::B(r.n);
  if (r.family == "d") return LatticeVariant::D(r.n);
  return LatticeVariant::Dns(r.n, *r.s);
}

// Runs body with a stream bound to path ("-" is the main output).
template <class F>
void with_dump(const std::string& path, std::ostream& out, F&& body) {
  if (path.empty()) return;
  if (path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  body(f);
}

// Closed h-polynomial for families that have one.
IntPolynomial closed_h(const Request& r) {
  if (r.family == "b" || (r.family == "dns" && r.s == r.n)) return h_b_closed(r.n);
  if (r.family == "d" || (r.family == "dns" && r.s == 0)) return h_d_closed(r.n);
  throw UsageError("--method closed for gamma needs family b, d, or dns with s in {0, n}");
}

int cmd_gamma(const Request& r, std::ostream& out) {
  std::string method = r.method == "auto" ? "topegraph" : r.method;
  IntPolynomial h;
  if (method == "closed") {
    h = closed_h(r);
  } else {
    const Arrangement a = arrangement_for(r);
    const TopeGraph g = build_tope_graph(a, r.jobs);
    with_dump(r.dump_tope_graph, out, [&](std::ostream& os) { dump_tope_graph(g, os); });
    // All-plus when it is a chamber (every built-in family), else the smallest chamber.
    SignVector base{std::vector<int8_t>(a.size(), 1)};
    if (g.index_of(base) < 0) base = g.vertices.front();
    h = method == "separation" ? h_via_separation(a, base, r.jobs) : h_via_indegree(direct(g, base));
  }
  const GammaVector gamma = h_to_gamma(h);
  if (r.format == "json") {
    Json j = header(r, method);
    j["gamma"] = json_ints(gamma.entries);
    if (r.show_h) j["h"] = json_poly(h);
    if (r.show_f) j["f"] = json_poly(h_to_f(h));
    out << j.dump() << '\n';
  } else {
    out << "gamma: " << gamma.to_string() << '\n';
    if (r.show_h) out << "h: " << h << '\n';
    if (r.show_f) out << "f: " << h_to_f(h) << '\n';
  }
  return 0;
}

int cmd_chow(const Request& r, std::ostream& out) {
  std::string method = r.method;
  if (method == "auto") {
    if (r.family == "a" || r.family == "b") method = "closed";
    else if (r.family == "file") method = "recursive";
    else method = "chains";
  }
  IntPolynomial h;
  if (method == "closed") {
    if (r.family == "a") h = chow_type_a(r.n);
    else if (r.family == "b" || (r.family == "dns" && r.s == r.n)) h = chow_type_b(r.n);
    else throw UsageError("--method closed for chow needs family a, b, or dns with s = n");
  } else if (method == "chains") {
    if (r.family == "file") throw UsageError("--method chains has no labelling for file arrangements");
    auto emit = [&](const GradedLattice& lat, const EdgeLabeling& labels, ChainConvention c) {
      with_dump(r.dump_chains, out, [&](std::ostream& os) {
        enumerate_filtered_chains(lat, labels, c, [&](const std::vector<int>&, const std::vector<Label>& word, int des) {
          os << word_to_string(word) << " ; des=" << des << '\n';
        });
      });
      h = chow_via_chains(lat, labels, c, r.jobs);
    };
    if (r.family == "a") {
      const Arrangement braid = make_family(Family::A, r.n);
      const FlatLattice flats = intersection_lattice(braid);
      emit(flats.lattice, braid_labeling(flats, braid), ChainConvention::Weak);
    } else {
      const PartitionLattice lat = enumerate_lattice(variant_for(r), r.jobs);
      emit(lat.lattice, el_labeling(lat), ChainConvention::Strict);
    }
  } else {
    if (r.family == "a" || r.family == "file") {
      h = chow_recursive(intersection_lattice(arrangement_for(r)).lattice);
    } else {
      h = chow_recursive(enumerate_lattice(variant_for(r), r.jobs).lattice);
    }
  }
  if (r.format == "json") {
    Json j = header(r, method);
    j["coeffs"] = json_poly(h);
    out << j.dump() << '\n';
  } else {
    out << "H: " << h << '\n';
  }
  return 0;
}

int cmd_fvector(const Request& r, std::ostream& out) {
  const Arrangement a = arrangement_for(r);
  const std::vector<long long> f = f_vector(a, r.jobs);
  const IntPolynomial h = f_to_h(f_polynomial(f));
  if (r.format == "json") {
    Json j = header(r, "flats");
    j["f"] = f;
    j["h"] = json_poly(h);
    out << j.dump() << '\n';
  } else {
    out << "f: " << vector_text(f) << '\n';
    out << "h: " << h << '\n';
  }
  return 0;
}

int cmd_tables(const Request& r, std::ostream& out) {
  int mismatches = 0;
  int rows = 0;
  Json list = Json::array();
  const bool text = r.format == "text";
  if (r.table == "all" || r.table == "gamma") {
    for (const auto& fx : gamma_fixtures()) {
      if (r.n_max && fx.n > *r.n_max) continue;
      const Arrangement a = make_family(Family::Dns, fx.n, fx.s);
      const SignVector base{std::vector<int8_t>(a.size(), 1)};
      const GammaVector g = h_to_gamma(h_via_indegree(a, base, r.jobs));
      const bool ok = g.entries == fx.gamma;
      mismatches += !ok;
      ++rows;
      if (text) {
        out << "gamma n=" << fx.n << " s=" << fx.s << ' ' << g.to_string() << (ok ? " ok" : " MISMATCH expected ")
            << (ok ? "" : GammaVector{fx.gamma, fx.n}.to_string()) << '\n';
      } else {
        list.push_back({{"table", "gamma"}, {"n", fx.n}, {"s", fx.s}, {"gamma", json_ints(g.entries)},
                        {"status", ok ? "ok" : "mismatch"}});
      }
    }
  }
  if (r.table == "all" || r.table == "chow") {
    for (const auto& fx : chow_fixtures()) {
      if (r.n_max && fx.n > *r.n_max) continue;
      const IntPolynomial h = fx.s == fx.n ? chow_type_b(fx.n) : chow_dns(fx.n, fx.s, r.jobs);
      const bool ok = h == fx.h;
      mismatches += !ok;
      ++rows;
      if (text) {
        out << "chow n=" << fx.n << " s=" << fx.s << ' ' << h << (ok ? " ok" : " MISMATCH expected ")
            << (ok ? "" : fx.h.to_string()) << '\n';
      } else {
        list.push_back(
            {{"table", "chow"}, {"n", fx.n}, {"s", fx.s}, {"coeffs", json_poly(h)}, {"status", ok ? "ok" : "mismatch"}});
      }
    }
  }
  if (text) {
    out << "tables: " << rows << " rows, " << mismatches << " mismatches\n";
  } else {
    Json j;
    j["rows"] = list;
    j["status"] = mismatches == 0 ? "pass" : "fail";
    out << j.dump() << '\n';
  }
  return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const Request& r, std::ostream& out) {
  const std::vector<CheckReport> reports = run_verify_suite(r.suite, r.n_max.value_or(4), r.jobs);
  bool all_ok = true;
  Json list = Json::array();
  for (const auto& rep : reports) {
    all_ok &= rep.passed;
    if (r.format == "json") {
      list.push_back({{"check", rep.check}, {"status", rep.passed ? "pass" : "fail"}, {"details", rep.details}});
    } else {
      out << (rep.passed ? "PASS " : "FAIL ") << rep.check;
      for (const auto& d : rep.details) out << " | " << d;
      out << '\n';
    }
  }
  if (r.format == "json") out << list.dump() << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

void validate(const Request& r) {
  if (!one_of(r.command, {"gamma", "chow", "fvector", "tables", "verify"})) {
    throw UsageError("unknown command: " + r.command);
  }
  if (!one_of(r.format, {"text", "json"})) throw UsageError("--format must be text or json");
  if (r.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (r.n_max && *r.n_max < 1) throw UsageError("--n-max must be at least 1");
  const bool needs_family = one_of(r.command, {"gamma", "chow", "fvector"});
  if (needs_family) {
    if (!one_of(r.family, {"a", "b", "d", "dns", "file"})) throw UsageError("--family must be a, b, d, dns or file");
    if (r.family == "file") {
      if (r.file.empty()) throw UsageError("--family file needs --file");
    } else if (r.n < 1) {
      throw UsageError("--n must be a positive integer");
    }
    if (r.family == "dns" && !r.s) throw UsageError("--family dns needs --s");
    if (r.family != "dns" && r.s) throw UsageError("--s only applies to --family dns");
    if (r.s && (*r.s < 0 || *r.s > r.n)) throw UsageError("--s must lie in 0..n");
    if (r.family == "d" && r.n < 2) throw UsageError("family d needs n >= 2");
  }
  if (r.command == "gamma" && !one_of(r.method, {"auto", "topegraph", "separation", "closed"})) {
    throw UsageError("gamma supports --method auto, topegraph, separation, closed");
  }
  if (r.command == "chow" && !one_of(r.method, {"auto", "chains", "closed", "recursive"})) {
    throw UsageError("chow supports --method auto, chains, closed, recursive");
  }
  if (one_of(r.command, {"fvector", "tables", "verify"}) && r.method != "auto") {
    throw UsageError(r.command + " takes no --method");
  }
  if (r.command == "verify" && !is_known_suite(r.suite)) throw UsageError("unknown suite: " + r.suite);
  if (r.command == "tables" && !one_of(r.table, {"all", "gamma", "chow"})) throw UsageError("--table must be gamma, chow or all");
}

std::optional<Request> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
  Request req;
  CLI::App app{"Exact invariants of reflection arrangements and their Chow polynomials"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "text or json");
    sub->add_option("--jobs", req.jobs, "worker threads");
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--family", req.family, "a, b, d, dns or file");
    sub->add_option("--n", req.n, "rank");
    sub->add_option("--s", req.s, "coordinate hyperplanes for dns");
    sub->add_option("--file", req.file, "arrangement file");
  };
  auto* gamma = app.add_subcommand("gamma", "gamma-vector of an arrangement");
  family(gamma);
  common(gamma);
  gamma->add_option("--method", req.method, "auto, topegraph, separation or closed");
  gamma->add_flag("--show-h", req.show_h, "also print the h-polynomial");
  gamma->add_flag("--show-f", req.show_f, "also print the f-polynomial");
  gamma->add_option("--dump-tope-graph", req.dump_tope_graph, "write the tope graph to a path ('-' for stdout)");

  auto* chow = app.add_subcommand("chow", "Chow polynomial");
  family(chow);
  common(chow);
  chow->add_option("--method", req.method, "auto, chains, closed or recursive");
  chow->add_option("--dump-chains", req.dump_chains, "write surviving chains to a path ('-' for stdout)");

  auto* fv = app.add_subcommand("fvector", "f-vector from flats and induced chambers");
  family(fv);
  common(fv);

  auto* tables = app.add_subcommand("tables", "recompute the reference tables and diff against them");
  common(tables);
  tables->add_option("--table", req.table, "gamma, chow or all");
  tables->add_option("--n-max", req.n_max, "skip rows with larger n");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", req.suite, "el, chow, arithmetic, chains or all");
  verify->add_option("--n-max", req.n_max, "largest rank to check (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (auto* sub : {gamma, chow, fv, tables, verify}) {
    if (sub->parsed()) req.command = sub->get_name();
  }
  validate(req);
  return req;
}

int run(const Request& req, std::ostream& out, std::ostream& err) {
  try {
    validate(req);
    std::ostringstream buffer;
    int status = 0;
    if (req.command == "gamma") status = cmd_gamma(req, buffer);
    else if (req.command == "chow") status = cmd_chow(req, buffer);
    else if (req.command == "fvector") status = cmd_fvector(req, buffer);
    else if (req.command == "tables") status = cmd_tables(req, buffer);
    else status = cmd_verify(req, buffer);
    out << buffer.str();
    return status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<Request> req;
  try {
    req = parse_command_line(argc, argv, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }
  if (!req) return 0;
  return run(*req, out, err);
}

}  // namespace arrchow
