#include "nhb/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nhb/demazure.hpp"
#include "nhb/dgstruct.hpp"
#include "nhb/nilhecke.hpp"
#include "nhb/schur.hpp"
#include "nhb/solomon.hpp"
#include "nhb/weylb.hpp"

namespace nhb::cli {

namespace {

using nlohmann::json;

struct Options {
  int n = 2;
  std::string alpha;
  std::string beta;
  std::string word;
  int N = 0;
  std::string suite = "all";
  int trials = 25;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  int k = -1;
  std::string expr;
  std::string act;
  std::string p;
  bool all = false;
};

struct Output {
  json data;
  std::string text;
  int code = kExitOk;
};

std::string lines(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& l : items) s += l + "\n";
  return s;
}

Output cmd_schur(const Options& o) {
  Partition alpha = Partition::from(parse_csv_ints(o.alpha), o.n);
  StrictPartition beta = StrictPartition::from(parse_csv_ints(o.beta), o.n);
  ExtPoly value = schur_ext(alpha, beta, o.n);
  Output r;
  r.text = render(value) + "\n";
  r.data = {{"n", o.n},
            {"alpha", alpha.parts},
            {"beta", beta.parts},
            {"value", to_json(value)},
            {"text", render(value)},
            {"invariant", is_invariant(value)}};
  return r;
}

Output cmd_schubert(const Options& o) {
  Output r;
  if (!o.word.empty() && !o.all) {
    SignedPerm w = from_word(parse_word(o.word), o.n);
    ExtPoly s = schubert(w);
    r.text = render(s) + "\n";
    r.data = {{"n", o.n}, {"w", w.to_string()}, {"length", length(w)},
              {"value", to_json(s)}, {"text", render(s)}};
    return r;
  }
  json list = json::array();
  std::vector<std::string> out;
  for (const auto& w : enumerate(o.n)) {
    ExtPoly s = schubert(w);
    out.push_back(w.to_string() + " l=" + std::to_string(length(w)) + ": " + render(s));
    list.push_back({{"w", w.to_string()}, {"length", length(w)}, {"value", to_json(s)},
                    {"text", render(s)}});
  }
  r.text = lines(out);
  r.data = {{"n", o.n}, {"schubert", list}};
  return r;
}

Output cmd_basis(const Options& o) {
  Output r;
  std::vector<int> ks;
  if (o.k >= 0) ks.push_back(o.k);
  else
    for (int k = 0; k <= o.n; ++k) ks.push_back(k);
  json blocks = json::array();
  std::vector<std::string> out;
  for (int k : ks) {
    json basis = json::array();
    const auto parts = strict_partitions(o.n, k);
    const auto polys = invariant_schur_basis(o.n, k);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      basis.push_back(to_json(polys[i]));
      out.push_back("S_{0," + parts[i].to_string() + "} = " + render(polys[i]));
    }
    blocks.push_back({{"n", o.n}, {"k", k}, {"basis", basis}});
  }
  r.text = lines(out);
  r.data = blocks.size() == 1 ? blocks.front() : blocks;
  return r;
}

Output cmd_poincare(const Options& o) {
  QPoly p = poincare(o.n);
  QPoly q = poincare_product(o.n);
  Output r;
  r.text = render_qpoly(p) + "\n";
  r.data = {{"n", o.n},
            {"coefficients", p},
            {"text", render_qpoly(p)},
            {"product_formula", render_qpoly(q)},
            {"matches_product", p == q},
            {"order", evaluate_qpoly(p, 1)}};
  return r;
}

Output cmd_nh(const Options& o) {
  if (o.expr.empty()) throw UsageError("nh needs --expr");
  NHElement a = parse_nh(o.expr, o.n);
  Output r;
  r.text = render(a) + "\n";
  auto deg = nh_degree(a);
  r.data = {{"n", o.n}, {"input", o.expr}, {"normal_form", to_json(a)}, {"text", render(a)},
            {"degree", deg ? json(*deg) : json(nullptr)}};
  if (!o.act.empty()) {
    ExtPoly f = parse(o.act, o.n, OddFamily::Omega);
    ExtPoly image = nh_act(a, f);
    r.text += render(image) + "\n";
    r.data["action"] = {{"f", render(f)}, {"value", to_json(image)}, {"text", render(image)}};
  }
  return r;
}

Output cmd_dg(const Options& o) {
  const int N = o.N > 0 ? o.N : o.n;
  Differential d(N, o.n);
  Output r;
  if (!o.expr.empty()) {
    ExtPoly f = parse(o.expr, o.n, OddFamily::Omega);
    ExtPoly df = d_apply(d, f);
    r.text = render(df) + "\n";
    r.data = {{"n", o.n}, {"N", N}, {"input", render(f)}, {"value", to_json(df)},
              {"text", render(df)}};
    return r;
  }
  std::vector<std::string> out;
  json table = json::array();
  for (int i = 1; i <= o.n; ++i) {
    ExtPoly img = d.on_omega(i);
    out.push_back("d(w" + std::to_string(i) + ") = " + render(img));
    table.push_back({{"i", i}, {"value", to_json(img)}, {"text", render(img)}});
  }
  r.text = lines(out);
  r.data = {{"n", o.n}, {"N", N}, {"generators", table}};
  return r;
}

AdmissibleTuple tuple_from(const Options& o) {
  if (o.p.empty()) return default_admissible(o.n);
  AdmissibleTuple t;
  std::stringstream ss(o.p);
  std::string item;
  while (std::getline(ss, item, ';')) t.p.push_back(parse(item, o.n, OddFamily::Omega));
  if (t.size() != o.n) throw UsageError("--p needs n entries separated by ';'");
  return t;
}

Output cmd_solomon(const Options& o) {
  AdmissibleTuple t = tuple_from(o);
  Report valid = validate_admissible(t);
  Output r;
  json tuple = json::array();
  for (const auto& p : t.p) tuple.push_back(render(p));
  r.data = {{"n", o.n}, {"p", tuple}, {"admissible", valid.to_json()}};
  if (!valid.passed()) {
    r.text = valid.to_text();
    r.code = kExitValidation;
    return r;
  }
  JMap J = build_J(default_fgens(o.n), t);
  std::vector<std::string> out{"P = " + render(J.P())};
  json images = json::array();
  for (int j = 1; j <= o.n; ++j) {
    out.push_back("J(w" + std::to_string(j) + ") = " + render(J.omega_image(j)));
    images.push_back({{"j", j}, {"value", to_json(J.omega_image(j))},
                      {"text", render(J.omega_image(j))}});
  }
  json fgens = json::array();
  for (const auto& f : J.fgens()) fgens.push_back(render(f));
  r.text = lines(out);
  r.data["P"] = to_json(J.P());
  r.data["f"] = fgens;
  r.data["J"] = images;
  return r;
}

Output cmd_verify(const Options& o) {
  static const std::vector<std::string> kSuites{"weyl", "demazure", "nilhecke", "dg", "schur",
                                                "solomon"};
  std::vector<std::string> chosen;
  if (o.suite == "all") chosen = kSuites;
  else chosen.push_back(o.suite);
  std::vector<Report> reports;
  for (const auto& s : chosen) {
    if (s == "weyl") reports.push_back(verify_weyl_relations(o.n, o.trials, o.seed));
    else if (s == "demazure") reports.push_back(verify_nil_relations(o.n, o.trials, o.seed));
    else if (s == "nilhecke") reports.push_back(verify_presentation(o.n, o.trials, o.seed));
    else if (s == "dg") {
      std::vector<int> Ns = o.N > 0 ? std::vector<int>{o.N} : std::vector<int>{2, 3, 4};
      Report dg{"dg", {}};
      for (int N : Ns) dg.append(verify_dg(o.n, N, o.trials, o.seed));
      reports.push_back(dg);
    } else if (s == "schur") reports.push_back(verify_schur(o.n, o.trials, o.seed));
    else if (s == "solomon") reports.push_back(verify_solomon(o.n, o.trials, o.seed));
    else throw UsageError("unknown suite " + s);
  }
  Output r;
  json suites = json::array();
  bool pass = true;
  std::size_t failed = 0;
  for (const auto& rep : reports) {
    suites.push_back(rep.to_json());
    r.text += rep.to_text();
    pass = pass && rep.passed();
    failed += rep.failures();
  }
  r.text += pass ? "ALL PASS\n" : "FAILED CHECKS: " + std::to_string(failed) + "\n";
  r.data = {{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}, {"pass", pass},
            {"suites", suites}};
  r.code = pass ? kExitOk : kExitVerification;
  return r;
}

Output cmd_parse(const Options& o) {
  if (o.expr.empty()) throw UsageError("parse needs --expr");
  ExtPoly f = parse(o.expr, o.k > 0 ? o.k : 0);
  Output r;
  r.text = render(f) + "\n";
  auto d = degree(f, Grading::xdeg());
  r.data = to_json(f);
  r.data["text"] = render(f);
  r.data["xdeg"] = d ? json(d->first) : json(nullptr);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended type-B nilHecke algebra toolkit", "nhb"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--n", o.n, "Rank n")->check(CLI::Range(1, kMaxVars));
  app.add_option("--alpha", o.alpha, "Partition alpha, comma separated");
  app.add_option("--beta", o.beta, "Strict partition beta, comma separated ascending");
  app.add_option("--word", o.word, "Word in the generators, comma separated");
  app.add_option("--N", o.N, "Differential index N")->check(CLI::PositiveNumber);
  app.add_option("--suite", o.suite, "Verification suite")
      ->check(CLI::IsMember({"all", "weyl", "demazure", "nilhecke", "dg", "schur", "solomon"}));
  app.add_option("--trials", o.trials, "Random trials per check")->check(CLI::Range(1, 100000));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "Write output to this path");
  app.add_option("--k", o.k, "Number of omega factors (basis) or nvars (parse)");
  app.add_option("--expr", o.expr, "Expression to evaluate");
  app.add_option("--act", o.act, "Polynomial to act on (nh)");
  app.add_option("--p", o.p, "Tuple p_1;...;p_n (solomon)");
  app.add_flag("--all", o.all, "List every element (schubert)");

  std::map<std::string, std::function<Output(const Options&)>> handlers{
      {"schur", cmd_schur},     {"schubert", cmd_schubert}, {"basis", cmd_basis},
      {"poincare", cmd_poincare}, {"nh", cmd_nh},           {"dg", cmd_dg},
      {"solomon", cmd_solomon}, {"verify", cmd_verify},     {"parse", cmd_parse}};
  const std::map<std::string, std::string> help{
      {"schur", "Extended Schur polynomial S_{alpha,beta}"},
      {"schubert", "Type-B Schubert polynomials"},
      {"basis", "Schur basis of the extended symmetric polynomials"},
      {"poincare", "Poincare polynomial of W(B_n)"},
      {"nh", "PBW normal form of a nilHecke expression"},
      {"dg", "Differential d_N"},
      {"solomon", "Admissible tuple, P matrix and J"},
      {"verify", "Run verification suites"},
      {"parse", "Canonical form of an extended polynomial"}};
  for (const auto& [name, text] : help) app.add_subcommand(name, text);

  std::vector<std::string> argv_store{"nhb"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "nhb: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Output result;
  try {
    result = handlers.at(command)(o);
  } catch (const ParseError& e) {
    err << "nhb: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UsageError& e) {
    err << "nhb: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "nhb: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceError& e) {
    err << "nhb: " << e.what() << "\n";
    return kExitValidation;
  }

  std::string payload = o.format == "json" ? result.data.dump(2) + "\n" : result.text;
  if (o.out.empty()) {
    out << payload;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "nhb: cannot write " << o.out << "\n";
      return kExitValidation;
    }
    file << payload;
  }
  return result.code;
}

}  // namespace nhb::cli
