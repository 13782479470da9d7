// Command-line front end: classify, enumerate, verify.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gl2sing/charts.hpp"
#include "gl2sing/classifier.hpp"
#include "gl2sing/cohomology.hpp"
#include "gl2sing/galois.hpp"

using json = nlohmann::ordered_json;
using namespace gl2sing;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBound = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  int p = 5;
  int f = 0;  // 0 = suite default
  std::vector<int> n;
  std::vector<int> m;
  std::uint64_t seed = 42;
  int trials = 0;  // 0 = suite default
  int jobs = 1;
  int bound = 4;
  std::uint64_t enum_bound = 1000000;
  std::string format = "json";
  std::string out;
};

struct Report {
  std::string command;
  json config = json::object();
  json results = json::array();
  json summary = json::object();
  json failures = json::array();
};

std::vector<int> parse_tuple(const std::string& s, const char* what) {
  std::vector<int> v;
  if (s.empty()) return v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int x = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw UsageError(std::string("invalid ") + what + " entry '" + item + "'");
    }
  }
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

json config_json(const RunConfig& c) {
  json j;
  j["p"] = c.p;
  j["f"] = c.f;
  j["n"] = c.n;
  j["m"] = c.m;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["jobs"] = c.jobs;
  j["bound"] = c.bound;
  j["format"] = c.format;
  return j;
}

json diagnosis_json(const ComponentDiagnosis& d) {
  json j;
  j["verdict"] = to_string(d.verdict);
  j["nonnormal_codim"] = d.nonnormal_codim;
  j["complement_smooth"] = d.complement_smooth;
  j["gorenstein"] = d.gorenstein;
  j["lci"] = d.lci;
  j["sing_codim"] = d.sing_codim;
  j["provenance"] = d.provenance;
  return j;
}

void check_prime(int p) {
  if (!is_prime(p) || p <= 3 || p >= 100) throw UsageError("p must be a prime with 3 < p < 100");
}

// ---- classify / enumerate ----

Report run_classify(const RunConfig& c) {
  check_prime(c.p);
  if (c.n.empty()) throw UsageError("classify needs --n");
  if (c.f && c.f != static_cast<int>(c.n.size())) throw UsageError("--f does not match the length of --n");
  SerreWeight w;
  try {
    w = SerreWeight::make(c.p, c.n, c.m);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Report r;
  r.command = "classify";
  ComponentDiagnosis rule = classify_weight(w);
  std::optional<ComponentDiagnosis> charts;
  if (!w.is_steinberg()) charts = classify_via_charts(w);
  Agreement ag = !charts ? Agreement::NOT_APPLICABLE
                         : (rule.same_result(*charts) ? Agreement::AGREE : Agreement::DISAGREE);
  json row;
  row["n"] = join(w.n);
  row["m"] = join(w.m);
  row["rule"] = diagnosis_json(rule);
  row["charts"] = charts ? diagnosis_json(*charts) : json(nullptr);
  row["agreement"] = to_string(ag);
  r.results.push_back(row);
  r.summary["verdict"] = to_string(rule.verdict);
  r.summary["agreement"] = to_string(ag);
  if (ag == Agreement::DISAGREE) r.failures.push_back({{"n", join(w.n)}, {"reason", "rule and charts disagree"}});
  return r;
}

Report run_enumerate(const RunConfig& c) {
  check_prime(c.p);
  int f = c.f ? c.f : 1;
  if (f < 1) throw UsageError("f must be positive");
  EnumerationOptions opts;
  opts.bound = c.enum_bound;
  opts.jobs = c.jobs;
  auto rows = enumerate_weights(c.p, f, opts);
  Report r;
  r.command = "enumerate";
  std::map<std::string, int> hist;
  int agree = 0, disagree = 0, na = 0;
  for (const auto& row : rows) {
    json j;
    j["n"] = join(row.weight.n);
    j["verdict"] = to_string(row.rule.verdict);
    j["nonnormal_codim"] = row.rule.nonnormal_codim;
    j["gorenstein"] = row.rule.gorenstein;
    j["lci"] = row.rule.lci;
    j["sing_codim"] = row.rule.sing_codim;
    j["provenance"] = row.rule.provenance;
    j["charts_verdict"] = row.charts ? to_string(row.charts->verdict) : "";
    j["agreement"] = to_string(row.agreement);
    r.results.push_back(j);
    hist[to_string(row.rule.verdict)]++;
    if (row.agreement == Agreement::AGREE) ++agree;
    if (row.agreement == Agreement::NOT_APPLICABLE) ++na;
    if (row.agreement == Agreement::DISAGREE) {
      ++disagree;
      r.failures.push_back({{"n", join(row.weight.n)}, {"reason", "rule and charts disagree"}});
    }
  }
  json h = json::object();
  for (const auto& [k, v] : hist) h[k] = v;
  r.summary["rows"] = rows.size();
  r.summary["histogram"] = h;
  r.summary["agree"] = agree;
  r.summary["disagree"] = disagree;
  r.summary["not_applicable"] = na;
  return r;
}

// ---- verify suites ----

void add_check(Report& r, json item, bool ok, const std::string& reason) {
  item["ok"] = ok;
  if (!ok) r.failures.push_back({{"item", r.results.size()}, {"reason", reason}});
  r.results.push_back(std::move(item));
}

void finish_summary(Report& r) {
  r.summary["checks"] = r.results.size();
  r.summary["failed"] = r.failures.size();
}

Report verify_tables(const RunConfig& c) {
  check_prime(c.p);
  Report r;
  r.command = "verify tables";
  int trials = c.trials ? c.trials : 500;
  for (int e : {1, 2}) {
    const FieldSpec& F = FieldSpec::get(c.p, e);
    for (int n = 1; n <= 8; ++n) {
      for (int k : {0, 1, 2}) {
        LocalChartCase cs;
        try {
          cs = LocalChartCase::make(n, k);
        } catch (const Error&) {
          continue;
        }
        for (Side side : {Side::L, Side::R}) {
          auto t = verify_table_row(F, cs, side, trials, derive_seed(c.seed, n * 100 + k * 10 + e), c.jobs);
          json j;
          j["field"] = F.name();
          j["case"] = n;
          j["k"] = k;
          j["side"] = to_string(side);
          j["trials"] = t.trials;
          j["in_a_eta"] = t.in_a_eta;
          j["matches"] = t.matches;
          j["ideal_zero"] = t.ideal_zero;
          add_check(r, j, t.ok(), "table row mismatch");
        }
        break;  // one admissible pairing per case
      }
    }
  }
  finish_summary(r);
  return r;
}

Report verify_cohomology(const RunConfig& c) {
  check_prime(c.p);
  Report r;
  r.command = "verify cohomology";
  int bound = std::max(c.bound, 1);
  int points = c.trials ? c.trials : 50;
  const FieldSpec& F = FieldSpec::get(c.p);
  for (int s = -2; s <= 2; ++s) {
    Class3Report a = cech_class3(F, s, bound, bound);
    Class3Report b = cech_class3(F, s, 2 * bound, 2 * bound);
    json j;
    j["delta_plus_eps"] = s;
    j["minimal_generators"] = a.total_minimal_generators;
    j["stated_generators"] = class3_stated_presentation(s).generators.size();
    j["minimal_relations"] = a.total_minimal_relations;
    j["stated_relations"] = class3_stated_presentation(s).relations.size();
    j["generators_match"] = a.generators_in_kernel && a.generators_span && a.generators_minimal;
    j["stated_relations_hold"] = a.stated_relations_hold;
    j["stated_relations_generate"] = a.stated_relations_generate;
    std::string missing;
    for (const auto& u : a.unlisted_relations) missing += (missing.empty() ? "" : "; ") + u;
    j["unlisted_relations"] = missing;
    j["h1_total"] = a.h1_total;
    j["h1_annihilated"] = a.h1_annihilated;
    j["stable_under_doubling"] = same_ranks(a, b);
    bool h1_ok = s <= 1 ? a.h1_total == 0 : (a.h1_total == 1 && a.h1_annihilated);
    bool ok = a.presentation_matches() && h1_ok && same_ranks(a, b);
    add_check(r, j, ok,
              !a.presentation_matches() ? "presentation differs: missing " + missing : "cohomology mismatch");
  }
  for (int e : {1, 2}) {
    const FieldSpec& G = FieldSpec::get(c.p, e);
    std::mt19937_64 rng(derive_seed(c.seed, e));
    int zero_rank = class3_h1_fiber_rank(G, 2, bound, bound, G.zero(), G.zero(), G.zero());
    int off_bad = 0;
    for (int i = 0; i < points; ++i) {
      auto pt = cone_parametrization(G.random_nonzero(rng), G.random(rng));
      if (class3_h1_fiber_rank(G, 2, bound, bound, pt[0], pt[1], pt[2]) != 0) ++off_bad;
    }
    json j;
    j["field"] = G.name();
    j["origin_rank"] = zero_rank;
    j["off_origin_points"] = points;
    j["off_origin_nonzero"] = off_bad;
    add_check(r, j, zero_rank == 1 && off_bad == 0, "fiber rank mismatch");
  }
  finish_summary(r);
  return r;
}

Report verify_koszul(const RunConfig& c) {
  check_prime(c.p);
  Report r;
  r.command = "verify koszul";
  const FieldSpec& F = FieldSpec::get(c.p);
  std::vector<int> fs;
  if (c.f) fs = {c.f};
  else fs = {1, 2, 3, 4};
  for (int f : fs) {
    if (f < 1 || f > 4) throw UsageError("koszul suite needs 1 <= f <= 4");
    E1Report e = e1_report_all3(F, f);
    json j;
    j["map"] = "all3";
    j["f"] = f;
    j["domain_dim"] = e.domain_dim;
    j["codomain_dim"] = e.codomain_dim;
    j["cokernel_rank"] = e.cokernel_rank;
    j["witnesses_independent"] = e.witnesses_independent;
    bool ok = (f == 1 ? e.cokernel_rank == 3 : e.cokernel_rank >= 3) && e.witnesses_independent;
    add_check(r, j, ok, "cokernel rank below bound");
  }
  int samples = c.trials ? c.trials : 100;
  for (int l : {4, 5, 6}) {
    std::size_t lo = SIZE_MAX, hi = 0;
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
      E1Report e = e1_report_star(F, l, derive_seed(c.seed, 1000 * l + i) | 1);
      lo = std::min(lo, e.cokernel_rank);
      hi = std::max(hi, e.cokernel_rank);
      if (e.cokernel_rank < 2 || !e.witnesses_independent) ++bad;
    }
    json j;
    j["map"] = "star";
    j["length"] = l;
    j["samples"] = samples;
    j["min_cokernel_rank"] = lo;
    j["max_cokernel_rank"] = hi;
    j["failures"] = bad;
    add_check(r, j, bad == 0, "cokernel rank below 2");
  }
  finish_summary(r);
  return r;
}

Report verify_galois(const RunConfig& c) {
  check_prime(c.p);
  Report r;
  r.command = "verify galois";
  int trials = c.trials ? c.trials : 50;
  std::vector<int> fs;
  if (c.f) fs = {c.f};
  else fs = {2, 3, 4, 5, 6, 7, 8};
  const FieldSpec& G = FieldSpec::get(c.p, 2);
  const FieldSpec& F = FieldSpec::get(c.p);
  for (int f : fs) {
    if (f < 1 || f > 8) throw UsageError("galois suite needs 1 <= f <= 8");
    std::mt19937_64 rng(derive_seed(c.seed, f));
    if (f >= 2) {
      int bad = 0;
      for (int t = 0; t < trials; ++t) {
        FieldElement a = G.random_nonzero(rng), b = G.random_nonzero(rng);
        FieldElement d = det(ext_matrix(f, a, b));
        if (d != a - b && d != b - a) ++bad;
      }
      add_check(r, {{"check", "det_identity"}, {"f", f}, {"trials", trials}, {"failures", bad}}, bad == 0,
                "determinant identity fails");
    }
    int bad = 0, split = 0;
    for (int t = 0; t < trials; ++t) {
      ExtensionProblem prob;
      bool equal = t % 2 == 1;
      for (int j = 0; j < f; ++j) {
        prob.lambda1.push_back(G.random_nonzero(rng));
        prob.lambda2.push_back(G.random_nonzero(rng));
        prob.x.push_back(G.random(rng));
      }
      if (equal) {
        FieldElement p1 = G.one(), p2 = G.one();
        for (int j = 1; j < f; ++j) {
          p1 *= prob.lambda1[j];
          p2 *= prob.lambda2[j];
        }
        prob.lambda1[0] = prob.lambda2[0] * p2 / p1;
      }
      SplitResult s = split_extension(prob);
      bool differ = s.lambda1_0 != s.lambda2_0;
      if (s.outcome == SplitOutcome::SPLIT) {
        ++split;
        for (const auto& x : extension_residuals(prob, s.alpha))
          if (!x.is_zero()) ++bad;
      } else if (differ) {
        ++bad;
      }
    }
    add_check(r, {{"check", "split_extension"}, {"f", f}, {"trials", trials}, {"split", split}, {"failures", bad}},
              bad == 0, "split witness fails substitution");
    if (f >= 2) {
      FrobeniusData fd = frobenius_exponents(f, c.p);
      add_check(r, {{"check", "frobenius_exponents"}, {"f", f}, {"l0", fd.l0}, {"l1", fd.l1}}, true, "");
      int nbad = 0, ext = 0;
      for (int t = 0; t < trials; ++t) {
        GFMatrix b0(F, 2, 2);
        do {
          b0.set(0, 0, F.random(rng));
          b0.set(1, 0, F.random_nonzero(rng));
          b0.set(1, 1, F.random(rng));
        } while (det(b0).is_zero());
        NoncmReduction red = noncm_basis_reduction(b0, F.random(rng), f);
        if (!red.top_right_zero || !red.all_constant) ++nbad;
        if (red.root_in_extension) ++ext;
      }
      add_check(r, {{"check", "basis_reduction"}, {"f", f}, {"trials", trials}, {"root_in_extension", ext},
                    {"failures", nbad}},
                nbad == 0, "top-right entry survives");
    }
    int bbad = 0;
    for (int t = 0; t < trials; ++t)
      if (!base_change_split_check(F.random_nonzero(rng), F.random(rng), c.p, f)) ++bbad;
    add_check(r, {{"check", "base_change_split"}, {"f", f}, {"trials", trials}, {"failures", bbad}}, bbad == 0,
              "not diagonal after base change");
    if (!c.m.empty() && static_cast<int>(c.m.size()) == f) {
      std::vector<FieldElement> ones(f, F.one());
      RankOneBK q = nonnormal_quotient(c.p, c.m, ones), s = nonnormal_sub(c.p, c.m, ones);
      add_check(r, {{"check", "rank_one_descent"}, {"f", f}, {"m", join(c.m)}},
                q.descent_consistent() && s.descent_consistent(), "descent exponents inconsistent");
    }
  }
  finish_summary(r);
  return r;
}

Report verify_charts(const RunConfig& c) {
  check_prime(c.p);
  Report r;
  r.command = "verify charts";
  const FieldSpec& F = FieldSpec::get(c.p);
  SingularScanReport s = singular_locus_scan(F);
  add_check(r,
            {{"check", "cone_singular_locus"},
             {"field", s.field},
             {"cone_points", s.cone_points},
             {"singular_points", s.singular_points},
             {"only_origin", s.singular_only_at_origin},
             {"parametrization_covers", s.parametrization_covers_cone},
             {"singular_codim", s.singular_codim}},
            s.singular_only_at_origin && s.parametrization_covers_cone && s.singular_codim == 2,
            "cone singular locus mismatch");
  const FieldSpec& G = FieldSpec::get(c.p, 2);
  SingularScanReport ss = singular_locus_sample(G, c.trials ? c.trials : 200, c.seed);
  add_check(r,
            {{"check", "cone_singular_sample"},
             {"field", ss.field},
             {"cone_points", ss.cone_points},
             {"singular_points", ss.singular_points},
             {"only_origin", ss.singular_only_at_origin}},
            ss.singular_only_at_origin, "sampled singular point off the origin");
  std::vector<int> fs = c.f ? std::vector<int>{c.f} : (c.p == 5 ? std::vector<int>{1, 2} : std::vector<int>{1});
  for (int f : fs) {
    if (f < 1 || f > 2) throw UsageError("charts suite needs f in {1, 2}");
    NonNormalCountReport n = all3_nonnormal_count(F, f);
    add_check(r,
              {{"check", "nonnormal_codim"},
               {"f", f},
               {"y_points", n.y_points},
               {"y_nonnormal_points", n.y_nonnormal_points},
               {"z_points", n.z_points},
               {"z_nonnormal_points", n.z_nonnormal_points},
               {"y_codim", n.y_codim},
               {"z_codim", n.z_codim}},
              n.z_codim == f && n.y_codim == f, "non-normal codimension differs from f");
  }
  finish_summary(r);
  return r;
}

// ---- output ----

std::string scalar_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, scalar_text(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::vector<std::string> table_columns(const json& results) {
  std::vector<std::string> cols;
  for (const auto& row : results) {
    std::vector<std::pair<std::string, std::string>> flat;
    flatten(row, "", flat);
    for (const auto& [k, v] : flat)
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  }
  return cols;
}

std::string cell(const json& row, const std::string& key) {
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(row, "", flat);
  for (const auto& [k, v] : flat)
    if (k == key) return v;
  return "";
}

std::string render(const Report& r, const std::string& format) {
  if (format == "json") {
    json j;
    j["command"] = r.command;
    j["config"] = r.config;
    j["results"] = r.results;
    j["summary"] = r.summary;
    j["failures"] = r.failures;
    return j.dump(2) + "\n";
  }
  std::vector<std::string> cols = table_columns(r.results);
  std::ostringstream os;
  if (format == "csv") {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
    os << "\n";
    for (const auto& row : r.results) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cell(row, cols[i]));
      os << "\n";
    }
    return os.str();
  }
  os << "# " << r.command << "\n\n|";
  for (const auto& c : cols) os << " " << c << " |";
  os << "\n|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : r.results) {
    os << "|";
    for (const auto& c : cols) os << " " << cell(row, c) << " |";
    os << "\n";
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(r.summary, "", flat);
  os << "\n";
  for (const auto& [k, v] : flat) os << "- " << k << ": " << v << "\n";
  os << "- failures: " << r.failures.size() << "\n";
  return os.str();
}

std::string default_name(const std::string& command, const std::string& format) {
  std::string base = command;
  std::replace(base.begin(), base.end(), ' ', '-');
  return base + (format == "markdown" ? ".md" : "." + format);
}

void emit(const Report& r, const RunConfig& c) {
  std::string text = render(r, c.format);
  std::string path = c.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("GL2SING_OUT_DIR"); dir && *dir)
      path = (std::filesystem::path(dir) / default_name(r.command, c.format)).string();
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity classification of GL2 moduli components attached to Serre weights"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string n_text, m_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "prime p (3 < p < 100)");
    sub->add_option("--f", cfg.f, "number of embeddings f");
    sub->add_option("--m", m_text, "comma-separated m tuple");
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_option("--trials", cfg.trials, "samples per check (0 = suite default)");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--format", cfg.format, "json, csv or markdown")
        ->check(CLI::IsMember({"json", "csv", "markdown"}));
    sub->add_option("--out", cfg.out, "output file (default stdout or $GL2SING_OUT_DIR)");
  };

  auto* classify = app.add_subcommand("classify", "classify one Serre weight");
  common(classify);
  classify->add_option("--n", n_text, "comma-separated n tuple")->required();

  auto* enumerate = app.add_subcommand("enumerate", "classify every weight for (p, f)");
  common(enumerate);
  enumerate->add_option("--bound", cfg.enum_bound, "maximum number of weights");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "tables, cohomology, koszul, galois or charts")->required();
  common(verify);
  verify->add_option("--bound", cfg.bound, "degree bound for cohomology");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    cfg.n = parse_tuple(n_text, "n");
    cfg.m = parse_tuple(m_text, "m");
    Report r;
    if (classify->parsed()) {
      r = run_classify(cfg);
    } else if (enumerate->parsed()) {
      r = run_enumerate(cfg);
    } else {
      static const std::map<std::string, Report (*)(const RunConfig&)> suites{
          {"tables", verify_tables},   {"cohomology", verify_cohomology}, {"koszul", verify_koszul},
          {"galois", verify_galois},   {"charts", verify_charts}};
      auto it = suites.find(suite);
      if (it == suites.end()) throw UsageError("unknown suite '" + suite + "'");
      r = it->second(cfg);
    }
    r.config = config_json(cfg);
    emit(r, cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << r.command << ": " << r.failures.size() << " failure(s), " << secs << " s\n";
    return r.failures.empty() ? kOk : kVerifyFailed;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
