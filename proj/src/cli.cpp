#include "covkit/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "covkit/chan.hpp"
#include "covkit/error.hpp"
#include "covkit/finrep.hpp"
#include "covkit/rng.hpp"
#include "covkit/suq2.hpp"
#include "covkit/weylfer.hpp"

namespace covkit::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kMaxSymmetricN = 7;
constexpr std::size_t kMaxWeylDim = 16;
constexpr int kMaxModes = 4;

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json channel_json(const Channel& ch) {
  json rows = json::array();
  for (std::size_t i = 0; i < ch.choi.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < ch.choi.cols(); ++j) row.push_back(complex_json(ch.choi(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"in_dim", ch.in_dim}, {"out_dim", ch.out_dim}, {"choi", std::move(rows)}};
}

void validate(const SymmetrySpec& s) {
  if (s.group == "symmetric" || s.group == "symmetric_plus") {
    if (s.n < 4 || s.n > kMaxSymmetricN)
      throw UsageError("--n must be in [4, " + std::to_string(kMaxSymmetricN) + "] for " + s.group);
  } else if (s.group == "suq2") {
    if (!(s.q > 0.0 && s.q < 1.0)) throw UsageError("--q must lie in (0, 1)");
    if (s.k < 0 || s.k > suq2::kMaxLabel || s.l < 0 || s.l > suq2::kMaxLabel)
      throw UsageError("--k and --l must be in [0, " + std::to_string(suq2::kMaxLabel) + "]");
  } else if (s.group == "weyl") {
    if (s.orders.empty()) throw UsageError("--orders is required for weyl");
    std::size_t total = 1;
    for (int d : s.orders) {
      if (d < 2) throw UsageError("--orders entries must be >= 2");
      total *= static_cast<std::size_t>(d);
      if (total > kMaxWeylDim) throw UsageError("weyl: product of orders must be <= " + std::to_string(kMaxWeylDim));
    }
  } else if (s.group == "fermionic") {
    if (s.modes < 1 || s.modes > kMaxModes) throw UsageError("--modes must be in [1, " + std::to_string(kMaxModes) + "]");
  } else if (s.group == "perm_gens") {
    if (s.n < 2 || s.n > kMaxSymmetricN) throw UsageError("perm_gens: n must be in [2, " + std::to_string(kMaxSymmetricN) + "]");
    if (s.gens.empty()) throw UsageError("perm_gens: at least one generator is required");
    for (const auto& g : s.gens) {
      if (g.size() != static_cast<std::size_t>(s.n)) throw UsageError("perm_gens: generator length must equal n");
      std::vector<char> seen(s.n + 1, 0);
      for (int x : g) {
        if (x < 1 || x > s.n || seen[x]) throw UsageError("perm_gens: generator is not a permutation of 1..n");
        seen[x] = 1;
      }
    }
  } else {
    throw UsageError("unknown group '" + s.group + "'");
  }
}

// ---- models: everything a command needs to know about one symmetry spec ----

struct Extreme {
  std::string label;
  Channel channel;
};

struct Verdict {
  bool covariant = false;
  json detail;
};

struct Model {
  json decomposition;
  std::vector<Extreme> extremes;
  std::optional<QWeight> q_in, q_out;
  std::function<Verdict(const Channel&)> verify;
  std::size_t in_dim = 0, out_dim = 0;
};

json coefficients_json(const std::vector<Complex>& c) {
  json a = json::array();
  for (auto z : c) a.push_back(complex_json(z));
  return a;
}

// Commutant-projection family with simplex coordinates a_k = c_k * (dim_k / d_in).
Verdict span_verdict(const Channel& ch, std::size_t d_in, std::span<const ComplexMatrix> projections,
                     const std::vector<std::string>& labels, double group_residual, Tolerance tol) {
  const auto dec = projection_span_decompose(ch, QWeight::identity(ch.in_dim), projections, tol);
  Verdict v;
  v.covariant = group_residual <= tol.eps && dec.in_span;
  json coords = json::array();
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const double rank = projections[k].trace().real();
    coords.push_back(json{{"label", labels[k]}, {"coordinate", dec.coefficients[k].real() * rank / static_cast<double>(d_in)}});
  }
  v.detail = json{{"covariance_residual", group_residual},
                  {"span_residual", dec.residual},
                  {"in_span", dec.in_span},
                  {"coefficients", coefficients_json(dec.coefficients)}};
  if (v.covariant) v.detail["simplex_coordinates"] = std::move(coords);
  return v;
}

Model symmetric_model(const SymmetrySpec& s, std::uint64_t seed, Tolerance tol, bool plus) {
  auto cat = std::make_shared<SnCatalog>(sn_catalog(static_cast<std::size_t>(s.n), seed, tol));
  const std::size_t d = cat->square.v.dim();
  Model m;
  m.in_dim = m.out_dim = d;
  m.q_in = m.q_out = QWeight::identity(d);
  std::vector<ComplexMatrix> projections;
  std::vector<std::string> labels;
  json blocks = json::array();
  for (const auto& b : cat->square.blocks) {
    projections.push_back(b.projection());
    labels.push_back(b.label);
  }
  if (!plus) {
    for (const auto& b : cat->square.blocks) blocks.push_back(json{{"label", b.label}, {"dim", b.dim}});
    for (const auto& c : cat->components) m.extremes.push_back({"Phi^{V->V}_" + c.block.label, c.channel});
  } else {
    // S_n^+ sees only three blocks: the last two classical ones merge.
    projections[2] = projections[2] + projections[3];
    projections.pop_back();
    labels = {"0", "1", "2"};
    const std::size_t dims[3] = {1, d, cat->square.blocks[2].dim + cat->square.blocks[3].dim};
    for (int k = 0; k < 3; ++k)
      blocks.push_back(json{{"label", labels[k]}, {"dim", dims[k]}});
    const auto ext = snplus_extreme_channels(static_cast<std::size_t>(s.n), seed, tol);
    for (int k = 0; k < 3; ++k) m.extremes.push_back({"Phi^{1->1}_" + labels[k], ext[k]});
  }
  json dims = json::array();
  for (const auto& b : blocks) dims.push_back(b["dim"]);
  m.decomposition = json{{"representation", "V (x) V"}, {"dims", dims}, {"blocks", blocks}};
  m.verify = [cat, projections, labels, d, plus, tol](const Channel& ch) {
    const double res = plus ? 0.0 : covariance_residual(ch, cat->square.v, cat->square.v);
    return span_verdict(ch, d, projections, labels, res, tol);
  };
  return m;
}

Model perm_gens_model(const SymmetrySpec& s, std::uint64_t seed, Tolerance tol) {
  std::vector<Permutation> gens;
  for (const auto& g : s.gens) {
    Permutation p(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) p[k] = static_cast<std::uint32_t>(g[k] - 1);
    gens.push_back(std::move(p));
  }
  auto group = FiniteGroup::from_permutations(static_cast<std::size_t>(s.n), std::move(gens));
  auto v = std::make_shared<FiniteGroupRep>(standard_rep(group));
  const auto family = cg_family(*v, *v, seed, tol);
  Model m;
  const std::size_t d = v->dim();
  m.in_dim = m.out_dim = d;
  m.q_in = m.q_out = QWeight::identity(d);
  std::vector<ComplexMatrix> projections;
  std::vector<std::string> labels;
  json blocks = json::array(), dims = json::array();
  for (const auto& c : family) {
    projections.push_back(c.block.projection());
    labels.push_back(c.block.label);
    blocks.push_back(json{{"label", c.block.label}, {"dim", c.block.dim}});
    dims.push_back(c.block.dim);
    m.extremes.push_back({"Phi^{V->V}_" + c.block.label, c.channel});
  }
  m.decomposition = json{{"group_order", group->order()}, {"representation", "V (x) V"}, {"dims", dims}, {"blocks", blocks}};
  m.verify = [v, projections, labels, d, tol](const Channel& ch) {
    return span_verdict(ch, d, projections, labels, covariance_residual(ch, *v, *v), tol);
  };
  return m;
}

Model suq2_model(const SymmetrySpec& s, Tolerance tol) {
  const auto fam = suq2::covariant_family(s.k, s.l, s.q, tol);
  const auto rk = suq2::irrep(s.k, s.q), rl = suq2::irrep(s.l, s.q);
  Model m;
  m.in_dim = rk->dim();
  m.out_dim = rl->dim();
  m.q_in = rk->Q;
  m.q_out = rl->Q;
  // Hom(m, conj(k) (x) l) is checked to be one-dimensional for every member.
  const auto projections = suq2::covariant_projections(s.k, s.l, s.q, tol);
  json blocks = json::array(), members = json::array();
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    blocks.push_back(json{{"label", fam.members[i]}, {"dim", fam.members[i] + 1},
                          {"projection_rank", std::llround(projections[i].trace().real())}});
    members.push_back(fam.members[i]);
  }
  m.decomposition = json{{"representation", "conj(" + std::to_string(s.k) + ") (x) " + std::to_string(s.l)},
                         {"fusion_members", members},
                         {"blocks", blocks}};
  // UCP extreme points (d_l / d_k) Phi^{k->l}_m
  const double scale = rl->qdim / rk->qdim;
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    m.extremes.push_back({"(d_l/d_k) Phi^{" + std::to_string(s.k) + "->" + std::to_string(s.l) + "}_" +
                              std::to_string(fam.members[i]),
                          scaled(fam.channels[i], scale)});
  const int k = s.k, l = s.l;
  const double q = s.q;
  m.verify = [k, l, q, tol, rk, rl](const Channel& ch) {
    const auto chk = suq2::covariance_check(ch, k, l, q, tol);
    Verdict v;
    v.covariant = chk.covariant;
    json ucp = json::array(), cg = json::array();
    for (std::size_t i = 0; i < chk.members.size(); ++i) {
      const double dm = suq2::irrep(chk.members[i], q)->qdim;
      const double a = chk.coefficients[i].real() * dm / rk->qdim;  // coefficient of Phi^{k->l}_m
      cg.push_back(json{{"m", chk.members[i]}, {"coefficient", a}});
      ucp.push_back(json{{"m", chk.members[i]}, {"coordinate", a * rk->qdim / rl->qdim}});
    }
    v.detail = json{{"covariance_residual", chk.residual},
                    {"adjoint_action_residual", suq2::adjoint_action_residual(ch, k, l, q)},
                    {"coefficients", coefficients_json(chk.coefficients)}};
    if (v.covariant) {
      v.detail["cg_coefficients"] = std::move(cg);
      v.detail["simplex_coordinates"] = std::move(ucp);
    }
    return v;
  };
  return m;
}

Model cocycle_model(const SymmetrySpec& s, Tolerance tol) {
  auto sys = std::make_shared<CocycleSystem>(s.group == "weyl" ? weyl_system(s.orders) : fermionic_system(s.modes));
  const auto basis = bell_basis(*sys, tol);
  Model m;
  m.in_dim = m.out_dim = sys->hilbert_dim();
  m.q_in = m.q_out = QWeight::identity(sys->hilbert_dim());
  json blocks = json::array();
  for (std::size_t x = 0; x < sys->size(); ++x) {
    json chi = json::array();
    for (auto z : basis.characters[x]) chi.push_back(complex_json(z));
    blocks.push_back(json{{"label", sys->label(x)}, {"dim", 1}, {"character_on_generators", chi}});
    m.extremes.push_back({"Ad_W" + sys->label(x), unitary_conj_channel(*sys, x)});
  }
  m.decomposition = json{{"group_order", sys->size()}, {"hilbert_dim", sys->hilbert_dim()},
                         {"one_dimensional_characters", sys->size()}, {"blocks", blocks}};
  m.verify = [sys, tol](const Channel& ch) {
    Verdict v;
    const double res = projective_covariance_residual(ch, *sys);
    const auto rec = recover_distribution(ch, *sys, tol);
    v.covariant = res <= tol.eps;
    v.detail = json{{"covariance_residual", res}, {"reconstruction_residual", rec.residual},
                    {"is_distribution", rec.distribution}};
    if (v.covariant) {
      v.detail["recovered_p"] = rec.p;
      if (rec.covariant) v.detail["simplex_coordinates"] = rec.p;
    }
    return v;
  };
  return m;
}

Model build_model(const SymmetrySpec& s, std::uint64_t seed, Tolerance tol) {
  if (s.group == "symmetric") return symmetric_model(s, seed, tol, false);
  if (s.group == "symmetric_plus") return symmetric_model(s, seed, tol, true);
  if (s.group == "perm_gens") return perm_gens_model(s, seed, tol);
  if (s.group == "suq2") return suq2_model(s, tol);
  return cocycle_model(s, tol);
}

json flags_json(const Model& m, const Channel& ch, Tolerance tol) {
  const auto f = classify(ch, tol);
  const double qres = qtp_residual(ch, *m.q_in, *m.q_out);
  return json{{"cp", f.cp}, {"tp", f.tp}, {"unital", f.unital}, {"qtp", qres <= tol.eps},
              {"min_choi_eigenvalue", f.min_choi_eigenvalue}, {"tp_residual", f.tp_residual},
              {"unital_residual", f.unital_residual}, {"qtp_residual", qres}};
}

std::string file_stem(const SymmetrySpec& s) {
  std::string stem = s.group;
  if (s.group == "symmetric" || s.group == "symmetric_plus" || s.group == "perm_gens") stem += "_n" + std::to_string(s.n);
  if (s.group == "suq2") stem += "_k" + std::to_string(s.k) + "_l" + std::to_string(s.l);
  if (s.group == "weyl")
    for (int d : s.orders) stem += "_" + std::to_string(d);
  if (s.group == "fermionic") stem += "_m" + std::to_string(s.modes);
  return stem;
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p = dir.empty() ? std::filesystem::path(".") : std::filesystem::path(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw UsageError("cannot create output directory " + p.string());
  return p;
}

struct Context {
  SymmetrySpec spec;
  std::uint64_t seed = 1;
  Tolerance tol;
  std::string out_dir;
  std::string in_file;
};

json report_header(const std::string& command, const Context& c) {
  return json{{"command", command},
              {"spec", json::parse(spec_to_json(c.spec))},
              {"seed", c.seed},
              {"tol", c.tol.eps}};
}

int cmd_decompose(const Context& c, std::ostream& out) {
  const Model m = build_model(c.spec, c.seed, c.tol);
  json r = report_header("decompose", c);
  r["decomposition"] = m.decomposition;
  out << r.dump(2) << "\n";
  return kOk;
}

int cmd_extremes(const Context& c, std::ostream& out) {
  const Model m = build_model(c.spec, c.seed, c.tol);
  const auto dir = prepare_out_dir(c.out_dir);
  json r = report_header("extremes", c);
  json list = json::array();
  for (std::size_t i = 0; i < m.extremes.size(); ++i) {
    const auto& e = m.extremes[i];
    const auto path = dir / (file_stem(c.spec) + "_extreme" + std::to_string(i + 1) + ".json");
    write_channel_file(path.string(), e.channel);
    const Verdict v = m.verify(e.channel);
    list.push_back(json{{"label", e.label}, {"file", path.string()}, {"flags", flags_json(m, e.channel, c.tol)},
                        {"covariant", v.covariant}, {"verification", v.detail}});
  }
  r["count"] = m.extremes.size();
  r["extremes"] = std::move(list);
  out << r.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const Context& c, std::ostream& out) {
  if (c.in_file.empty()) throw UsageError("verify needs --in FILE");
  const Channel ch = read_channel_file(c.in_file);
  const Model m = build_model(c.spec, c.seed, c.tol);
  if (ch.in_dim != m.in_dim || ch.out_dim != m.out_dim)
    throw UsageError("channel dimensions (" + std::to_string(ch.in_dim) + ", " + std::to_string(ch.out_dim) +
                     ") do not match the spec (" + std::to_string(m.in_dim) + ", " + std::to_string(m.out_dim) + ")");
  const Verdict v = m.verify(ch);
  json r = report_header("verify", c);
  r["file"] = c.in_file;
  r["flags"] = flags_json(m, ch, c.tol);
  r["covariant"] = v.covariant;
  r["verification"] = v.detail;
  out << r.dump(2) << "\n";
  return v.covariant ? kOk : kNotCovariant;
}

int cmd_sample(const Context& c, std::ostream& out) {
  const Model m = build_model(c.spec, c.seed, c.tol);
  Rng rng(c.seed);
  const std::vector<double> w = rng.dirichlet(m.extremes.size());
  std::vector<Channel> chans;
  for (const auto& e : m.extremes) chans.push_back(e.channel);
  const Channel ch = convex_mix(chans, w, c.tol);
  const auto dir = prepare_out_dir(c.out_dir);
  const auto path = dir / (file_stem(c.spec) + "_sample_seed" + std::to_string(c.seed) + ".json");
  write_channel_file(path.string(), ch);
  // Re-verify what was written, not the in-memory value.
  const Verdict v = m.verify(read_channel_file(path.string()));
  json r = report_header("sample", c);
  r["file"] = path.string();
  json weights = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) weights.push_back(json{{"label", m.extremes[i].label}, {"weight", w[i]}});
  r["weights"] = std::move(weights);
  r["flags"] = flags_json(m, ch, c.tol);
  r["covariant"] = v.covariant;
  r["verification"] = v.detail;
  out << r.dump(2) << "\n";
  return kOk;
}

int cmd_report(const Context& c, std::ostream& out) {
  const Model m = build_model(c.spec, c.seed, c.tol);
  json r = report_header("report", c);
  r["decomposition"] = m.decomposition;
  json list = json::array();
  for (const auto& e : m.extremes) {
    const Verdict v = m.verify(e.channel);
    list.push_back(json{{"label", e.label}, {"flags", flags_json(m, e.channel, c.tol)}, {"covariant", v.covariant},
                        {"verification", v.detail}, {"channel", channel_json(e.channel)}});
  }
  r["count"] = m.extremes.size();
  r["extremes"] = std::move(list);
  const std::string text = r.dump(2);
  if (!c.out_dir.empty()) {
    const auto path = prepare_out_dir(c.out_dir) / (file_stem(c.spec) + "_report.json");
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path.string());
    f << text << "\n";
  }
  out << text << "\n";
  return kOk;
}

double tolerance_from_env() {
  const char* env = std::getenv("COVKIT_TOL");
  if (env == nullptr || *env == '\0') return 1e-9;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0') throw UsageError(std::string("COVKIT_TOL is not a number: ") + env);
  return v;
}

}  // namespace

SymmetrySpec parse_spec_json(const std::string& text) {
  SymmetrySpec s;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.contains("group")) s.group = j.at("group").get<std::string>();
    else s.group = j.at("type").get<std::string>();
    if (j.contains("n")) s.n = j.at("n").get<int>();
    if (j.contains("q")) s.q = j.at("q").get<double>();
    if (j.contains("k")) s.k = j.at("k").get<int>();
    if (j.contains("l")) s.l = j.at("l").get<int>();
    if (j.contains("orders")) s.orders = j.at("orders").get<std::vector<int>>();
    if (j.contains("modes")) s.modes = j.at("modes").get<int>();
    if (j.contains("gens")) s.gens = j.at("gens").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed spec JSON: ") + e.what());
  }
  validate(s);
  return s;
}

std::string spec_to_json(const SymmetrySpec& s) {
  json j{{"group", s.group}};
  if (s.group == "symmetric" || s.group == "symmetric_plus") j["n"] = s.n;
  if (s.group == "suq2") {
    j["q"] = s.q;
    j["k"] = s.k;
    j["l"] = s.l;
  }
  if (s.group == "weyl") j["orders"] = s.orders;
  if (s.group == "fermionic") j["modes"] = s.modes;
  if (s.group == "perm_gens") {
    j["n"] = s.n;
    j["gens"] = s.gens;
  }
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"covkit: covariant quantum channel toolkit"};
  std::string command, spec_file;
  Context c;
  SymmetrySpec& s = c.spec;
  double tol = 0.0;
  app.add_option("command", command, "decompose | extremes | verify | sample | report")
      ->required()
      ->check(CLI::IsMember({"decompose", "extremes", "verify", "sample", "report"}));
  auto* group_opt = app.add_option("--group", s.group, "symmetric | symmetric_plus | suq2 | weyl | fermionic | perm_gens");
  auto* n_opt = app.add_option("--n", s.n, "permutation degree");
  auto* q_opt = app.add_option("--q", s.q, "deformation parameter in (0, 1)");
  auto* k_opt = app.add_option("--k", s.k, "input label");
  auto* l_opt = app.add_option("--l", s.l, "output label");
  app.add_option("--orders", s.orders, "cyclic orders, e.g. 2,2")->delimiter(',');
  auto* modes_opt = app.add_option("--modes", s.modes, "fermionic modes");
  app.add_option("--seed", c.seed, "random seed");
  auto* tol_opt = app.add_option("--tol", tol, "tolerance (overrides COVKIT_TOL)");
  app.add_option("--out", c.out_dir, "output directory");
  app.add_option("--in", c.in_file, "input channel JSON");
  auto* spec_opt = app.add_option("--spec", spec_file, "symmetry spec JSON file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    c.tol = Tolerance(tol_opt->count() ? tol : tolerance_from_env());
    if (spec_opt->count()) {
      if (group_opt->count()) throw UsageError("use either --spec or --group, not both");
      std::ifstream f(spec_file);
      if (!f) throw UsageError("cannot open spec file " + spec_file);
      std::stringstream ss;
      ss << f.rdbuf();
      s = parse_spec_json(ss.str());
    } else {
      if (!group_opt->count()) throw UsageError("--group (or --spec) is required");
      auto need = [](CLI::Option* o, const char* flag, const std::string& group) {
        if (!o->count()) throw UsageError(std::string(flag) + " is required for " + group);
      };
      if (s.group == "symmetric" || s.group == "symmetric_plus") need(n_opt, "--n", s.group);
      if (s.group == "suq2") {
        need(q_opt, "--q", s.group);
        need(k_opt, "--k", s.group);
        need(l_opt, "--l", s.group);
      }
      if (s.group == "fermionic") need(modes_opt, "--modes", s.group);
      if (s.group == "perm_gens") throw UsageError("perm_gens needs --spec FILE with the generators");
      validate(s);
    }
    if (command == "decompose") return cmd_decompose(c, out);
    if (command == "extremes") return cmd_extremes(c, out);
    if (command == "verify") return cmd_verify(c, out);
    if (command == "sample") return cmd_sample(c, out);
    return cmd_report(c, out);
  } catch (const MultiplicityDetected& e) {
    err << "multiplicity: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NullSpaceDimension& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DecompositionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DegenerateCharacters& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace covkit::cli
