// Command-line front end: exact and Monte-Carlo probability evaluation,
// one-shot masking demos, end-to-end memory simulation campaigns, BCH
// construction, and the length-114 rate comparison.
//
// Exit codes: 0 success, 1 validation error, 2 a computed value disagrees
// with the embedded reference figures.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdmc/channel.hpp"
#include "pdmc/comparison.hpp"
#include "pdmc/experiment.hpp"
#include "pdmc/io.hpp"
#include "pdmc/prob.hpp"
#include "pdmc/schemes.hpp"

using njson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

int emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out_path << "\n";
    return 1;
  }
  f << payload;
  return 0;
}

std::vector<std::size_t> parse_index_list(const std::string& csv) {
  std::vector<std::size_t> out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<std::size_t>(std::stoull(item)));
  return out;
}

pdmc::Vec parse_label_list(const std::string& csv) {
  pdmc::Vec out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<pdmc::Label>(std::stoul(item)));
  return out;
}

njson labels_json(const pdmc::Vec& v) {
  njson a = njson::array();
  for (auto x : v) a.push_back(static_cast<unsigned>(x));
  return a;
}

njson indices_json(const std::vector<std::size_t>& v) {
  njson a = njson::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string csv_labels(const pdmc::Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ";";
    s += std::to_string(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Scheme assembly shared by `mask` and `simulate`.

struct SchemeOptions {
  std::string construction = "c1";
  std::string field_spec = "5";
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t u = 0;
  std::size_t t = 0;
  std::string host;         // "plain" | "rs" | "bch:b,delta" | "file:path"
  std::string scheme_file;  // JSON descriptor; overrides the flags above
};

pdmc::LinearCode host_from_string(const std::string& host, pdmc::FieldPtr field,
                                  std::size_t n, std::size_t r,
                                  std::optional<pdmc::BchCode>& bch_out) {
  if (host == "rs") return pdmc::rs_code(field, n, n - r);
  if (host == "rep") return pdmc::repetition_code(field, n);
  if (host.rfind("bch:", 0) == 0) {
    const auto params = parse_index_list(host.substr(4));
    if (params.size() != 2)
      throw pdmc::BadParamsError("expected --host bch:b,delta");
    const std::uint32_t p = field->characteristic();
    std::uint32_t m = 1;
    std::uint64_t pm = p;
    while ((pm - 1) % n != 0) {
      pm *= p;
      ++m;
      if (pm > pdmc::Field::kMaxOrder)
        throw pdmc::OrderMismatchError("n never divides p^m - 1 at desk scale");
    }
    pdmc::BchCode bch = pdmc::bch_build(p, m, n, params[0], params[1]);
    bch_out = bch;
    return bch.code;
  }
  if (host.rfind("file:", 0) == 0) {
    pdmc::CodeDescription desc = pdmc::read_code_file(host.substr(5));
    if (desc.bch) bch_out = desc.bch;
    return desc.code;
  }
  throw pdmc::BadParamsError("unknown host spec: " + host);
}

pdmc::SchemeBundle build_bundle(const SchemeOptions& opt) {
  using pdmc::Construction;
  pdmc::SchemeBundle bundle;

  if (!opt.scheme_file.empty()) {
    std::ifstream in(opt.scheme_file);
    if (!in) throw pdmc::BadParamsError("cannot open " + opt.scheme_file);
    njson desc = njson::parse(in);
    const std::string tag = desc.at("construction").get<std::string>();
    const auto kind = pdmc::parse_construction(tag);
    if (!kind) throw pdmc::BadParamsError("unknown construction: " + tag);
    bundle.kind = *kind;
    pdmc::CodeDescription host =
        pdmc::read_code_file(desc.at("host_code").get<std::string>());
    switch (*kind) {
      case Construction::c1:
      case Construction::c1_cor:
      case Construction::baseline:
        bundle.c1 = std::make_shared<pdmc::Construction1Scheme>(
            host.bch ? pdmc::Construction1Scheme::from_bch(*host.bch)
                     : pdmc::Construction1Scheme::from_code(host.code));
        break;
      case Construction::c2: {
        pdmc::MatrixFq hmask = pdmc::read_matrix_file(
            desc.at("masking_matrix").get<std::string>());
        bundle.block = std::make_shared<pdmc::BlockMaskScheme>(
            pdmc::BlockMaskScheme::construction2(host.code, hmask));
        break;
      }
      case Construction::c3: {
        pdmc::MatrixFq h0 = pdmc::read_matrix_file(
            desc.at("masking_matrix").get<std::string>());
        std::optional<std::size_t> d0;
        if (desc.contains("d0")) d0 = desc.at("d0").get<std::size_t>();
        bundle.block = std::make_shared<pdmc::BlockMaskScheme>(
            pdmc::BlockMaskScheme::construction3(
                host.code, h0, desc.at("u").get<std::size_t>(), d0));
        break;
      }
      case Construction::prop3:
        bundle.prop3 = std::make_shared<pdmc::Prop3Scheme>(
            host.bch ? pdmc::Prop3Scheme(*host.bch, desc.at("u").get<std::size_t>(),
                                         desc.at("t").get<std::size_t>())
                     : pdmc::Prop3Scheme(host.code, desc.at("u").get<std::size_t>(),
                                         desc.at("t").get<std::size_t>()));
        break;
    }
    return bundle;
  }

  const auto kind = pdmc::parse_construction(opt.construction);
  if (!kind) throw pdmc::BadParamsError("unknown construction: " + opt.construction);
  bundle.kind = *kind;
  pdmc::FieldPtr field = pdmc::parse_field_spec(opt.field_spec);
  if (opt.n == 0) throw pdmc::BadParamsError("--n is required");

  std::string host = opt.host;
  if (host.empty()) {
    if (*kind == Construction::prop3)
      host = "rs";
    else
      host = opt.t == 0 ? "plain" : "rs";
  }

  switch (*kind) {
    case Construction::c1:
    case Construction::c1_cor:
    case Construction::baseline: {
      if (host == "plain") {
        bundle.c1 = std::make_shared<pdmc::Construction1Scheme>(
            pdmc::Construction1Scheme::plain(field, opt.n, opt.r));
      } else {
        std::optional<pdmc::BchCode> bch;
        pdmc::LinearCode code = host_from_string(host, field, opt.n, opt.r, bch);
        bundle.c1 = std::make_shared<pdmc::Construction1Scheme>(
            bch ? pdmc::Construction1Scheme::from_bch(*bch)
                : pdmc::Construction1Scheme::from_code(code));
      }
      break;
    }
    case Construction::prop3: {
      std::optional<pdmc::BchCode> bch;
      pdmc::LinearCode code = host_from_string(host, field, opt.n, opt.r, bch);
      bundle.prop3 = std::make_shared<pdmc::Prop3Scheme>(
          bch ? pdmc::Prop3Scheme(*bch, opt.u, opt.t)
              : pdmc::Prop3Scheme(code, opt.u, opt.t));
      break;
    }
    case Construction::c2:
    case Construction::c3:
      throw pdmc::BadParamsError(
          "constructions c2/c3 need --scheme with a descriptor file");
  }
  return bundle;
}

// ---------------------------------------------------------------------------
// prob

int cmd_prob(const std::string& kind, std::size_t n, std::size_t u,
             std::size_t t, std::size_t q, bool with_mc, std::uint64_t trials,
             std::uint64_t seed, const std::string& model_str,
             const std::string& format, const std::string& out_path) {
  pdmc::Rational exact;
  njson extra;
  pdmc::McConfig mc_cfg;
  mc_cfg.trials = trials;
  mc_cfg.seed = seed;
  if (model_str == "uniform")
    mc_cfg.model = pdmc::ZeroModel::uniform_q;
  else if (model_str == "mag1")
    mc_cfg.model = pdmc::ZeroModel::mag1;
  else
    throw pdmc::BadParamsError("unknown model: " + model_str);

  if (kind == "overlap") {
    mc_cfg.kind = pdmc::McKind::overlap;
    exact = pdmc::p_overlap(n, u, t);
  } else if (kind == "zero-overlap") {
    mc_cfg.kind = pdmc::McKind::zero_overlap;
    exact = pdmc::p_zero_overlap(n, u, t, q);
    if (mc_cfg.model == pdmc::ZeroModel::mag1)
      extra["model_note"] =
          "mag1 model fixes e to the full error value; with c uniform the "
          "prediction stays 1/q";
  } else if (kind == "mask-consecutive") {
    mc_cfg.kind = pdmc::McKind::mask_consecutive;
    exact = pdmc::p_mask_consecutive(q, u);
    // The closed form and the event enumeration are reported side by side;
    // they are not the same quantity for every (q, u).
    try {
      const pdmc::Rational enumerated = pdmc::mask_consecutive_enumerated(q, u);
      extra["enumeration_num"] = enumerated.num().to_string();
      extra["enumeration_den"] = enumerated.den().to_string();
      extra["enumeration"] = enumerated.to_double();
      extra["formula_matches_enumeration"] = enumerated == exact;
    } catch (const pdmc::TooLargeForExhaustiveError&) {
      extra["enumeration"] = nullptr;
    }
  } else {
    throw pdmc::BadParamsError("unknown kind: " + kind);
  }

  std::optional<pdmc::McResult> mc;
  if (with_mc) {
    pdmc::McParams params{n, u, t, q};
    mc = pdmc::mc_estimate(mc_cfg, params);
  }

  if (format == "json") {
    njson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "prob";
    j["kind"] = kind;
    j["params"] = njson{{"n", n}, {"u", u}, {"t", t}, {"q", q},
                        {"model", model_str}};
    j["exact_num"] = exact.num().to_string();
    j["exact_den"] = exact.den().to_string();
    j["exact"] = exact.to_double();
    for (auto& [key, value] : extra.items()) j[key] = value;
    j["estimate"] = mc ? njson(mc->estimate) : njson(nullptr);
    j["stderr"] = mc ? njson(mc->stderr_) : njson(nullptr);
    j["trials"] = mc ? njson(mc->trials) : njson(nullptr);
    j["seed"] = mc ? njson(mc->seed) : njson(nullptr);
    return emit(out_path, j.dump(2) + "\n");
  }
  std::ostringstream csv;
  csv << "kind,n,u,t,q,model,exact_num,exact_den,exact,estimate,stderr,trials,seed\n";
  csv << kind << "," << n << "," << u << "," << t << "," << q << ","
      << model_str << "," << exact.num().to_string() << ","
      << exact.den().to_string() << "," << exact.to_double() << ",";
  if (mc)
    csv << mc->estimate << "," << mc->stderr_ << "," << mc->trials << ","
        << mc->seed;
  else
    csv << ",,,";
  csv << "\n";
  return emit(out_path, csv.str());
}

// ---------------------------------------------------------------------------
// mask

int cmd_mask(const SchemeOptions& opt, const std::string& phi_csv,
             const std::string& message_csv, pdmc::Label x, std::uint64_t seed,
             const std::string& format, const std::string& out_path) {
  pdmc::SchemeBundle bundle = build_bundle(opt);
  const std::size_t n = bundle.n();
  const std::uint32_t q = bundle.field()->order();

  pdmc::Rng rng(seed);
  std::vector<std::size_t> phi = phi_csv.empty()
                                     ? pdmc::sample_subset(rng, n, opt.u)
                                     : parse_index_list(phi_csv);
  pdmc::Vec m;
  if (message_csv.empty()) {
    m.resize(bundle.message_length());
    for (auto& v : m) v = static_cast<pdmc::Label>(pdmc::bounded(rng, q));
  } else {
    m = parse_label_list(message_csv);
  }

  njson j;
  j["schema"] = kSchemaVersion;
  j["command"] = "mask";
  j["params"] = njson{{"construction", pdmc::construction_name(bundle.kind)},
                      {"field", bundle.field()->spec_string()},
                      {"n", n},
                      {"x", static_cast<unsigned>(x)},
                      {"seed", seed}};
  j["phi"] = indices_json(phi);
  j["message"] = labels_json(m);

  pdmc::Vec c;
  pdmc::Vec z;
  bool feasible = true;
  std::string failure;
  try {
    switch (bundle.kind) {
      case pdmc::Construction::c1:
      case pdmc::Construction::baseline: {
        auto word = bundle.c1->encode(m, phi, pdmc::Construction1Scheme::Mode::guaranteed, x);
        c = word.c;
        z = word.z;
        break;
      }
      case pdmc::Construction::c1_cor: {
        auto word = bundle.c1->encode(m, phi, pdmc::Construction1Scheme::Mode::extended, x);
        c = word.c;
        z = word.z;
        break;
      }
      case pdmc::Construction::c2:
      case pdmc::Construction::c3: {
        auto word = bundle.block->encode(m, phi, x);
        c = word.c;
        z = word.z;
        break;
      }
      case pdmc::Construction::prop3:
        c = bundle.prop3->encode(m, phi);
        break;
    }
  } catch (const pdmc::MaskingInfeasibleError& e) {
    feasible = false;
    failure = e.what();
  } catch (const pdmc::BlockTooLongError& e) {
    feasible = false;
    failure = e.what();
  } catch (const pdmc::NotBlockStaircaseError& e) {
    feasible = false;
    failure = e.what();
  }

  j["feasible"] = feasible;
  if (!feasible) {
    j["error"] = failure;
  } else {
    j["z"] = labels_json(z);
    j["codeword"] = labels_json(c);
    njson trace = njson::array();
    bool all_ok = true;
    for (std::size_t i : phi) {
      const unsigned label = c[i];
      const bool ok = bundle.kind == pdmc::Construction::prop3
                          ? label >= 1
                          : label >= 1 && label <= q - 1 - x;
      all_ok = all_ok && ok;
      trace.push_back(njson{{"position", i}, {"label", label}, {"ok", ok}});
    }
    j["stuck_labels"] = trace;
    j["constraint_ok"] = all_ok;
  }

  if (format == "json") return emit(out_path, j.dump(2) + "\n");
  std::ostringstream csv;
  csv << "feasible,phi,message,z,codeword\n";
  csv << (feasible ? "1" : "0") << ",";
  std::string phis;
  for (std::size_t i = 0; i < phi.size(); ++i)
    phis += (i ? ";" : "") + std::to_string(phi[i]);
  csv << phis << "," << csv_labels(m) << "," << csv_labels(z) << ","
      << csv_labels(c) << "\n";
  return emit(out_path, csv.str());
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const SchemeOptions& opt, pdmc::Label x, std::uint64_t trials,
                 std::uint64_t seed, const std::string& trace_path,
                 const std::string& format, const std::string& out_path) {
  pdmc::SchemeBundle bundle = build_bundle(opt);
  pdmc::SimulatorConfig cfg;
  cfg.u = opt.u;
  cfg.t = opt.t;
  cfg.x = x;
  cfg.trials = trials;
  cfg.seed = seed;

  std::ofstream trace;
  pdmc::TraceSink sink;
  if (!trace_path.empty()) {
    trace.open(trace_path, std::ios::binary);
    if (!trace) throw pdmc::BadParamsError("cannot open " + trace_path);
    sink = [&trace](const pdmc::TrialTrace& t) {
      njson line{{"trial", t.index},
                 {"phi", indices_json(t.phi)},
                 {"psi", indices_json(t.psi)},
                 {"word", labels_json(t.word)},
                 {"y", labels_json(t.y)},
                 {"hazard", t.hazard},
                 {"decoded_ok", t.decoded_ok}};
      trace << line.dump() << "\n";
    };
  }

  const pdmc::TrialReport report = pdmc::run_trials(bundle, cfg, sink);
  std::cerr << "timing: mean " << report.mean_trial_usec << " us/trial\n";

  if (format == "json") {
    njson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "simulate";
    j["params"] = njson{{"construction", pdmc::construction_name(bundle.kind)},
                        {"field", bundle.field()->spec_string()},
                        {"n", bundle.n()},
                        {"r", opt.r},
                        {"u", opt.u},
                        {"t", opt.t},
                        {"x", static_cast<unsigned>(x)},
                        {"trials", trials},
                        {"seed", seed},
                        {"host", opt.scheme_file.empty() ? opt.host : "scheme-file"}};
    j["report"] = njson{{"trials", report.trials},
                        {"successes", report.successes},
                        {"masking_failures", report.masking_failures},
                        {"decode_failures", report.decode_failures},
                        {"hazard_count", report.hazard_count}};
    return emit(out_path, j.dump(2) + "\n");
  }
  std::ostringstream csv;
  csv << "construction,field,n,r,u,t,x,trials,seed,successes,masking_failures,"
         "decode_failures,hazard_count\n";
  csv << pdmc::construction_name(bundle.kind) << ","
      << bundle.field()->spec_string() << "," << bundle.n() << "," << opt.r
      << "," << opt.u << "," << opt.t << "," << static_cast<unsigned>(x) << ","
      << trials << "," << seed << "," << report.successes << ","
      << report.masking_failures << "," << report.decode_failures << ","
      << report.hazard_count << "\n";
  return emit(out_path, csv.str());
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const std::string& format, const std::string& out_path) {
  const pdmc::ComparisonReport rep = pdmc::run_rate_comparison();

  auto column_json = [](const pdmc::ComparisonColumn& c) {
    return njson{{"n", c.n},
                 {"k", c.k},
                 {"designed_d", c.designed_d},
                 {"b", c.b},
                 {"achieved", c.achieved},
                 {"best_k", c.best_k},
                 {"rate_num", c.rate.num().to_string()},
                 {"rate_den", c.rate.den().to_string()},
                 {"rate", c.rate.to_double()}};
  };

  if (format == "json") {
    njson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "compare";
    j["direct"] = column_json(rep.direct);
    j["masked"] = column_json(rep.masked);
    j["masking_cost_num"] = rep.masking_cost.num().to_string();
    j["masking_cost_den"] = rep.masking_cost.den().to_string();
    j["masking_cost"] = rep.masking_cost.to_double();
    j["adjusted_rate_num"] = rep.adjusted_rate.num().to_string();
    j["adjusted_rate_den"] = rep.adjusted_rate.den().to_string();
    j["adjusted_rate"] = rep.adjusted_rate.to_double();
    j["rates_equal"] = rep.rates_equal;
    j["direct_capability"] = rep.direct_capability;
    j["masked_u"] = rep.masked_u;
    j["masked_t"] = rep.masked_t;
    j["notes"] = rep.notes;
    j["discrepancy"] = rep.discrepancy;
    const int rc = emit(out_path, j.dump(2) + "\n");
    return rc != 0 ? rc : (rep.discrepancy ? 2 : 0);
  }
  std::ostringstream csv;
  csv << "column,n,k,designed_d,b,rate_num,rate_den,rate,capability\n";
  csv << "direct," << rep.direct.n << "," << rep.direct.k << ","
      << rep.direct.designed_d << "," << rep.direct.b << ","
      << rep.direct.rate.num().to_string() << ","
      << rep.direct.rate.den().to_string() << "," << rep.direct.rate.to_double()
      << "," << rep.direct_capability << "\n";
  csv << "masked," << rep.masked.n << "," << rep.masked.k << ","
      << rep.masked.designed_d << "," << rep.masked.b << ","
      << rep.masked.rate.num().to_string() << ","
      << rep.masked.rate.den().to_string() << "," << rep.masked.rate.to_double()
      << "," << rep.masked_u + rep.masked_t << "\n";
  csv << "adjusted,,,,," << rep.adjusted_rate.num().to_string() << ","
      << rep.adjusted_rate.den().to_string() << ","
      << rep.adjusted_rate.to_double() << ",\n";
  const int rc = emit(out_path, csv.str());
  return rc != 0 ? rc : (rep.discrepancy ? 2 : 0);
}

// ---------------------------------------------------------------------------
// bch

int cmd_bch(std::uint32_t p, std::uint32_t m, std::size_t n, long long b,
            std::size_t delta, bool search, const std::string& format,
            const std::string& out_path) {
  std::size_t offset = 0;
  std::size_t best_k = 0;
  if (search || b < 0) {
    const auto found = pdmc::bch_best_offset(p, m, n, delta);
    offset = found.best_b;
    best_k = found.best_k;
  } else {
    offset = static_cast<std::size_t>(b);
  }
  const pdmc::BchCode bch = pdmc::bch_build(p, m, n, offset, delta);
  if (best_k == 0) best_k = bch.code.k;

  if (format == "json") {
    njson j;
    j["schema"] = kSchemaVersion;
    j["command"] = "bch";
    j["p"] = p;
    j["m"] = m;
    j["n"] = n;
    j["b"] = offset;
    j["delta"] = delta;
    j["k"] = bch.code.k;
    j["designed_d"] = delta;
    j["generator"] = labels_json(bch.spec.g);
    return emit(out_path, j.dump(2) + "\n");
  }
  std::ostringstream csv;
  csv << "p,m,n,b,delta,k,generator\n";
  csv << p << "," << m << "," << n << "," << offset << "," << delta << ","
      << bch.code.k << "," << csv_labels(bch.spec.g) << "\n";
  return emit(out_path, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stuck-at masking codes with magnitude-1 error correction"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path);

  // prob
  auto* prob = app.add_subcommand("prob", "exact and Monte-Carlo probabilities");
  std::string prob_kind = "overlap";
  std::size_t pn = 0, pu = 0, pt = 0, pq = 3;
  bool with_mc = false;
  std::uint64_t trials = 100000, seed = 0;
  std::string model = "uniform";
  prob->add_option("--kind", prob_kind)
      ->check(CLI::IsMember({"overlap", "zero-overlap", "mask-consecutive"}));
  prob->add_option("--n", pn);
  prob->add_option("--u", pu);
  prob->add_option("--t", pt);
  prob->add_option("--q", pq);
  prob->add_flag("--mc", with_mc);
  prob->add_option("--trials", trials);
  prob->add_option("--seed", seed);
  prob->add_option("--model", model)->check(CLI::IsMember({"uniform", "mag1"}));

  // shared scheme options
  SchemeOptions opt;
  pdmc::Label x = 1;
  auto add_scheme_flags = [&](CLI::App* cmd) {
    cmd->add_option("--construction", opt.construction)
        ->check(CLI::IsMember({"c1", "c1-cor", "c2", "c3", "prop3", "baseline"}));
    cmd->add_option("--field", opt.field_spec);
    cmd->add_option("--n", opt.n);
    cmd->add_option("--r", opt.r);
    cmd->add_option("--u", opt.u);
    cmd->add_option("--t", opt.t);
    cmd->add_option("--x", x);
    cmd->add_option("--host", opt.host);
    cmd->add_option("--scheme", opt.scheme_file);
  };

  // mask
  auto* mask = app.add_subcommand("mask", "one-shot encode demo");
  std::string phi_csv, message_csv;
  std::uint64_t mask_seed = 0;
  add_scheme_flags(mask);
  mask->add_option("--phi", phi_csv);
  mask->add_option("--message", message_csv);
  mask->add_option("--seed", mask_seed);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "seeded trial campaign");
  std::uint64_t sim_trials = 10000, sim_seed = 0;
  std::string trace_path;
  add_scheme_flags(simulate);
  simulate->add_option("--trials", sim_trials);
  simulate->add_option("--seed", sim_seed);
  simulate->add_option("--trace", trace_path);

  // compare
  app.add_subcommand("compare", "length-114 rate comparison");

  // bch
  auto* bch = app.add_subcommand("bch", "construct a BCH code");
  std::uint32_t bp = 7, bm = 3;
  std::size_t bn = 114, bdelta = 79;
  long long bb = -1;
  bool bsearch = false;
  bch->add_option("--p", bp);
  bch->add_option("--m", bm);
  bch->add_option("--n", bn);
  bch->add_option("--b", bb);
  bch->add_option("--delta", bdelta);
  bch->add_flag("--search", bsearch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (prob->parsed())
      return cmd_prob(prob_kind, pn, pu, pt, pq, with_mc, trials, seed, model,
                      format, out_path);
    if (mask->parsed())
      return cmd_mask(opt, phi_csv, message_csv, x, mask_seed, format, out_path);
    if (simulate->parsed())
      return cmd_simulate(opt, x, sim_trials, sim_seed, trace_path, format,
                          out_path);
    if (app.get_subcommand("compare")->parsed())
      return cmd_compare(format, out_path);
    if (bch->parsed())
      return cmd_bch(bp, bm, bn, bb, bdelta, bsearch, format, out_path);
  } catch (const pdmc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
