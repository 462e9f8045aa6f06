// chanorder: decide input-degradedness and input-equivalence between finite
// channels, compute class invariants, and run the seeded verification
// suites. File formats are canonical JSON; see the README.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chanorder/coding.hpp"
#include "chanorder/games.hpp"
#include "chanorder/json_io.hpp"
#include "chanorder/ordering.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

namespace {

using chanorder::Json;

struct CliConfig {
  std::string format = "human";
  std::uint64_t seed = 0;
  bool seed_given = false;
  double feasibility_tol = 1e-9;
  double dedup_tol = 1e-9;
  double certificate_tol = 1e-7;
  std::uint64_t cap = chanorder::kDefaultEnumerationCap;

  chanorder::ToleranceConfig tolerances() const {
    chanorder::ToleranceConfig t;
    t.feasibility_tol = feasibility_tol;
    t.dedup_tol = dedup_tol;
    t.certificate_tol = certificate_tol;
    t.check();
    return t;
  }

  std::uint64_t resolve_seed() const {
    if (seed_given) return seed;
    if (const char* env = std::getenv("CHANORDER_SEED")) {
      return std::strtoull(env, nullptr, 10);
    }
    return seed;
  }
};

void emit(const CliConfig& cfg, const Json& result, const std::string& human) {
  if (cfg.format == "json") {
    std::cout << chanorder::canonical_dump(result);
  } else {
    std::cout << human << "\n";
  }
}

void emit_or_write(const CliConfig& cfg, const Json& result, const std::string& out_path,
                   const std::string& human) {
  if (!out_path.empty()) {
    chanorder::write_canonical_file(out_path, result);
    emit(cfg, Json{{"written", out_path}}, "wrote " + out_path);
  } else {
    emit(cfg, result, human);
  }
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

chanorder::Channel load_channel(const std::string& path) {
  return chanorder::channel_from_json(chanorder::read_json_file(path));
}

int fail(const CliConfig& cfg, const std::string& kind, const std::string& message, int code) {
  if (cfg.format == "json") {
    std::cout << chanorder::canonical_dump(Json{{"error", Json{{"kind", kind}, {"message", message}}}});
  } else {
    std::cerr << "error (" << kind << "): " << message << "\n";
  }
  return code;
}

}  // namespace

namespace {

int run(int argc, char** argv) {
  CLI::App app{"input-degradedness and input-equivalence toolkit for finite channels"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "json"}));
  auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for all random draws (fallback: CHANORDER_SEED)");
  app.add_option("--tol", cfg.feasibility_tol, "LP feasibility tolerance");
  app.add_option("--dedup-tol", cfg.dedup_tol, "duplicate-point tolerance");
  app.add_option("--cert-tol", cfg.certificate_tol, "certificate checking tolerance");
  app.add_option("--cap", cfg.cap, "enumeration cap for coding/game brute force");

  std::string lhs, rhs, in_path, out_path, decoder_path, prior_path, game_path, suite_name, kind;
  std::size_t n = 1, m = 1, gen_inputs = 2, gen_outputs = 2, gen_z = 2, trials = 20;

  auto* validate = app.add_subcommand("validate", "validate a channel file and normalize it");
  validate->add_option("--in", in_path)->required();
  validate->add_option("--out", out_path);

  auto* compose_cmd = app.add_subcommand("compose", "compose --lhs V --rhs W into V o W");
  compose_cmd->add_option("--lhs", lhs)->required();
  compose_cmd->add_option("--rhs", rhs)->required();
  compose_cmd->add_option("--out", out_path);

  auto* sum_cmd = app.add_subcommand("sum", "channel sum (block diagonal over tagged alphabets)");
  sum_cmd->add_option("--lhs", lhs)->required();
  sum_cmd->add_option("--rhs", rhs)->required();
  sum_cmd->add_option("--out", out_path);

  auto* product_cmd = app.add_subcommand("product", "channel product over paired alphabets");
  product_cmd->add_option("--lhs", lhs)->required();
  product_cmd->add_option("--rhs", rhs)->required();
  product_cmd->add_option("--out", out_path);

  auto* distance_cmd = app.add_subcommand("distance", "metric distance between equal-shape channels");
  distance_cmd->add_option("--lhs", lhs)->required();
  distance_cmd->add_option("--rhs", rhs)->required();

  auto* degraded_cmd = app.add_subcommand("degraded", "is --lhs input-degraded from --rhs?");
  degraded_cmd->add_option("--lhs", lhs)->required();
  degraded_cmd->add_option("--rhs", rhs)->required();

  auto* intertwiner_cmd = app.add_subcommand("intertwiner", "recover V' with lhs = rhs o V'");
  intertwiner_cmd->add_option("--lhs", lhs)->required();
  intertwiner_cmd->add_option("--rhs", rhs)->required();
  intertwiner_cmd->add_option("--out", out_path);

  auto* characteristic_cmd = app.add_subcommand("characteristic", "convex-extreme points of the row set");
  characteristic_cmd->add_option("--in", in_path)->required();
  characteristic_cmd->add_option("--out", out_path);

  auto* rank_cmd = app.add_subcommand("rank", "input-rank (size of the characteristic)");
  rank_cmd->add_option("--in", in_path)->required();

  auto* equivalent_cmd = app.add_subcommand("equivalent", "are the channels input-equivalent?");
  equivalent_cmd->add_option("--lhs", lhs)->required();
  equivalent_cmd->add_option("--rhs", rhs)->required();

  auto* similarity_cmd = app.add_subcommand("similarity", "similarity distance between equivalence classes");
  similarity_cmd->add_option("--lhs", lhs)->required();
  similarity_cmd->add_option("--rhs", rhs)->required();

  auto* capacity_cmd = app.add_subcommand("capacity", "channel capacity in nats");
  capacity_cmd->add_option("--in", in_path)->required();

  auto* pe_decoder_cmd = app.add_subcommand("pe-decoder", "error probability of a decoder under ML encoding");
  pe_decoder_cmd->add_option("--channel", in_path)->required();
  pe_decoder_cmd->add_option("--decoder", decoder_path)->required();

  auto* pe_opt_cmd = app.add_subcommand("pe-opt", "optimal (n,M)-encoder error probability");
  pe_opt_cmd->add_option("--channel", in_path)->required();
  pe_opt_cmd->add_option("--n", n)->required();
  pe_opt_cmd->add_option("--M", m)->required();

  auto* pc_cmd = app.add_subcommand("pc", "optimal guessing probability for a fixed single-shot decoder");
  pc_cmd->add_option("--channel", in_path)->required();
  pc_cmd->add_option("--decoder", decoder_path)->required();
  pc_cmd->add_option("--prior", prior_path)->required();

  auto* game_opt_cmd = app.add_subcommand("game-opt", "optimal average payoff of a randomized game");
  game_opt_cmd->add_option("--game", game_path)->required();

  auto* game_region_cmd = app.add_subcommand("game-region", "vertices of the achievable payoff region");
  game_region_cmd->add_option("--game", game_path)->required();

  auto* check_bss_cmd = app.add_subcommand("check-bss", "sampled Blackwell-Sherman-Stein consistency check");
  check_bss_cmd->add_option("--lhs", lhs)->required();
  check_bss_cmd->add_option("--rhs", rhs)->required();
  check_bss_cmd->add_option("--trials", trials);

  auto* gen_cmd = app.add_subcommand("gen", "emit seeded random objects to files");
  gen_cmd->add_option("kind", kind, "channel | decoder | encoder | game")
      ->required()
      ->check(CLI::IsMember({"channel", "decoder", "encoder", "game"}));
  gen_cmd->add_option("--inputs", gen_inputs);
  gen_cmd->add_option("--outputs", gen_outputs);
  gen_cmd->add_option("--z", gen_z);
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--M", m);
  gen_cmd->add_option("--out", out_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
  verify_cmd->add_option("suite", suite_name, "geometry | channel | ordering | coding | games | all")
      ->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.seed_given = seed_opt->count() > 0;

  try {
    const chanorder::ToleranceConfig tol = cfg.tolerances();
    const std::uint64_t seed = cfg.resolve_seed();

    if (*validate) {
      const chanorder::Channel w = load_channel(in_path);
      emit_or_write(cfg, chanorder::channel_to_json(w), out_path,
                    "valid channel: " + std::to_string(w.input_size()) + " inputs, " +
                        std::to_string(w.output_size()) + " outputs");
    } else if (*compose_cmd) {
      const chanorder::Channel result = chanorder::compose(load_channel(lhs), load_channel(rhs));
      emit_or_write(cfg, chanorder::channel_to_json(result), out_path,
                    "composed channel: " + std::to_string(result.input_size()) + " inputs, " +
                        std::to_string(result.output_size()) + " outputs");
    } else if (*sum_cmd) {
      const chanorder::Channel result = chanorder::channel_sum(load_channel(lhs), load_channel(rhs));
      emit_or_write(cfg, chanorder::channel_to_json(result), out_path, "channel sum written");
    } else if (*product_cmd) {
      const chanorder::Channel result =
          chanorder::channel_product(load_channel(lhs), load_channel(rhs));
      emit_or_write(cfg, chanorder::channel_to_json(result), out_path, "channel product written");
    } else if (*distance_cmd) {
      const double d = chanorder::channel_distance(load_channel(lhs), load_channel(rhs));
      emit(cfg, Json{{"distance", d}}, fmt_double(d));
    } else if (*degraded_cmd) {
      const chanorder::DegradednessResult res =
          chanorder::is_input_degraded(load_channel(lhs), load_channel(rhs), tol);
      emit(cfg, chanorder::degradedness_to_json(res),
           res.degraded ? "degraded: yes" : "degraded: no (separating payoff found)");
    } else if (*intertwiner_cmd) {
      const chanorder::DegradednessResult res =
          chanorder::is_input_degraded(load_channel(lhs), load_channel(rhs), tol);
      if (!res.degraded) {
        return fail(cfg, "not_degraded", "lhs is not input-degraded from rhs", 2);
      }
      emit_or_write(cfg, chanorder::channel_to_json(*res.intertwiner), out_path,
                    "intertwiner recovered");
    } else if (*characteristic_cmd) {
      const chanorder::Characteristic ce = chanorder::characteristic(load_channel(in_path), tol);
      emit_or_write(cfg, chanorder::characteristic_to_json(ce), out_path,
                    "characteristic with " + std::to_string(ce.points.size()) + " points");
    } else if (*rank_cmd) {
      const std::size_t r = chanorder::input_rank(load_channel(in_path), tol);
      emit(cfg, Json{{"input_rank", r}}, std::to_string(r));
    } else if (*equivalent_cmd) {
      const bool eq = chanorder::is_input_equivalent(load_channel(lhs), load_channel(rhs), tol);
      emit(cfg, Json{{"equivalent", eq}}, eq ? "equivalent: yes" : "equivalent: no");
    } else if (*similarity_cmd) {
      const double d = chanorder::similarity_distance(load_channel(lhs), load_channel(rhs), tol);
      emit(cfg, Json{{"similarity", d}}, fmt_double(d));
    } else if (*capacity_cmd) {
      const double c = chanorder::capacity(load_channel(in_path), cfg.feasibility_tol);
      emit(cfg, Json{{"capacity_nats", c}}, fmt_double(c));
    } else if (*pe_decoder_cmd) {
      const chanorder::Decoder d = chanorder::decoder_from_json(chanorder::read_json_file(decoder_path));
      const double pe = chanorder::pe_decoder_ml(load_channel(in_path), d, cfg.cap);
      emit(cfg, Json{{"pe_decoder", pe}}, fmt_double(pe));
    } else if (*pe_opt_cmd) {
      const double pe = chanorder::pe_opt(load_channel(in_path), n, m, cfg.cap);
      emit(cfg, Json{{"pe_opt", pe}}, fmt_double(pe));
    } else if (*pc_cmd) {
      const Json prior_json = chanorder::read_json_file(prior_path);
      const chanorder::Distribution prior(prior_json.get<std::vector<double>>());
      const chanorder::PcResult res =
          chanorder::pc(prior, load_channel(in_path), load_channel(decoder_path));
      Json enc = Json::array();
      for (std::size_t x : res.encoder) enc.push_back(x + 1);
      emit(cfg, Json{{"value", res.value}, {"encoder", enc}}, fmt_double(res.value));
    } else if (*game_opt_cmd) {
      const chanorder::RandomizedGame g =
          chanorder::game_from_json(chanorder::read_json_file(game_path));
      const chanorder::OptimalPayoff opt = chanorder::optimal_average_payoff(g);
      Json strat = Json::array();
      for (std::size_t x : opt.strategy) strat.push_back(x + 1);
      emit(cfg, Json{{"value", opt.value}, {"strategy", strat}}, fmt_double(opt.value));
    } else if (*game_region_cmd) {
      const chanorder::RandomizedGame g =
          chanorder::game_from_json(chanorder::read_json_file(game_path));
      const auto vertices = chanorder::achievable_region_vertices(g, cfg.cap);
      emit(cfg, Json{{"vertices", vertices}},
           std::to_string(vertices.size()) + " region vertices");
    } else if (*check_bss_cmd) {
      const chanorder::BssReport report =
          chanorder::check_bss(load_channel(lhs), load_channel(rhs), trials, seed, cfg.cap, tol);
      emit(cfg, chanorder::bss_report_to_json(report),
           std::string(report.degraded ? "degraded pair; " : "refuted pair; ") +
               (report.passed ? "all checks passed" : "CHECK FAILED"));
      if (!report.passed) return 1;
    } else if (*gen_cmd) {
      Json j;
      if (kind == "channel") {
        j = chanorder::channel_to_json(chanorder::gen_random_channel(gen_inputs, gen_outputs, seed));
      } else if (kind == "decoder") {
        j = chanorder::decoder_to_json(chanorder::gen_random_decoder(gen_outputs, n, m, seed));
      } else if (kind == "encoder") {
        j = chanorder::encoder_to_json(chanorder::gen_random_encoder(gen_inputs, n, m, seed));
      } else {
        chanorder::Rng rng(seed);
        const chanorder::Channel w =
            chanorder::gen_random_channel(gen_inputs, gen_outputs, rng.next_u64());
        std::vector<std::vector<double>> payoff(gen_z, std::vector<double>(w.output_size()));
        for (auto& row : payoff) {
          for (double& v : row) v = rng.uniform(-1.0, 1.0);
        }
        j = chanorder::game_to_json(chanorder::RandomizedGame(gen_z, payoff, w));
      }
      chanorder::write_canonical_file(out_path, j);
      emit(cfg, Json{{"written", out_path}}, "wrote " + out_path);
    } else if (*verify_cmd) {
      const std::vector<chanorder::CheckResult> results = chanorder::run_suite(suite_name, seed);
      bool all = true;
      Json checks = Json::array();
      for (const chanorder::CheckResult& r : results) {
        all = all && r.passed;
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (cfg.format != "json") {
          std::cout << (r.passed ? "[ PASS ] " : "[ FAIL ] ") << r.name << " (" << r.detail << ")\n";
        }
      }
      if (cfg.format == "json") {
        std::cout << chanorder::canonical_dump(
            Json{{"suite", suite_name}, {"seed", seed}, {"passed", all}, {"checks", checks}});
      } else {
        std::cout << (all ? "suite passed" : "suite FAILED") << "\n";
      }
      if (!all) return 1;
    }
  } catch (const std::invalid_argument& e) {
    return fail(cfg, "invalid_input", e.what(), 2);
  } catch (const Json::exception& e) {
    return fail(cfg, "invalid_input", e.what(), 2);
  } catch (const std::exception& e) {
    return fail(cfg, "internal", e.what(), 2);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
