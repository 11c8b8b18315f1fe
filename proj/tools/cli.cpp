#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "anick/chains.hpp"
#include "anick/error.hpp"
#include "anick/groebner_comm.hpp"
#include "anick/groebner_nc.hpp"
#include "anick/hilbert.hpp"
#include "anick/presentation.hpp"
#include "anick/resolution.hpp"

namespace anick::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::vector<std::string> positional;
  int max_degree = 10;
  int max_level = 4;
  std::string format = "text";
  int bn = 0;
  int threads = 1;
  std::uint64_t block_budget = 40000;
};

struct Input {
  Presentation pres;
  std::vector<std::string> rest;  // positionals after the presentation
};

Input load(const RunConfig& cfg, std::istream& in) {
  Input r;
  std::vector<std::string> pos = cfg.positional;
  if (cfg.bn > 0) {
    r.pres = make_Bn(cfg.bn);
  } else if (cfg.bn < 0) {
    throw InputError("--bn needs a positive integer");
  } else {
    if (pos.empty()) throw InputError("no input: give a presentation file, '-' for stdin, or --bn N");
    std::string path = pos.front();
    pos.erase(pos.begin());
    std::stringstream buf;
    if (path == "-") {
      buf << in.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw InputError("cannot open '" + path + "'");
      buf << f.rdbuf();
    }
    try {
      r.pres = parse_presentation(buf.str());
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0) + " (in " + (path == "-" ? "<stdin>" : path) + ")",
                       e.line(), e.column());
    }
  }
  r.rest = pos;
  return r;
}

void check_bounds(const RunConfig& cfg) {
  if (cfg.max_degree < 1) throw InputError("--max-degree must be >= 1");
  if (cfg.max_level < 1) throw InputError("--max-level must be >= 1");
  if (cfg.threads < 1) throw InputError("--threads must be >= 1");
}

json strings(const std::vector<std::string>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

json scalar_list(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.get_den() == 1 ? json(s.get_str()) : json(s.get_str()));
  return a;
}

json int_list(const SeriesTrunc& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p()) {
      a.push_back(c.get_num().get_si());
    } else {
      a.push_back(c.get_str());
    }
  }
  return a;
}

NcGB nc_basis(const Presentation& p, int max_degree) {
  return nc_reduce_basis(nc_buchberger(p.nc_relations, p.ring, max_degree));
}

void emit(const RunConfig& cfg, std::ostream& out, const json& j, const std::string& text) {
  if (cfg.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int cmd_gb(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  const Presentation& p = input.pres;
  json j;
  std::ostringstream t;
  j["algebra"] = p.name;
  if (p.kind() == AlgebraKind::commutative) {
    CommGB gb = comm_reduce_basis(comm_buchberger(p.comm_relations));
    std::vector<std::string> b;
    for (const auto& g : gb.basis) b.push_back(g.to_string());
    j["kind"] = "commutative";
    j["basis"] = strings(b);
    j["complete_to_degree"] = nullptr;
    t << "reduced Groebner basis (" << b.size() << " elements):\n";
    for (const auto& s : b) t << "  " << s << "\n";
  } else {
    NcGB gb = nc_basis(p, cfg.max_degree);
    std::vector<std::string> b;
    for (const auto& g : gb.basis) b.push_back(g.to_string());
    j["kind"] = "noncommutative";
    j["basis"] = strings(b);
    j["complete_to_degree"] = gb.complete_to_degree;
    t << "reduced Groebner basis (" << b.size() << " elements, complete to degree " << gb.complete_to_degree
      << "):\n";
    for (const auto& s : b) t << "  " << s << "\n";
  }
  emit(cfg, out, j, t.str());
  return 0;
}

int cmd_nf(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  const Presentation& p = input.pres;
  if (input.rest.size() != 1) throw InputError("nf needs exactly one polynomial argument");
  const std::string& text = input.rest.front();
  json j;
  std::string nf;
  std::string shown;
  if (p.kind() == AlgebraKind::commutative) {
    CommPoly f = parse_comm_polynomial(p.ring, text);
    CommGB gb = comm_reduce_basis(comm_buchberger(p.comm_relations));
    shown = f.to_string();
    nf = comm_normal_form(f, gb.basis).to_string();
    j["input"] = shown;
    j["normal_form"] = nf;
    j["member"] = nf == "0";
    j["complete_to_degree"] = nullptr;
  } else {
    NcPoly f = parse_nc_polynomial(p.ring, text);
    if (f.degree() > cfg.max_degree)
      throw BoundError("polynomial of degree " + std::to_string(f.degree()) + " exceeds --max-degree " +
                       std::to_string(cfg.max_degree));
    NcGB gb = nc_basis(p, cfg.max_degree);
    shown = f.to_string();
    nf = NcReducer(gb).reduce(f).to_string();
    j["input"] = shown;
    j["normal_form"] = nf;
    j["member"] = nf == "0";
    j["complete_to_degree"] = gb.complete_to_degree;
  }
  std::string t = "normal form: " + nf + "\n" + "member: " + (nf == "0" ? "yes" : "no") + "\n";
  emit(cfg, out, j, t);
  return 0;
}

NcGB graded_basis(const Presentation& p, int max_degree) {
  if (p.kind() != AlgebraKind::noncommutative) throw InputError("this command needs a noncommutative presentation");
  return nc_basis(p, max_degree);
}

int cmd_chains(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  NcGB gb = graded_basis(input.pres, cfg.max_degree);
  ChainSet cs = enumerate_chains(gb.ring, gb.leading_words(), cfg.max_level, cfg.max_degree);
  const auto& ring = *gb.ring;
  json j;
  std::vector<std::string> F;
  for (const auto& w : cs.obstructions()) F.push_back(ring.render(w));
  j["obstructions"] = strings(F);
  j["max_level"] = cfg.max_level;
  j["max_degree"] = cfg.max_degree;
  json levels = json::array();
  std::ostringstream t;
  t << "obstructions (" << F.size() << "):";
  for (const auto& s : F) t << " " << s;
  t << "\n";
  auto counts = cs.counts();
  for (int n = -1; n <= cs.max_level(); ++n) {
    json lv;
    lv["level"] = n;
    json list = json::array();
    std::vector<std::string> words;
    for (const auto& c : cs.level(n)) {
      json e;
      e["word"] = ring.render(c.word);
      e["tail"] = ring.render(c.tail);
      e["degree"] = c.degree;
      list.push_back(e);
      words.push_back(ring.render(c.word));
    }
    lv["count"] = cs.size(n);
    lv["counts_by_degree"] = counts[static_cast<std::size_t>(n + 1)];
    lv["chains"] = list;
    levels.push_back(lv);
    if (n >= 1) {
      t << "C" << n << " (" << cs.size(n) << "):";
      for (const auto& s : words) t << " " << s;
      t << "\n";
    }
  }
  j["levels"] = levels;
  t << "counts by level:";
  for (int n = 1; n <= cs.max_level(); ++n) t << " " << cs.size(n);
  t << "\n";
  emit(cfg, out, j, t.str());
  return 0;
}

int cmd_hilbert(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  const Presentation& p = input.pres;
  p.require_homogeneous();
  int d = cfg.max_degree;
  json j;
  j["max_degree"] = d;
  std::ostringstream t;
  SeriesTrunc words;
  std::optional<SeriesTrunc> chains;
  if (p.kind() == AlgebraKind::commutative) {
    CommGB gb = comm_reduce_basis(comm_buchberger(p.comm_relations));
    words = hilbert_from_normal_words(gb, p.ring, d);
  } else {
    NcGB gb = nc_basis(p, d);
    words = hilbert_from_normal_words(gb, d);
    // level n chains have degree > n, so d + 1 levels always reach the horizon
    ChainSet cs = enumerate_chains(gb.ring, gb.leading_words(), d + 1, d);
    chains = hilbert_from_chains(cs, d);
  }
  j["normal_words"] = int_list(words);
  t << "normal words: " << words.to_string() << "\n";
  if (chains) {
    bool agree = *chains == words;
    j["chains"] = int_list(*chains);
    j["agree"] = agree;
    t << "chains:       " << chains->to_string() << "\n";
    t << "agreement:    " << (agree ? "true" : "false") << "\n";
  } else {
    j["chains"] = nullptr;
    j["agree"] = nullptr;
  }
  auto form = candidate_closed_form(words);
  if (form) {
    j["candidate_closed_form"] = form->to_string();
    t << "candidate closed form (unverified beyond degree " << d << "): " << form->to_string() << "\n";
  } else {
    j["candidate_closed_form"] = nullptr;
  }
  emit(cfg, out, j, t.str());
  return 0;
}

json matrix_json(const GradedMatrix& m) {
  json j;
  j["level"] = m.level;
  j["degree"] = m.degree;
  j["rows"] = strings(m.rows);
  j["cols"] = strings(m.cols);
  json e = json::array();
  for (const auto& [r, c, v] : m.entries) e.push_back(json::array({r, c, v.get_str()}));
  j["entries"] = e;
  return j;
}

int cmd_anick(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  const Presentation& p = input.pres;
  if (p.kind() != AlgebraKind::noncommutative) throw InputError("the resolution needs a noncommutative presentation");
  AnickResolution res(p, cfg.max_level, cfg.max_degree, cfg.threads);
  VerifyOptions opts;
  opts.threads = cfg.threads;
  opts.block_budget = cfg.block_budget;
  VerificationReport rep = verify_resolution(res, cfg.max_level, cfg.max_degree, opts);
  json j;
  json mats = json::array();
  for (const auto& m : differential_matrices(res)) mats.push_back(matrix_json(m));
  j["max_level"] = cfg.max_level;
  j["max_degree"] = cfg.max_degree;
  j["matrices"] = mats;
  json v;
  v["ok"] = rep.ok();
  v["dd_zero"] = rep.dd_zero;
  v["exact"] = rep.exact;
  v["leading_certificate"] = rep.leading_certificate;
  v["dd_checked"] = rep.dd_checked;
  v["kernel_checks"] = rep.kernel_checks;
  v["kernel_failures"] = rep.kernel_failures;
  v["eliminated_blocks"] = rep.eliminated_blocks;
  v["pivot_blocks"] = rep.pivot_blocks;
  json fails = json::array();
  for (const auto& f : rep.dd_failures) fails.push_back({{"level", f.level}, {"degree", f.degree}, {"at", f.chain}});
  v["dd_failures"] = fails;
  json blocks = json::array();
  for (const auto& b : rep.blocks)
    blocks.push_back({{"level", b.level},
                      {"degree", b.degree},
                      {"method", b.method},
                      {"dim", b.dim},
                      {"rank_out", b.rank_out},
                      {"rank_in", b.rank_in},
                      {"exact", b.exact}});
  v["blocks"] = blocks;
  j["verification"] = v;

  std::ostringstream t;
  const ChainSet& cs = res.chains();
  for (int n = 0; n <= res.max_level(); ++n) {
    for (std::size_t i = 0; i < cs.size(n); ++i)
      t << "d" << n << "(" << res.ring()->render(cs.at(n, i).word) << " ⊗ 1) = " << res.render(res.differential(n, i))
        << "\n";
  }
  t << "d∘d = 0: " << (rep.dd_zero ? "yes" : "NO") << " (" << rep.dd_checked << " generators)\n";
  t << "exact: " << (rep.exact ? "yes" : "NO") << " (" << rep.eliminated_blocks << " blocks by elimination, "
    << rep.pivot_blocks << " by pivot count)\n";
  t << "d(i(u)) = u: " << (rep.kernel_failures == 0 ? "yes" : "NO") << " (" << rep.kernel_checks << " checks)\n";
  emit(cfg, out, j, t.str());
  return rep.ok() ? 0 : 1;
}

int cmd_tor(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Input input = load(cfg, in);
  const Presentation& p = input.pres;
  if (p.kind() != AlgebraKind::noncommutative) throw InputError("Tor needs a noncommutative presentation");
  AnickResolution res(p, cfg.max_level + 1, cfg.max_degree, cfg.threads);
  TorTable tor = tor_dimensions(res, cfg.max_level, cfg.max_degree);
  MinimalityReport mr = is_minimal(res);
  json j;
  json rows = json::array();
  for (const auto& [key, dim] : tor.dims)
    rows.push_back({{"level", key.first}, {"index", key.first + 1}, {"degree", key.second}, {"dim", dim}});
  json totals = json::array();
  std::ostringstream t;
  t << "level  Tor index  dim  (chains)\n";
  for (int n = -1; n <= cfg.max_level; ++n) {
    std::uint64_t chains = 0;
    for (const auto& c : res.chains().level(n))
      if (c.degree <= cfg.max_degree) ++chains;
    totals.push_back({{"level", n}, {"index", n + 1}, {"dim", tor.total(n)}, {"chains", chains}});
    t << std::setw(5) << n << std::setw(11) << n + 1 << std::setw(5) << tor.total(n) << "  (" << chains << ")\n";
  }
  j["max_level"] = cfg.max_level;
  j["max_degree"] = cfg.max_degree;
  j["tor"] = rows;
  j["totals"] = totals;
  j["minimal"] = mr.minimal;
  j["checked_through_level"] = res.max_level();
  if (mr.witness) {
    j["witness"] = {{"level", mr.witness->level},
                    {"row", mr.witness->row},
                    {"col", mr.witness->col},
                    {"value", mr.witness->value.get_str()}};
    t << "minimal: false (level " << mr.witness->level << ": " << mr.witness->row << " -> " << mr.witness->col
      << " with coefficient " << mr.witness->value.get_str() << ")\n";
  } else {
    j["witness"] = nullptr;
    t << "minimal: true through level " << res.max_level() << "\n";
  }
  emit(cfg, out, j, t.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases, Anick chains and resolutions, Hilbert series and Tor over Q"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool levels) {
    sub->add_option("--max-degree", cfg.max_degree, "degree bound (certification degree of noncommutative bases)");
    if (levels) sub->add_option("--max-level", cfg.max_level, "highest chain level");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--bn", cfg.bn, "use the built-in algebra B_N instead of a file");
    sub->add_option("--threads", cfg.threads, "worker threads (output does not depend on it)");
    sub->add_option("args", cfg.positional, "presentation file ('-' for stdin), then command arguments");
  };
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb, false);
  auto* nf = app.add_subcommand("nf", "normal form and ideal membership of a polynomial");
  add_common(nf, false);
  auto* ch = app.add_subcommand("chains", "Anick chains of the leading words");
  add_common(ch, true);
  auto* hi = app.add_subcommand("hilbert", "Hilbert series from normal words and from chains");
  add_common(hi, false);
  auto* an = app.add_subcommand("anick", "differentials of the Anick resolution, verified");
  add_common(an, true);
  an->add_option("--block-budget", cfg.block_budget, "largest graded block eliminated explicitly");
  auto* tor = app.add_subcommand("tor", "Tor dimensions and minimality");
  add_common(tor, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    check_bounds(cfg);
    if (gb->parsed()) return cmd_gb(cfg, in, out);
    if (nf->parsed()) return cmd_nf(cfg, in, out);
    if (ch->parsed()) return cmd_chains(cfg, in, out);
    if (hi->parsed()) return cmd_hilbert(cfg, in, out);
    if (an->parsed()) return cmd_anick(cfg, in, out);
    if (tor->parsed()) return cmd_tor(cfg, in, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BoundError& e) {
    err << "degree bound: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace anick::cli
