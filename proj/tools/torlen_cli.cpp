// torlen: command-line front end.  JSON reports on stdout, diagnostics and
// wall time on stderr.  Exit codes: 0 success, 1 input or precondition
// error, 2 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "torlen/constructions.hpp"
#include "torlen/coset.hpp"
#include "torlen/error.hpp"
#include "torlen/freeprod.hpp"
#include "torlen/stallings.hpp"
#include "torlen/torsion.hpp"

using json = nlohmann::ordered_json;
using namespace torlen;

namespace {

  constexpr int exit_ok     = 0;
  constexpr int exit_input  = 1;
  constexpr int exit_budget = 2;

  std::size_t budget_scale() {
    char const* raw = std::getenv("TORLEN_BUDGET_SCALE");
    if (raw == nullptr || *raw == '\0') {
      return 1;
    }
    std::size_t used  = 0;
    long        value = 0;
    try {
      value = std::stol(raw, &used);
    } catch (std::exception const&) {
      used = 0;
    }
    if (used != std::string_view(raw).size() || value < 1) {
      throw Error("TORLEN_BUDGET_SCALE must be a positive integer");
    }
    return static_cast<std::size_t>(value);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Presentation load(std::string const& path) {
    Presentation p = parse_presentation(read_file(path));
    if (parse_presentation(serialize(p)) != p) {
      throw Error("presentation does not round-trip through the text format");
    }
    return p;
  }

  // "w1;w2;..." with empty entries skipped
  std::vector<Word> word_list(std::string const& text) {
    std::vector<Word> out;
    std::stringstream in(text);
    std::string       item;
    while (std::getline(in, item, ';')) {
      if (item.find_first_not_of(" \t") != std::string::npos) {
        out.push_back(Word::parse(item));
      }
    }
    return out;
  }

  std::vector<std::string> symbol_list(std::string const& text) {
    std::vector<std::string> out;
    std::istringstream       in(text);
    std::string              s;
    while (in >> s) {
      out.push_back(s);
    }
    return out;
  }

  json tokens(Word const& w) {
    json out = json::array();
    for (auto const& l : w.letters()) {
      out.push_back(token(l));
    }
    return out;
  }

  json to_json(Presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relators()) {
      rels.push_back(tokens(r));
    }
    return {{"generators", p.generators()}, {"relators", rels}};
  }

  json big(BigInt const& v) {
    if (v <= BigInt(std::numeric_limits<long long>::max())) {
      return static_cast<long long>(v);
    }
    return v.str();
  }

  json counts(Presentation const& p) {
    return {{"generators", p.generators().size()}, {"relators", p.relators().size()}};
  }

  json to_json(CyclicFactorSpec const& spec, NormalForm const& nf) {
    json out = json::array();
    for (auto const& s : nf.syllables) {
      out.push_back({spec[s.factor].generator, s.exponent});
    }
    return out;
  }

  void emit(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  void write_presentation(Presentation const& p, std::string const& out) {
    if (out.empty()) {
      std::cout << serialize(p);
      return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      throw Error("cannot write '" + out + "'");
    }
    f << serialize(p);
  }

  std::pair<std::size_t, std::int64_t> parse_bounds(std::string const& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
      throw Error("bounds must be 'max_syllables,max_exponent'");
    }
    try {
      long s = std::stol(text.substr(0, comma));
      long e = std::stol(text.substr(comma + 1));
      if (s < 0 || e < 1) {
        throw Error("");
      }
      return {static_cast<std::size_t>(s), e};
    } catch (std::exception const&) {
      throw Error("bad bounds '" + text + "'");
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion length toolkit for group presentations"};
  app.require_subcommand(1);

  int status = exit_ok;

  // gen
  auto*       gen = app.add_subcommand("gen", "build a presentation family");
  std::string gen_out;
  gen->require_subcommand(1);
  std::size_t pn_n = 0;
  long        pn_exp = 3;
  auto*       gen_pn = gen->add_subcommand("pn", "tree family P_n");
  gen_pn->add_option("--n", pn_n, "depth")->required();
  gen_pn->add_option("--exp", pn_exp, "power exponent (>= 2)");
  gen_pn->add_option("--out", gen_out, "output file");
  long  pj = 0, pk = 0, pl = 0;
  auto* gen_pjkl = gen->add_subcommand("pjkl", "P_{j,k,l}");
  gen_pjkl->add_option("J", pj)->required();
  gen_pjkl->add_option("K", pk)->required();
  gen_pjkl->add_option("L", pl)->required();
  gen_pjkl->add_option("--out", gen_out, "output file");
  std::size_t qn_n = 1;
  auto*       gen_qn = gen->add_subcommand("qn", "iterated LN construction from <z|z^2>");
  gen_qn->add_option("--n", qn_n)->required();
  gen_qn->add_option("--out", gen_out, "output file");
  std::size_t chain_m = 0;
  auto*       gen_chain = gen->add_subcommand("chain", "free product P_0 * ... * P_m");
  gen_chain->add_option("--m", chain_m)->required();
  gen_chain->add_option("--out", gen_out, "output file");

  // file-driven commands
  std::string file;
  auto*       tgen = app.add_subcommand("tgen", "2-generator embedding");
  tgen->add_option("FILE", file)->required();
  auto* ln = app.add_subcommand("ln", "torsion-killing LN construction");
  ln->add_option("FILE", file)->required();

  std::size_t max_iter = 0;
  auto*       torlen_cmd = app.add_subcommand("torlen", "torsion length");
  torlen_cmd->add_option("FILE", file)->required();
  torlen_cmd->add_option("--max-iter", max_iter, "quotient steps (default 64)");

  std::size_t        level = 1;
  CertificateBudgets cert_budgets;
  bool               states_given = false;
  auto*              search = app.add_subcommand("torsion-search", "bounded torsion certificates");
  search->add_option("FILE", file)->required();
  search->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  search->add_option("--word-bound", cert_budgets.word_bound);
  search->add_option("--exponent-bound", cert_budgets.exponent_bound);
  search->add_option("--consequence-budget", cert_budgets.consequence_budget);
  auto* states_opt = search->add_option("--max-states", cert_budgets.max_states);

  std::string subgroup;
  std::size_t max_cosets = 0;
  auto*       tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  tc->add_option("FILE", file)->required();
  tc->add_option("--subgroup", subgroup, "subgroup generators 'w1;w2'");
  tc->add_option("--max", max_cosets, "live coset bound (default 10000)");

  std::string ambient, fold_gens;
  auto*       fold = app.add_subcommand("fold", "Stallings folding");
  fold->add_option("--ambient", ambient, "ambient generators 'a b'")->required();
  fold->add_option("--gens", fold_gens, "subgroup generators 'w1;w2'")->required();

  std::string spec_text, word_text, a_text, b_text, bounds_text = "6,4";
  auto*       nf = app.add_subcommand("nf", "free-product normal form and torsion test");
  nf->add_option("--spec", spec_text, "factors 'x:2 y:3 t:inf'")->required();
  nf->add_option("WORD", word_text)->required();

  auto* conjsep = app.add_subcommand("conjsep", "bounded conjugate-separation search");
  conjsep->add_option("--spec", spec_text)->required();
  conjsep->add_option("--bounds", bounds_text, "max_syllables,max_exponent (default 6,4)");
  conjsep->add_option("A", a_text, "element of one factor (default: first generator)");
  conjsep->add_option("B", b_text, "element of another factor (default: second generator)");

  std::string u_text, v_text;
  std::size_t pp_len = 8;
  auto*       pingpong = app.add_subcommand("pingpong", "bounded freeness certificate");
  pingpong->add_option("--spec", spec_text)->required();
  pingpong->add_option("U", u_text)->required();
  pingpong->add_option("V", v_text)->required();
  pingpong->add_option("--len", pp_len, "maximum word length");

  auto* ab = app.add_subcommand("ab", "abelian invariants");
  ab->add_option("FILE", file)->required();
  auto* canon = app.add_subcommand("canon", "canonical presentation");
  canon->add_option("FILE", file)->required();
  bool drop_unused = false;
  canon->add_flag("--drop-unused", drop_unused, "drop generators in no relator");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }
  states_given = states_opt->count() > 0;

  auto const started = std::chrono::steady_clock::now();
  try {
    std::size_t const scale = budget_scale();

    if (gen->parsed()) {
      Presentation p;
      json         prov;
      if (gen_pn->parsed()) {
        p    = build_pn(pn_n, pn_exp);
        prov = {{"construction", "pn"}, {"parameters", {{"n", pn_n}, {"exp", pn_exp}}}};
      } else if (gen_pjkl->parsed()) {
        p    = build_pjkl(pj, pk, pl);
        prov = {{"construction", "pjkl"}, {"parameters", {{"j", pj}, {"k", pk}, {"l", pl}}}};
      } else if (gen_qn->parsed()) {
        p    = build_qn(qn_n);
        prov = {{"construction", "qn"}, {"parameters", {{"n", qn_n}}}};
      } else {
        p    = build_chain(chain_m);
        prov = {{"construction", "chain"}, {"parameters", {{"m", chain_m}}}};
      }
      write_presentation(p, gen_out);
      if (!gen_out.empty()) {
        prov["counts"] = counts(p);
        prov["out"]    = gen_out;
        emit(prov);
      }
    } else if (tgen->parsed()) {
      Presentation p   = load(file);
      TgenResult   res = build_tgen(p);
      json         images = json::object();
      for (auto const& [g, w] : res.images) {
        images[g] = tokens(w);
      }
      emit({{"construction", "tgen"},
            {"parameters", {{"input_generators", p.generators().size()},
                            {"input_relators", p.relators().size()},
                            {"truncation_index", p.relators().size()}}},
            {"counts", counts(res.presentation)},
            {"intermediate_counts", counts(res.intermediate)},
            {"renamed", res.renamed},
            {"images", images},
            {"presentation", to_json(res.presentation)},
            {"text", serialize(res.presentation)}});
    } else if (ln->parsed()) {
      Presentation p   = load(file);
      LnResult     res = build_ln(p);
      json         basis = json::array();
      for (auto const& w : res.basis) {
        basis.push_back(tokens(w));
      }
      emit({{"construction", "ln"},
            {"parameters", {{"input_generators", p.generators().size()},
                            {"input_relators", p.relators().size()}}},
            {"counts", counts(res.presentation)},
            {"rank", res.rank},
            {"basis", basis},
            {"degenerate", res.degenerate},
            {"renamed", res.renamed},
            {"presentation", to_json(res.presentation)},
            {"text", serialize(res.presentation)}});
    } else if (torlen_cmd->parsed()) {
      Presentation p = load(file);
      std::size_t  iters = max_iter > 0 ? max_iter : default_max_iter * scale;
      auto         rep   = torsion_length(p, iters);
      json         trace = json::array();
      for (auto const& t : rep.trace) {
        trace.push_back({{"before", to_json(t.before)},
                         {"killed", t.killed},
                         {"after", to_json(t.after)},
                         {"sound", t.sound}});
      }
      emit({{"value", rep.value},
            {"exact", rep.exact},
            {"sound", rep.sound},
            {"fixed_point", rep.fixed_point},
            {"budgets", {{"max_iter", rep.max_iter}}},
            {"iterations", rep.iterations},
            {"trace", trace},
            {"final", to_json(rep.final_presentation)}});
      if (!rep.fixed_point) {
        status = exit_budget;
      }
    } else if (search->parsed()) {
      Presentation p = load(file);
      if (!states_given) {
        cert_budgets.max_states *= scale;
      }
      auto certs = torsion_certificate_search(p, level, cert_budgets);
      json out   = json::array();
      for (auto const& c : certs) {
        json factors = json::array();
        for (auto const& f : c.proof.factors) {
          factors.push_back(
              {{"conjugator", tokens(f.conjugator)}, {"relator", f.relator}, {"sign", f.sign}});
        }
        json adjoined = json::array();
        for (auto const& a : *c.adjoined) {
          adjoined.push_back(tokens(a.word));
        }
        out.push_back({{"word", tokens(c.word)},
                       {"exponent", c.exponent},
                       {"level", c.level},
                       {"adjoined", adjoined},
                       {"factors", factors},
                       {"verified", verify_certificate(p, c)}});
      }
      emit({{"level", level},
            {"budgets",
             {{"word_bound", cert_budgets.word_bound},
              {"exponent_bound", cert_budgets.exponent_bound},
              {"consequence_budget", cert_budgets.consequence_budget},
              {"max_states", cert_budgets.max_states}}},
            {"count", certs.size()},
            {"certificates", out}});
    } else if (tc->parsed()) {
      Presentation p     = load(file);
      std::size_t  limit = max_cosets > 0 ? max_cosets : default_max_cosets * scale;
      auto         table = todd_coxeter(p, word_list(subgroup), limit);
      if (table.complete()) {
        emit({{"status", "complete"}, {"index", table.index}, {"table_digest", table.digest}});
      } else {
        emit({{"status", "bound_exceeded"}, {"limit", table.limit}, {"table_digest", nullptr}});
        status = exit_budget;
      }
    } else if (fold->parsed()) {
      auto g     = build_subgroup_graph(symbol_list(ambient), word_list(fold_gens));
      json basis = json::array();
      for (auto const& w : free_basis(g)) {
        basis.push_back(tokens(w));
      }
      json edges = json::array();
      for (auto const& e : g.edges()) {
        edges.push_back({e.from, g.ambient().symbol(e.label), e.to});
      }
      emit({{"rank", rank(g)},
            {"basis", basis},
            {"vertices", g.vertex_count()},
            {"edges", edges}});
    } else if (nf->parsed()) {
      auto spec    = CyclicFactorSpec::parse(spec_text);
      Word w       = Word::parse(word_text);
      auto form    = normal_form(spec, w);
      auto verdict = is_torsion(spec, w);
      json out     = {{"spec", spec.str()},
                      {"normal_form", to_json(spec, form)},
                      {"word", tokens(to_word(spec, form))},
                      {"torsion", verdict.torsion}};
      if (verdict.witness) {
        out["witness"] = {{"conjugator", tokens(to_word(spec, verdict.witness->conjugator))},
                          {"element", tokens(to_word(spec, verdict.witness->element))}};
      }
      emit(out);
    } else if (conjsep->parsed()) {
      auto spec = CyclicFactorSpec::parse(spec_text);
      if (spec.size() < 2 && (a_text.empty() || b_text.empty())) {
        throw Error("conjsep needs two factors");
      }
      Word a = a_text.empty() ? Word::generator(spec[0].generator) : Word::parse(a_text);
      Word b = b_text.empty() ? Word::generator(spec[1].generator) : Word::parse(b_text);
      auto [syl, ex] = parse_bounds(bounds_text);
      auto rep       = conjugate_separation_search(spec, a, b, {syl, ex});
      json out       = {{"verdict", rep.witness ? "witness" : "no_witness_up_to_bound"},
                        {"bounds", {{"max_syllables", syl}, {"max_exponent", ex}}},
                        {"candidates_checked", rep.candidates_checked}};
      if (rep.witness) {
        out["witness"] = {{"x", tokens(to_word(spec, rep.witness->x))},
                          {"i", rep.witness->i},
                          {"j", rep.witness->j}};
      }
      emit(out);
    } else if (pingpong->parsed()) {
      auto spec = CyclicFactorSpec::parse(spec_text);
      auto rep  = ping_pong_free_check(spec, Word::parse(u_text), Word::parse(v_text), pp_len);
      json out  = {{"verdict", rep.free_up_to_bound ? "free_up_to_bound" : "relation_found"},
                   {"bounds", {{"max_length", rep.max_length}}},
                   {"words_checked", rep.words_checked}};
      if (rep.relation) {
        out["relation"] = tokens(*rep.relation);
      }
      emit(out);
    } else if (ab->parsed()) {
      auto inv     = abelianization(load(file));
      json torsion = json::array();
      for (auto const& d : inv.torsion) {
        torsion.push_back(big(d));
      }
      emit({{"torsion", torsion}, {"free_rank", inv.free_rank}});
    } else if (canon->parsed()) {
      CanonicalizeOptions options;
      options.drop_unused_generators = drop_unused;
      std::cout << serialize(canonicalize(load(file), options));
    }
  } catch (ParseError const& e) {
    std::cerr << "torlen: parse error: " << e.what() << '\n';
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "torlen: " << e.what() << '\n';
    return exit_input;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cerr << "wall_time_s " << seconds << '\n';
  return status;
}
