// rsg: exact arithmetic in free restriction monoids, semidirect products of
// semilattices, and the congruence/cover machinery built on them.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rsg/cover.hpp"
#include "rsg/fr.hpp"
#include "rsg/instances.hpp"
#include "rsg/verify.hpp"

using namespace rsg;
using act::FreeGroupAction;
using sd::SDAlgebra;
using sd::SDElem;
using words::Alphabet;
using words::Word;

namespace {

struct Options {
  std::string alphabet = "abc";
  std::uint64_t seed = 1;
  int samples = 50;
  int bound = 4;
  bool json = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// inputs come either as positional arguments or one per stdin line
std::vector<std::string> gather(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

SDElem<FreeGroupAction> parse_sd(std::string_view s, const Alphabet* alpha) {
  std::size_t open = s.find('('), brace = s.find('{'), close_brace = s.find('}');
  std::size_t close = s.rfind(')');
  if (open == std::string_view::npos || brace == std::string_view::npos ||
      close_brace == std::string_view::npos || close == std::string_view::npos)
    throw parse_error("semidirect element literal looks like ({\xce\xb5,a}, a): got \"" +
                      std::string(s) + "\"");
  auto tree = trees::parse_tree(s.substr(brace, close_brace - brace + 1), alpha);
  std::string_view rest = s.substr(close_brace + 1, close - close_brace - 1);
  std::size_t comma = rest.find(',');
  if (comma == std::string_view::npos) throw parse_error("missing word component");
  std::string_view w = rest.substr(comma + 1);
  while (!w.empty() && std::isspace(static_cast<unsigned char>(w.front()))) w.remove_prefix(1);
  while (!w.empty() && std::isspace(static_cast<unsigned char>(w.back()))) w.remove_suffix(1);
  return {tree, words::parse_word(w, alpha)};
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pairs(const alg::FinAlg& s,
                                                             const std::string& text) {
  // "e=f,1=e" by element names
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("pair \"" + item + "\" needs the form x=y");
    ps.emplace_back(s.index_of(item.substr(0, eq)), s.index_of(item.substr(eq + 1)));
  }
  return ps;
}

int run(int argc, char** argv) {
  CLI::App app{"exact computational algebra for restriction semigroups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--alphabet", opt.alphabet, "generator alphabet (lowercase letters)");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--samples", opt.samples, "sample count for verification");
  app.add_option("--bound", opt.bound, "size bound for bounded saturation");
  app.add_flag("--json", opt.json, "machine-readable output");

  Alphabet alpha;

  // ---- word ----
  auto* word = app.add_subcommand("word", "free monoid / free group arithmetic");
  std::vector<std::string> word_args;
  std::string word_op;
  word->add_option("op", word_op, "reduce | nicefact | abelian-nf")->required();
  word->add_option("input", word_args, "elements (or stdin, one per line)");

  // ---- tree ----
  auto* tree = app.add_subcommand("tree", "Cayley subtree operations");
  std::string tree_op;
  std::vector<std::string> tree_args;
  tree->add_option("op", tree_op, "span | meet | dot")->required();
  tree->add_option("input", tree_args, "tree literals like {\xce\xb5,a,ab}");

  // ---- alg ----
  auto* algc = app.add_subcommand("alg", "finite (2,1,1)-algebras");
  std::string alg_op, alg_input, alg_pairs;
  algc->add_option("op", alg_op, "check | closure | quotient")->required();
  algc->add_option("--input", alg_input, "algebra JSON file")->required();
  algc->add_option("--pairs", alg_pairs, "generating pairs, e.g. e=f,1=e");

  // ---- sd ----
  auto* sdc = app.add_subcommand("sd", "semidirect product elements");
  std::string sd_op;
  std::vector<std::string> sd_args;
  sdc->add_option("op", sd_op, "mul | plus | star | down | inR")->required();
  sdc->add_option("input", sd_args, "elements like ({\xce\xb5,a}, a)");

  // ---- fr ----
  auto* frc = app.add_subcommand("fr", "free restriction monoid elements");
  std::string fr_op, fr_target, fr_map;
  std::vector<std::string> fr_args;
  frc->add_option("op", fr_op, "decompose | eval")->required();
  frc->add_option("--target", fr_target, "target algebra JSON file");
  frc->add_option("--map", fr_map, "assignment a=name,b=name");
  frc->add_option("input", fr_args, "elements like ({\xce\xb5,a}, a)");

  // ---- term ----
  auto* termc = app.add_subcommand("term", "the chain term family");
  std::string term_op;
  int term_depth = 0;
  std::string term_inner = "+";
  std::vector<std::string> term_args;
  termc->add_option("op", term_op, "show | eval | onedir | yuck | two")->required();
  termc->add_option("--depth", term_depth, "tower depth");
  termc->add_option("--innermost", term_inner, "+ or * (also the yuck variant)");
  termc->add_option("input", term_args,
                    "eval/onedir: c then constants; yuck: U V g; two: constants");

  // ---- chain ----
  auto* chainc = app.add_subcommand("chain", "random valid chain demo with pulldown");

  // ---- cover ----
  auto* coverc = app.add_subcommand("cover", "proper-cover pipeline");
  std::string cover_op = "build", cover_input;
  coverc->add_option("op", cover_op, "build");
  coverc->add_option("--input", cover_input, "algebra JSON file")->required();

  // ---- pact ----
  auto* pactc = app.add_subcommand("pact", "partial actions of \xce\xa9* on a semilattice");
  std::string pact_op, pact_input, pact_x, pact_y;
  int pact_maxlen = 3;
  pactc->add_option("op", pact_op, "check | meet | nice")->required();
  pactc->add_option("--input", pact_input, "partial action JSON file")->required();
  pactc->add_option("--maxlen", pact_maxlen, "word length bound");
  pactc->add_option("x", pact_x, "chi-class literal like [e,a]");
  pactc->add_option("y", pact_y, "chi-class literal like [e,a]");

  // ---- verify ----
  auto* verc = app.add_subcommand("verify", "run a property suite");
  std::string ver_suite;
  int ver_omega = 2;
  verc->add_option("suite", ver_suite,
                   "identities | niceness | lemma-onedir | lemma-yuck | lemma-two | oracles | "
                   "cover | pact | factorisability | all")
      ->required();
  verc->add_option("--omega", ver_omega, "alphabet size for the free instances");

  CLI11_PARSE(app, argc, argv);
  alpha.letters = opt.alphabet;

  if (*word) {
    auto inputs = gather(word_args);
    for (const auto& in : inputs) {
      if (word_op == "reduce") {
        std::cout << words::wire(words::reduce(words::parse_letters(in, &alpha))) << "\n";
      } else if (word_op == "nicefact") {
        Word g = words::parse_word(in, &alpha);
        auto blocks = words::nice_blocks(g);
        std::string out;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          out += (i ? " " : "") + words::display(blocks[i]);
        std::cout << (blocks.empty() ? "\xce\xb5" : out) << "\n";
      } else if (word_op == "abelian-nf") {
        auto nf = words::abelian_normal_form(words::parse_abelian(in, &alpha));
        std::cout << "u=" << words::abelian_str(nf.u) << " t=" << words::abelian_str(nf.t)
                  << "\n";
      } else {
        throw parse_error("unknown word operation \"" + word_op + "\"");
      }
    }
    return 0;
  }

  if (*tree) {
    auto inputs = gather(tree_args);
    if (tree_op == "dot") {
      for (const auto& in : inputs)
        std::cout << trees::tree_dot(trees::parse_tree(in, &alpha), alpha);
    } else if (tree_op == "span") {
      for (const auto& in : inputs)
        std::cout << trees::tree_str(trees::parse_tree(in, &alpha)) << "\n";
    } else if (tree_op == "meet") {
      if (inputs.size() < 2) throw parse_error("tree meet needs two literals");
      auto acc = trees::parse_tree(inputs[0], &alpha);
      for (std::size_t i = 1; i < inputs.size(); ++i)
        acc = trees::tree_meet(acc, trees::parse_tree(inputs[i], &alpha));
      std::cout << trees::tree_str(acc) << "\n";
    } else {
      throw parse_error("unknown tree operation \"" + tree_op + "\"");
    }
    return 0;
  }

  if (*algc) {
    auto s = alg::FinAlg::from_json_text(slurp(alg_input));
    if (alg_op == "check") {
      std::vector<std::array<std::size_t, 3>> tr;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) tr.push_back({a, b, a});
      auto rep = alg::check_identities(s, tr);
      for (const auto& c : rep.checks)
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.law
                  << (c.pass ? "" : "  " + c.witness) << "\n";
      return rep.all_pass ? 0 : 1;
    }
    auto c = alg::finite_congruence_closure(s, parse_pairs(s, alg_pairs));
    if (alg_op == "closure") {
      for (const auto& blk : c.block_list()) {
        std::cout << "{";
        for (std::size_t i = 0; i < blk.size(); ++i) std::cout << (i ? "," : "") << s.str(blk[i]);
        std::cout << "}\n";
      }
      return 0;
    }
    if (alg_op == "quotient") {
      std::cout << alg::quotient(s, c).to_json_text() << "\n";
      return 0;
    }
    throw parse_error("unknown alg operation \"" + alg_op + "\"");
  }

  if (*sdc) {
    FreeGroupAction f{alpha};
    SDAlgebra<FreeGroupAction> a(f);
    auto inputs = gather(sd_args);
    if (inputs.empty()) throw parse_error("sd needs at least one element");
    auto x = parse_sd(inputs[0], &alpha);
    if (sd_op == "mul") {
      for (std::size_t i = 1; i < inputs.size(); ++i)
        x = a.product(x, parse_sd(inputs[i], &alpha));
      std::cout << a.str(x) << "\n";
    } else if (sd_op == "plus") {
      std::cout << a.str(a.plus(x)) << "\n";
    } else if (sd_op == "star") {
      std::cout << a.str(a.star(x)) << "\n";
    } else if (sd_op == "down") {
      std::cout << a.str(sd::down(f, x)) << "\n";
    } else if (sd_op == "inR") {
      std::cout << (sd::in_R(f, x) ? "true" : "false") << "\n";
    } else {
      throw parse_error("unknown sd operation \"" + sd_op + "\"");
    }
    return 0;
  }

  if (*frc) {
    FreeGroupAction f{alpha};
    auto inputs = gather(fr_args);
    if (fr_op == "decompose") {
      for (const auto& in : inputs)
        std::cout << fr::fr_decompose(f, parse_sd(in, &alpha)).str() << "\n";
      return 0;
    }
    if (fr_op == "eval") {
      auto target = alg::FinAlg::from_json_text(slurp(fr_target));
      std::vector<std::array<std::size_t, 3>> tr;
      for (std::size_t p = 0; p < target.size(); ++p)
        for (std::size_t q = 0; q < target.size(); ++q) tr.push_back({p, q, p});
      if (!alg::check_identities(target, tr).all_pass)
        throw instance_error("eval target is not a restriction monoid");
      auto id = target.identity();
      if (!id) throw instance_error("eval target must be a monoid");
      std::map<char, std::size_t> assign;
      std::stringstream ss(fr_map);
      std::string item;
      while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq != 1)
          throw parse_error("--map entries look like a=name");
        assign[item[0]] = target.index_of(item.substr(2));
      }
      for (const auto& in : inputs)
        std::cout << target.str(
                         fr::evaluate_morphism(f, parse_sd(in, &alpha), target, assign, *id))
                  << "\n";
      return 0;
    }
    throw parse_error("unknown fr operation \"" + fr_op + "\"");
  }

  if (*termc) {
    FreeGroupAction f{alpha};
    SDAlgebra<FreeGroupAction> a(f);
    bool inner_plus = term_inner != "*";
    term::Term t = term::build_term(term_depth, inner_plus);
    if (term_op == "show") {
      std::cout << t.str() << "\n";
      return 0;
    }
    auto inputs = gather(term_args);
    if (term_op == "eval" || term_op == "onedir") {
      if (inputs.size() != t.arity() + 1)
        throw parse_error("need c plus " + std::to_string(t.arity()) + " constants");
      auto c = parse_sd(inputs[0], &alpha);
      std::vector<SDElem<FreeGroupAction>> consts;
      for (std::size_t i = 1; i < inputs.size(); ++i)
        consts.push_back(parse_sd(inputs[i], &alpha));
      if (term_op == "eval") {
        std::cout << a.str(term::eval_term(a, t, c, consts)) << "\n";
      } else {
        auto p = term::onedir_params(f, t, consts);
        std::cout << "U=" << f.lat_str(p.U) << " V=" << f.lat_str(p.V)
                  << " g=" << f.grp_str(p.g) << "\n";
        std::cout << "value " << a.str(term::onedir_value(f, t.in_plus_class(), p, c)) << "\n";
      }
      return 0;
    }
    if (term_op == "yuck") {
      if (inputs.size() != 3) throw parse_error("yuck needs U V g");
      auto u = trees::parse_tree(inputs[0], &alpha);
      auto v = trees::parse_tree(inputs[1], &alpha);
      auto g = words::parse_word(inputs[2], &alpha);
      auto r = term::yuck_construct(f, u, v, g, inner_plus);
      std::cout << r.t.str() << "\n";
      for (const auto& b : r.consts) std::cout << a.str(b) << "\n";
      return 0;
    }
    if (term_op == "two") {
      term::Term tt = inputs.size() == 2 ? term::Term::sandwich()
                                         : term::Term::sandwiched(term_depth, inner_plus);
      if (inputs.size() != tt.arity())
        throw parse_error("need " + std::to_string(tt.arity()) + " constants");
      std::vector<SDElem<FreeGroupAction>> consts;
      for (const auto& in : inputs) consts.push_back(parse_sd(in, &alpha));
      auto r = term::two_transform(f, tt, consts);
      std::cout << r.t.str() << "\n";
      for (const auto& b : r.consts) std::cout << a.str(b) << "\n";
      return 0;
    }
    throw parse_error("unknown term operation \"" + term_op + "\"");
  }

  if (*chainc) {
    verify::VerifyConfig vc;
    vc.seed = opt.seed;
    vc.chains = 1;
    auto rep = verify::verify_two_chains(vc);
    rep.print(std::cout);
    return rep.pass() ? 0 : 1;
  }

  if (*coverc) {
    auto s = alg::FinAlg::from_json_text(slurp(cover_input));
    auto rep = cover::build_proper_cover(s, opt.bound);
    if (opt.json)
      std::cout << rep.to_json_text() << "\n";
    else
      std::cout << rep.summary();
    return rep.all_ok() ? 0 : 1;
  }

  if (*pactc) {
    auto pa = pact::PartialAction::from_json_text(slurp(pact_input));
    if (pact_op == "check") {
      std::cout << "letters: " << pa.alpha.letters << ", |Y| = " << pa.Y.size()
                << (pa.munn ? ", perfect (Munn) case" : ", general ideal case") << "\n";
      return 0;
    }
    if (pact_op == "meet") {
      auto parse_chi = [&](const std::string& in) {
        auto b = in.find('['), m = in.find(','), e = in.rfind(']');
        if (b == std::string::npos || m == std::string::npos || e == std::string::npos)
          throw parse_error("chi-class literal looks like [e,a]");
        auto a_idx = pa.Y.index_of(in.substr(b + 1, m - b - 1));
        return pact::chi_canonical(pa, a_idx, words::parse_word(in.substr(m + 1, e - m - 1)));
      };
      if (pact_x.empty() || pact_y.empty())
        throw parse_error("pact meet needs two chi-class literals");
      auto r = pact::chi_meet(pa, parse_chi(pact_x), parse_chi(pact_y));
      std::cout << "[" << pa.Y.names[r.a] << "," << words::wire(r.g) << "]\n";
      return 0;
    }
    if (pact_op == "nice") {
      auto rep = pact::check_prefix_criterion(pa, pact_maxlen);
      std::cout << "[" << (rep.pass ? "PASS" : "FAIL") << "] prefix criterion, " << rep.checked
                << " pairs\n";
      for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
      return rep.pass ? 0 : 1;
    }
    throw parse_error("unknown pact operation \"" + pact_op + "\"");
  }

  if (*verc) {
    verify::VerifyConfig vc;
    vc.seed = opt.seed;
    vc.samples = opt.samples;
    vc.bound = opt.bound;
    vc.omega = ver_omega;
    std::vector<verify::SuiteReport> reports;
    if (ver_suite == "all")
      reports = verify::verify_all(vc);
    else
      reports.push_back(verify::run_suite(ver_suite, vc));
    bool pass = true;
    for (const auto& r : reports) {
      if (opt.json)
        std::cout << r.to_json_text() << "\n";
      else
        r.print(std::cout);
      pass = pass && r.pass();
    }
    return pass ? 0 : 1;
  }

  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const alphabet_error& e) {
    std::cerr << "alphabet error: " << e.what() << "\n";
    return 2;
  } catch (const instance_error& e) {
    std::cerr << "instance error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
