#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "modorder/hasse.hpp"
#include "modorder/io.hpp"

using namespace modorder;

namespace {

  constexpr int kHolds    = 0;
  constexpr int kNotHolds = 1;
  constexpr int kError    = 2;

  struct Options {
    std::string ring_spec;
    std::string module_spec;
    std::string rel_tag = "minus-dual";
    std::string corpus  = "default";
    std::string out_path;
    std::string law_filter;
    std::string dump;
    bool        as_json = false;
    bool        serial  = false;
    std::vector<Index> operands;
  };

  Relation relation_or_throw(std::string const& t) {
    auto rel = parse_relation(t);
    if (!rel) {
      throw ConfigError("unknown relation '" + t + "'");
    }
    return *rel;
  }

  int cmd_ring(Options const& o) {
    if (o.ring_spec.empty()) {
      throw ConfigError("ring: --ring is required");
    }
    auto const R = load_ring(o.ring_spec);
    if (o.dump == "tables") {
      std::cout << ring_to_json(*R).dump() << "\n";
      return kHolds;
    }
    json const j = ring_summary(*R);
    if (o.as_json) {
      std::cout << j.dump() << "\n";
      return kHolds;
    }
    auto flag = [&](char const* key) { return j[key].get<bool>() ? "true" : "false"; };
    auto set  = [&](char const* key) {
      return IndexSet(R->size(), j[key].get<std::vector<Index>>()).to_string();
    };
    std::cout << "ring: " << R->name() << "\n"
              << "size: " << R->size() << "\n"
              << "commutative: " << flag("commutative") << "\n"
              << "idempotents: " << set("idempotents") << "\n"
              << "units: " << set("units") << "\n";
    if (R->has_involution()) {
      std::cout << "projections: " << set("projections") << "\n";
    } else {
      std::cout << "involution: none\n";
    }
    std::cout << "von Neumann regular: " << flag("von_neumann_regular") << "\n"
              << "Rickart: " << flag("rickart") << "\n";
    if (R->has_involution()) {
      std::cout << "Rickart-*: " << flag("rickart_star") << "\n"
                << "proper-*: " << flag("proper_star") << "\n";
    }
    return kHolds;
  }

  int cmd_module(Options const& o) {
    if (o.module_spec.empty()) {
      throw ConfigError("module: --module is required");
    }
    ModuleContext ctx(load_module(o.module_spec));
    if (o.dump == "tables") {
      std::cout << module_to_json(ctx.module()).dump() << "\n";
      return kHolds;
    }
    if (o.dump == "endo") {
      std::cout << ring_to_json(ctx.endo_ring()).dump() << "\n";
      return kHolds;
    }
    if (o.dump == "dual") {
      json phis = json::array();
      for (Index phi = 0; phi < ctx.dual().size(); ++phi) {
        phis.push_back(ctx.dual().functionals()[phi].images);
      }
      std::cout << phis.dump() << "\n";
      return kHolds;
    }
    json const j = module_summary(ctx);
    if (o.as_json) {
      std::cout << j.dump() << "\n";
      return kHolds;
    }
    std::cout << "module: " << ctx.module().name() << "\n"
              << "ring: " << ctx.ring().name() << "\n"
              << "size: " << ctx.module().size() << "\n";
    if (j["regular"].get<bool>()) {
      std::cout << "regular: true";
    } else {
      std::cout << "regular: false at " << j["first_failure"].get<Index>();
    }
    std::cout << ", |M*| = " << ctx.dual().size()
              << ", |S| = " << ctx.endo().size() << "\n";
    return kHolds;
  }

  void print_witness(ModuleContext const* ctx, OrderVerdict const& v) {
    if (!v.witness) {
      return;
    }
    json const w = witness_to_json(ctx, *v.witness);
    std::cout << "witness:";
    for (auto const& [k, val] : w.items()) {
      std::cout << " " << k << "=" << val.dump();
    }
    std::cout << "\n";
  }

  int verdict_exit(OrderVerdict const& v) {
    switch (v.status) {
      case Status::Holds:
        return kHolds;
      case Status::DoesNotHold:
        return kNotHolds;
      default:
        return kError;
    }
  }

  int cmd_order(Options const& o) {
    if (o.operands.size() != 2) {
      throw ConfigError("order: expected two element indices");
    }
    Relation const rel = relation_or_throw(o.rel_tag);
    OrderVerdict   v   = OrderVerdict::no(rel, 0, 0);
    std::unique_ptr<ModuleContext> ctx;
    if (is_ring_relation(rel)) {
      if (o.ring_spec.empty()) {
        throw ConfigError("order: " + o.rel_tag + " needs --ring");
      }
      auto const R = load_ring(o.ring_spec);
      v            = decide_ring(*R, rel, o.operands[0], o.operands[1]);
    } else {
      std::shared_ptr<FiniteModule const> M;
      if (!o.module_spec.empty()) {
        M = load_module(o.module_spec);
      } else if (!o.ring_spec.empty()) {
        M = std::make_shared<FiniteModule const>(
            FiniteModule::ring_as_module(load_ring(o.ring_spec)));
      } else {
        throw ConfigError("order: --module or --ring is required");
      }
      ctx = std::make_unique<ModuleContext>(M);
      v   = decide(*ctx, rel, o.operands[0], o.operands[1]);
    }
    if (o.as_json) {
      std::cout << verdict_to_json(ctx.get(), v).dump() << "\n";
    } else {
      std::cout << tag(rel) << "(" << v.lhs << ", " << v.rhs
                << "): " << to_string(v.status) << "\n";
      print_witness(ctx.get(), v);
      if (v.hypothesis_violated) {
        std::cout << "hypothesis violated: the characterization assumes a regular setting\n";
      }
      if (!v.note.empty()) {
        std::cout << "note: " << v.note << "\n";
      }
    }
    return verdict_exit(v);
  }

  int cmd_verify(Options const& o) {
    auto const  corpus = load_corpus(o.corpus);
    SuiteConfig cfg{o.law_filter, !o.serial};
    auto const  reports = run_suite(corpus, cfg);
    std::size_t pass = 0, fail = 0, na = 0;
    for (auto const& r : reports) {
      switch (r.outcome) {
        case Outcome::Pass:
          ++pass;
          break;
        case Outcome::Fail:
          ++fail;
          break;
        case Outcome::NotApplicable:
          ++na;
          break;
      }
      if (o.as_json) {
        std::cout << report_to_json(r).dump() << "\n";
      }
    }
    if (o.as_json) {
      std::cout << json{{"summary",
                         {{"pass", pass}, {"fail", fail}, {"not_applicable", na}}}}
                       .dump()
                << "\n";
    } else {
      std::size_t law_w = 4, corpus_w = 6;
      for (auto const& r : reports) {
        law_w    = std::max(law_w, r.law.size());
        corpus_w = std::max(corpus_w, r.corpus.size());
      }
      auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
      };
      std::cout << pad("law", law_w) << "  " << pad("corpus", corpus_w)
                << "  outcome          checks  detail\n";
      for (auto const& r : reports) {
        std::cout << pad(r.law, law_w) << "  " << pad(r.corpus, corpus_w)
                  << "  " << pad(std::string(to_string(r.outcome)), 15)
                  << "  " << std::setw(6) << r.checks << "  " << r.detail;
        if (r.counterexample) {
          std::cout << (r.detail.empty() ? "" : "; ")
                    << r.counterexample->clause << " at (";
          auto const& ops = r.counterexample->operands;
          for (std::size_t i = 0; i < ops.size(); ++i) {
            std::cout << (i ? "," : "") << ops[i];
          }
          std::cout << ")";
        }
        std::cout << "\n";
      }
      std::cout << pass << " pass, " << fail << " fail, " << na
                << " not applicable\n";
    }
    return fail == 0 ? kHolds : kNotHolds;
  }

  int cmd_hasse(Options const& o) {
    if (o.module_spec.empty()) {
      throw ConfigError("hasse: --module is required");
    }
    ModuleContext ctx(load_module(o.module_spec));
    Poset const   p    = build_poset(ctx, relation_or_throw(o.rel_tag));
    std::string   text = o.as_json ? to_json(p) + "\n" : to_dot(p);
    std::ostringstream summary;
    summary << p.size << " nodes, " << p.covers.size() << " edges";
    if (p.domain.size() != p.size) {
      summary << ", " << p.size - p.domain.size() << " non-regular";
    }
    if (o.out_path.empty()) {
      std::cout << text;
      std::cerr << summary.str() << "\n";
    } else {
      std::ofstream out(o.out_path, std::ios::binary);
      if (!out) {
        throw ConfigError("cannot write " + o.out_path);
      }
      out << text;
      std::cout << "wrote " << o.out_path << ": " << summary.str() << "\n";
    }
    return kHolds;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minus partial order and its relatives on finite modules"};
  app.require_subcommand(1);
  Options o;

  auto* ring = app.add_subcommand("ring", "ring summary");
  ring->add_option("--ring", o.ring_spec, "ring file, inline JSON or builtin");
  ring->add_option("--dump", o.dump, "print the ring in a format: tables");
  ring->add_flag("--json", o.as_json);

  auto* module = app.add_subcommand("module", "module summary");
  module->add_option("--module", o.module_spec, "module file, inline JSON or builtin");
  module->add_option("--dump", o.dump, "print tables, endo or dual");
  module->add_flag("--json", o.as_json);

  auto* order = app.add_subcommand("order", "decide a relation between two elements");
  order->add_option("--module", o.module_spec);
  order->add_option("--ring", o.ring_spec, "base ring; R_R for module relations");
  order->add_option("--rel", o.rel_tag, "relation tag")->required();
  order->add_option("operands", o.operands, "m1 m2")->expected(2)->required();
  order->add_flag("--json", o.as_json);

  auto* verify = app.add_subcommand("verify", "run the law suite");
  verify->add_option("--corpus", o.corpus, "paper, default or a corpus file");
  verify->add_option("--law", o.law_filter, "only laws whose id contains this");
  verify->add_flag("--serial", o.serial, "run members one at a time");
  verify->add_flag("--json", o.as_json, "line-delimited JSON records");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of an order");
  hasse->add_option("--module", o.module_spec);
  hasse->add_option("--rel", o.rel_tag, "relation tag (default minus-dual)");
  hasse->add_option("--out", o.out_path, "write here instead of stdout");
  hasse->add_flag("--json", o.as_json, "covers as JSON instead of DOT");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*ring) {
      return cmd_ring(o);
    }
    if (*module) {
      return cmd_module(o);
    }
    if (*order) {
      return cmd_order(o);
    }
    if (*verify) {
      return cmd_verify(o);
    }
    return cmd_hasse(o);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
