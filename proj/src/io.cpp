#include "modorder/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace modorder {

  namespace {

    [[noreturn]] void bad(std::string const& where, std::string const& what) {
      throw ParseError("at " + (where.empty() ? std::string("/") : where)
                       + ": " + what);
    }

    json const& field(json const& j, std::string const& where, char const* key) {
      if (!j.is_object()) {
        bad(where, "expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        bad(where, std::string("missing key '") + key + "'");
      }
      return *it;
    }

    std::size_t natural(json const& j, std::string const& where) {
      if (!j.is_number_unsigned()) {
        if (j.is_number_integer()) {
          bad(where, "expected a nonnegative integer");
        }
        bad(where, "expected an integer, got " + std::string(j.type_name()));
      }
      return j.get<std::size_t>();
    }

    std::vector<Index> index_row(json const& j, std::string const& where) {
      if (!j.is_array()) {
        bad(where, "expected an array");
      }
      std::vector<Index> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(
            static_cast<Index>(natural(j[i], where + "/" + std::to_string(i))));
      }
      return out;
    }

    std::vector<std::vector<Index>> index_table(json const&        j,
                                                std::string const& where) {
      if (!j.is_array()) {
        bad(where, "expected an array of rows");
      }
      std::vector<std::vector<Index>> out;
      for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(index_row(j[i], where + "/" + std::to_string(i)));
      }
      return out;
    }

    std::string kind_of(json const& j, std::string const& where) {
      json const& k = field(j, where, "kind");
      if (!k.is_string()) {
        bad(where + "/kind", "expected a string");
      }
      return k.get<std::string>();
    }

    json parse_text(std::string const& text, std::string const& source) {
      try {
        return json::parse(text);
      } catch (json::parse_error const& e) {
        throw ParseError(source + ": byte " + std::to_string(e.byte) + ": "
                         + e.what());
      }
    }

    std::optional<std::size_t> parse_number(std::string_view s) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
      }
      return value;
    }

    std::optional<FiniteRing> builtin_ring(std::string_view s) {
      if (s == "M2(Z2)" || s == "M2Z2") {
        return FiniteRing::matrix2(2);
      }
      if (s == "M2(Z3)" || s == "M2Z3") {
        return FiniteRing::matrix2(3);
      }
      std::optional<FiniteRing> acc;
      while (!s.empty()) {
        auto const        cut   = s.find('x');
        std::string_view  token = s.substr(0, cut);
        if (token.size() < 2 || token[0] != 'Z') {
          return std::nullopt;
        }
        auto n = parse_number(token.substr(1));
        if (!n || *n == 0) {
          return std::nullopt;
        }
        FiniteRing factor = FiniteRing::zn(*n);
        acc = acc ? FiniteRing::product(*acc, factor) : factor;
        s   = cut == std::string_view::npos ? std::string_view{}
                                            : s.substr(cut + 1);
      }
      return acc;
    }

    // text of the spec: inline JSON, file contents, or nullopt
    std::optional<std::pair<std::string, std::string>> spec_text(
        std::string_view spec) {
      std::string s(spec);
      auto const  first = s.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && s[first] == '{') {
        return std::make_pair(s, std::string("<inline>"));
      }
      if (std::filesystem::is_regular_file(s)) {
        std::ifstream     in(s);
        std::stringstream buf;
        buf << in.rdbuf();
        return std::make_pair(buf.str(), s);
      }
      return std::nullopt;
    }

  }  // namespace

  std::shared_ptr<FiniteRing const> ring_from_json(json const&        j,
                                                   std::string const& where) {
    std::string const kind = kind_of(j, where);
    if (kind == "Zn") {
      std::size_t n = natural(field(j, where, "n"), where + "/n");
      if (n == 0) {
        bad(where + "/n", "n must be positive");
      }
      return std::make_shared<FiniteRing const>(FiniteRing::zn(n));
    }
    if (kind == "product") {
      json const& f = field(j, where, "factors");
      if (!f.is_array() || f.size() != 2) {
        bad(where + "/factors", "expected two factors");
      }
      auto a = ring_from_json(f[0], where + "/factors/0");
      auto b = ring_from_json(f[1], where + "/factors/1");
      return std::make_shared<FiniteRing const>(FiniteRing::product(*a, *b));
    }
    if (kind == "matrix2") {
      std::size_t p = natural(field(j, where, "p"), where + "/p");
      return std::make_shared<FiniteRing const>(FiniteRing::matrix2(p));
    }
    if (kind == "tables") {
      FiniteRing::Tables t;
      t.size = natural(field(j, where, "size"), where + "/size");
      t.add  = index_table(field(j, where, "add"), where + "/add");
      t.mul  = index_table(field(j, where, "mul"), where + "/mul");
      if (j.contains("involution")) {
        t.involution = index_row(j["involution"], where + "/involution");
      }
      std::string name = "tables";
      if (j.contains("name") && j["name"].is_string()) {
        name = j["name"].get<std::string>();
      }
      return std::make_shared<FiniteRing const>(
          FiniteRing::from_tables(t, name));
    }
    bad(where + "/kind", "unknown ring kind '" + kind + "'");
  }

  std::shared_ptr<FiniteModule const> module_from_json(
      json const&        j,
      std::string const& where) {
    std::string const kind = kind_of(j, where);
    if (kind == "ZmOverZn") {
      std::size_t m = natural(field(j, where, "m"), where + "/m");
      std::size_t n = natural(field(j, where, "n"), where + "/n");
      if (m == 0 || n == 0) {
        bad(where, "m and n must be positive");
      }
      return std::make_shared<FiniteModule const>(
          FiniteModule::zm_over_zn(m, n));
    }
    if (kind == "ringAsModule") {
      auto r = ring_from_json(field(j, where, "ring"), where + "/ring");
      return std::make_shared<FiniteModule const>(
          FiniteModule::ring_as_module(r));
    }
    if (kind == "tables") {
      auto r = ring_from_json(field(j, where, "ring"), where + "/ring");
      FiniteModule::Tables t;
      t.size = natural(field(j, where, "size"), where + "/size");
      t.add  = index_table(field(j, where, "add"), where + "/add");
      t.action = index_table(field(j, where, "action"), where + "/action");
      std::string name = "tables";
      if (j.contains("name") && j["name"].is_string()) {
        name = j["name"].get<std::string>();
      }
      return std::make_shared<FiniteModule const>(
          FiniteModule::from_tables(r, t, name));
    }
    bad(where + "/kind", "unknown module kind '" + kind + "'");
  }

  std::shared_ptr<FiniteRing const> load_ring(std::string_view spec) {
    if (auto text = spec_text(spec)) {
      return ring_from_json(parse_text(text->first, text->second));
    }
    if (auto r = builtin_ring(spec)) {
      return std::make_shared<FiniteRing const>(std::move(*r));
    }
    throw ConfigError("unknown ring '" + std::string(spec)
                      + "': not a builtin name or a readable file");
  }

  std::shared_ptr<FiniteModule const> load_module(std::string_view spec) {
    if (auto text = spec_text(spec)) {
      return module_from_json(parse_text(text->first, text->second));
    }
    if (spec == "trivial") {
      return std::make_shared<FiniteModule const>(
          FiniteModule::zm_over_zn(1, 2));
    }
    if (spec.starts_with("RR:")) {
      return std::make_shared<FiniteModule const>(
          FiniteModule::ring_as_module(load_ring(spec.substr(3))));
    }
    auto const slash = spec.find('/');
    if (slash != std::string_view::npos && spec.starts_with("Z")
        && spec.substr(slash + 1).starts_with("Z")) {
      auto m = parse_number(spec.substr(1, slash - 1));
      auto n = parse_number(spec.substr(slash + 2));
      if (m && n && *m > 0 && *n > 0) {
        return std::make_shared<FiniteModule const>(
            FiniteModule::zm_over_zn(*m, *n));
      }
    }
    throw ConfigError("unknown module '" + std::string(spec)
                      + "': not a builtin name or a readable file");
  }

  std::vector<CorpusMember> load_corpus(std::string_view spec) {
    auto text = spec_text(spec);
    if (!text) {
      return builtin_corpus(spec);
    }
    json const  doc     = parse_text(text->first, text->second);
    json const& members = field(doc, "", "members");
    if (!members.is_array()) {
      bad("/members", "expected an array");
    }
    std::vector<CorpusMember> out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::string const where = "/members/" + std::to_string(i);
      json const&       m     = members[i];
      CorpusMember      c;
      json const&       id    = field(m, where, "id");
      if (!id.is_string()) {
        bad(where + "/id", "expected a string");
      }
      c.id = id.get<std::string>();
      // a broken member is reported by the suite, not here
      try {
        c.module = module_from_json(field(m, where, "module"), where + "/module");
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        c.module     = nullptr;
        c.load_error = e.what();
      }
      if (m.contains("endo_involution")) {
        c.endo_involution
            = index_row(m["endo_involution"], where + "/endo_involution");
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  json ring_to_json(FiniteRing const& R) {
    auto t = R.tables();
    json j{{"kind", "tables"},
           {"name", R.name()},
           {"size", t.size},
           {"add", t.add},
           {"mul", t.mul}};
    if (t.involution) {
      j["involution"] = *t.involution;
    }
    return j;
  }

  json module_to_json(FiniteModule const& M) {
    auto t = M.tables();
    return json{{"kind", "tables"},
                {"name", M.name()},
                {"ring", ring_to_json(M.ring())},
                {"size", t.size},
                {"add", t.add},
                {"action", t.action}};
  }

  json ring_summary(FiniteRing const& R) {
    json j{{"name", R.name()},
           {"size", R.size()},
           {"commutative", R.is_commutative()},
           {"involution", R.has_involution()},
           {"idempotents", idempotents(R).members()},
           {"units", units(R).members()},
           {"von_neumann_regular", is_von_neumann_regular(R)},
           {"rickart", is_rickart(R).holds}};
    if (R.has_involution()) {
      j["projections"]  = projections(R).members();
      j["rickart_star"] = is_rickart_star(R).holds;
      j["proper_star"]  = is_proper_star(R);
    }
    return j;
  }

  json module_summary(ModuleContext const& ctx) {
    RegularityReport const reg = is_regular_module(ctx);
    json j{{"name", ctx.module().name()},
           {"ring", ctx.ring().name()},
           {"size", ctx.module().size()},
           {"dual_size", ctx.dual().size()},
           {"endo_size", ctx.endo().size()},
           {"regular", reg.regular},
           {"regular_elements", ctx.regular_elements().members()}};
    if (reg.first_failure) {
      j["first_failure"] = *reg.first_failure;
    }
    return j;
  }

  json witness_to_json(ModuleContext const* ctx, Witness const& w) {
    auto map_of = [ctx](Index f) {
      json images = json::array();
      for (ModElem x = 0; x < ctx->module().size(); ++x) {
        images.push_back(ctx->endo().apply(f, x));
      }
      return images;
    };
    return std::visit(
        [&](auto const& x) -> json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, DualWitness>) {
            json j{{"kind", "functional"}, {"phi", x.functional}};
            if (ctx) {
              json values = json::array();
              for (ModElem m = 0; m < ctx->module().size(); ++m) {
                values.push_back(ctx->dual().eval(x.functional, m));
              }
              j["values"] = values;
            }
            return j;
          } else if constexpr (std::is_same_v<T, IdemPair>) {
            json j{{"kind", "idempotents"},
                   {"f", x.f},
                   {"a", x.a},
                   {"f_projection", x.f_projection},
                   {"a_projection", x.a_projection}};
            if (ctx) {
              j["f_map"] = map_of(x.f);
            }
            return j;
          } else if constexpr (std::is_same_v<T, MapPair>) {
            json j{{"kind", "maps"}, {"f", x.f}, {"a", x.a}};
            if (ctx) {
              j["f_map"] = map_of(x.f);
            }
            return j;
          } else if constexpr (std::is_same_v<T, DirectSumWitness>) {
            return json{{"kind", "direct-sum"},
                        {"first", x.first.members()},
                        {"second", x.second.members()}};
          } else if constexpr (std::is_same_v<T, CyclicInclusion>) {
            return json{{"kind", "cyclic-inclusion"},
                        {"lhs", x.lhs.members()},
                        {"rhs", x.rhs.members()}};
          } else if constexpr (std::is_same_v<T, InnerInverse>) {
            return json{{"kind", "inner-inverse"}, {"x", x.inverse}};
          } else {
            return json{{"kind", "ring-idempotents"}, {"p", x.p}, {"q", x.q}};
          }
        },
        w);
  }

  json verdict_to_json(ModuleContext const* ctx, OrderVerdict const& v) {
    json j{{"relation", std::string(tag(v.relation))},
           {"lhs", v.lhs},
           {"rhs", v.rhs},
           {"status", std::string(to_string(v.status))},
           {"hypothesis_violated", v.hypothesis_violated}};
    if (v.witness) {
      j["witness"] = witness_to_json(ctx, *v.witness);
    }
    if (!v.note.empty()) {
      j["note"] = v.note;
    }
    return j;
  }

  json report_to_json(LawReport const& r) {
    json j{{"law", r.law},
           {"corpus", r.corpus},
           {"outcome", std::string(to_string(r.outcome))},
           {"checks", r.checks}};
    if (!r.detail.empty()) {
      j["detail"] = r.detail;
    }
    if (r.counterexample) {
      json verdicts = json::array();
      for (auto const& v : r.counterexample->verdicts) {
        verdicts.push_back(verdict_to_json(nullptr, v));
      }
      j["counterexample"] = {{"operands", r.counterexample->operands},
                             {"clause", r.counterexample->clause},
                             {"verdicts", verdicts}};
    }
    return j;
  }

}  // namespace modorder
