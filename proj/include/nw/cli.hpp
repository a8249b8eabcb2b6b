#pragma once

// Command line frontend. run() is the whole tool: it parses argv, reads the
// input files and fills a CommandResult, so tests can drive it in-process.
// Exit codes: 0 success, 1 semantic failure (invalid input, mismatched
// data), 2 usage error.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nw/bracket.hpp"
#include "nw/codec.hpp"
#include "nw/kei.hpp"
#include "nw/moves.hpp"
#include "nw/phrase.hpp"
#include "nw/presets.hpp"
#include "nw/search.hpp"
#include "nw/svg.hpp"
#include "nw/textio.hpp"

namespace nw::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Document load_document(const std::string& path) {
  Document doc = parse_document(read_file(path));
  auto rep = validate(doc.phrase, doc.data);
  if (!rep.ok()) throw error("'" + path + "' is not a valid nanophrase:\n" + rep.str());
  return doc;
}

inline std::string move_str(const HomotopyData& data, const MoveDescriptor& d) {
  std::string s = move_name(d.kind);
  if (!d.sites.empty()) {
    s += " @";
    for (size_t i = 0; i < d.sites.size(); ++i)
      s += (i ? "," : "") + std::to_string(d.sites[i]);
  }
  if (!d.slots.empty()) {
    s += " at";
    for (auto [w, o] : d.slots)
      s += " " + std::to_string(w) + ":" + std::to_string(o);
    s += " symbols";
    for (int sym : d.symbols) s += " " + data.symbol_name(sym);
  }
  return s;
}

inline nlohmann::json poly_json(const Laurent& p) {
  auto terms = nlohmann::json::array();
  for (auto [e, c] : p.pairs()) terms.push_back({e, c});
  return terms;
}

// The alpha_1 view of a phrase, when its data admits one. Custom alphabets
// whose symbols are all named 1/-1 count: the bracket reads only the values.
inline std::optional<std::pair<Nanophrase, HomotopyData>> pseudo_link_view(
    const Document& doc) {
  const std::string& name = doc.data.name();
  if (name == "alpha_1") return std::pair{doc.phrase, doc.data};
  if (name == "alpha_star") {
    DataMorphism m = projection("star_to_1");
    return std::pair{apply_morphism(m, doc.phrase), m.target};
  }
  if (name == "alpha_0") {
    DataMorphism m = projection("zero_to_1");
    return std::pair{apply_morphism(m, doc.phrase), m.target};
  }
  bool pm_named = doc.data.size() > 0;
  for (int s = 0; s < doc.data.size(); ++s) {
    const std::string& n = doc.data.symbol_name(s);
    pm_named = pm_named && (n == "1" || n == "-1");
  }
  if (pm_named) return std::pair{doc.phrase, doc.data};
  return std::nullopt;
}

// The alpha_star view used for kei colorings (alpha_0 embeds by a -> a+,
// b -> b-).
inline std::optional<Nanophrase> link_view(const Document& doc) {
  if (doc.data.name() == "alpha_star") return doc.phrase;
  if (doc.data.name() == "alpha_0")
    return apply_morphism(embedding_zero_to_star(), doc.phrase);
  return std::nullopt;
}

inline FiniteKei named_kei(const std::string& which) {
  if (which == "dihedral3") return dihedral_kei(3);
  if (which == "dihedral5") return dihedral_kei(5);
  if (which == "trivial1") return trivial_kei();
  return parse_kei(read_file(which));
}

struct BudgetFlags {
  SearchBudget budget;
  void attach(CLI::App* cmd) {
    cmd->add_option("--max-letters", budget.max_letters, "letter cap for visited phrases");
    cmd->add_option("--max-depth", budget.max_depth, "move count cap");
    cmd->add_option("--max-states", budget.max_states, "visited set cap");
    cmd->add_option("--max-consec-insertions", budget.max_consecutive_insertions,
                    "insertion rate limit");
  }
};

}  // namespace detail

inline CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out, err;

  CLI::App app{"nanoword/nanophrase toolkit"};
  app.require_subcommand(1);

  std::string file, file2, to, datum_name = "link", color, out_path;
  bool json = false, memo = false, hat = false, group = false, enumerate_flag = false;
  detail::BudgetFlags budget;

  auto* c_validate = app.add_subcommand("validate", "check a phrase file");
  c_validate->add_option("file", file)->required();
  c_validate->add_flag("--json", json);

  auto* c_inv = app.add_subcommand("invariants", "bracket, writhe, jones, colorings");
  c_inv->add_option("file", file)->required();
  c_inv->add_flag("--json", json);
  c_inv->add_flag("--memo", memo, "memoize the bracket recursion");

  auto* c_proj = app.add_subcommand("project", "project to another alphabet");
  c_proj->add_option("file", file)->required();
  c_proj->add_option("--to", to, "alpha_0 | alpha_1 | alpha_2")
      ->required()
      ->check(CLI::IsMember({"alpha_0", "alpha_1", "alpha_2"}));
  c_proj->add_flag("--json", json);

  auto* c_enc = app.add_subcommand("encode", "signed Gauss code to nanophrase");
  c_enc->add_option("file", file)->required();
  c_enc->add_flag("--json", json);

  auto* c_red = app.add_subcommand("reduce", "search for a smaller phrase");
  c_red->add_option("file", file)->required();
  c_red->add_flag("--json", json);
  budget.attach(c_red);

  auto* c_eq = app.add_subcommand("equiv", "bounded homotopy equivalence search");
  c_eq->add_option("file1", file)->required();
  c_eq->add_option("file2", file2)->required();
  c_eq->add_flag("--json", json);
  budget.attach(c_eq);

  auto* c_kei = app.add_subcommand("kei", "kei presentation / colorings / group");
  c_kei->add_option("file", file)->required();
  c_kei->add_option("--datum", datum_name, "link | curve | quasi")
      ->check(CLI::IsMember({"link", "curve", "quasi"}));
  c_kei->add_flag("--hat", hat, "glue inputs to outputs");
  c_kei->add_flag("--group", group, "emit the associated group presentation");
  c_kei->add_option("--color", color, "kei fixture name or @kei file");
  c_kei->add_flag("--enumerate", enumerate_flag, "list colorings, not just count them");
  c_kei->add_flag("--json", json);

  auto* c_chord = app.add_subcommand("chord", "render the chord diagram as SVG");
  c_chord->add_option("file", file)->required();
  c_chord->add_option("--out", out_path)->required();

  std::vector<std::string> argv_copy(args);
  try {
    std::vector<const char*> argv;
    argv.push_back("nanoword");
    for (const auto& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    result.out = app.help();
    result.exit_code = 0;
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }

  try {
    if (c_validate->parsed()) {
      Document doc = parse_document(detail::read_file(file));
      auto rep = validate(doc.phrase, doc.data);
      if (json) {
        nlohmann::json j;
        j["valid"] = rep.ok();
        j["problems"] = rep.problems;
        out << j.dump(2) << "\n";
      } else if (rep.ok()) {
        out << "valid: " << doc.phrase.letter_count() << " letters, "
            << doc.phrase.word_count() << " words\n";
      } else {
        out << rep.str();
      }
      result.exit_code = rep.ok() ? 0 : 1;
    } else if (c_inv->parsed()) {
      Document doc = detail::load_document(file);
      auto view = detail::pseudo_link_view(doc);
      if (!view)
        throw error("invariants needs a phrase over alpha_1, alpha_star or alpha_0 "
                    "(use 'kei' for quasi-links)");
      auto& [p1, d1] = *view;
      Laurent br = bracket(p1, d1, memo);
      int w = writhe(p1, d1);
      Laurent jo = Laurent::neg_t_pow(-3 * w) * br;
      nlohmann::json colorings = nlohmann::json::object();
      if (auto star = detail::link_view(doc)) {
        KeiDatum datum = kei_datum("link");
        KeiPresentation pres = presentation(*star, datum, true);
        for (const char* name : {"dihedral3", "dihedral5", "trivial1"})
          colorings[name] = count_colorings(pres, detail::named_kei(name));
      }
      if (json) {
        nlohmann::json j;
        j["bracket"] = br.str();
        j["bracket_terms"] = detail::poly_json(br);
        j["writhe"] = w;
        j["jones"] = jo.str();
        j["jones_terms"] = detail::poly_json(jo);
        if (!colorings.empty()) j["colorings"] = colorings;
        out << j.dump(2) << "\n";
      } else {
        out << "bracket: " << br.str() << "\n";
        out << "writhe: " << w << "\n";
        out << "jones: " << jo.str() << "\n";
        if (!colorings.empty()) {
          out << "colorings (hat, link datum):\n";
          for (auto it = colorings.begin(); it != colorings.end(); ++it)
            out << "  " << it.key() << ": " << it.value().get<long long>() << "\n";
        }
      }
    } else if (c_proj->parsed()) {
      Document doc = detail::load_document(file);
      DataMorphism m = [&]() {
        const std::string& from = doc.data.name();
        if (from == "alpha_star" && to == "alpha_0") return projection("star_to_0");
        if (from == "alpha_star" && to == "alpha_1") return projection("star_to_1");
        if (from == "alpha_star" && to == "alpha_2") return projection("star_to_2");
        if (from == "alpha_0" && to == "alpha_1") return projection("zero_to_1");
        throw error("no projection from '" + from + "' to '" + to + "'");
      }();
      Document projected{m.target, apply_morphism(m, doc.phrase)};
      if (json)
        out << document_json(projected).dump(2) << "\n";
      else
        out << serialize_document(projected);
    } else if (c_enc->parsed()) {
      SignedGaussCode code = parse_gauss(detail::read_file(file));
      auto rep = validate_code(code);
      if (!rep.ok()) {
        err << rep.str();
        result.exit_code = 1;
      } else {
        HomotopyData star = preset("alpha_star");
        Document doc{star, encode(code, star)};
        if (json)
          out << document_json(doc).dump(2) << "\n";
        else
          out << serialize_document(doc);
      }
    } else if (c_red->parsed()) {
      Document doc = detail::load_document(file);
      ReduceResult r = reduce(doc.phrase, doc.data, budget.budget);
      Document reduced{doc.data, r.phrase};
      if (json) {
        nlohmann::json j;
        j["reduced"] = document_json(reduced);
        j["letters"] = r.phrase.letter_count();
        auto path = nlohmann::json::array();
        for (const auto& d : r.path) path.push_back(detail::move_str(doc.data, d));
        j["path"] = path;
        j["budget_exhausted"] = r.budget_exhausted;
        out << j.dump(2) << "\n";
      } else {
        out << serialize_document(reduced);
        out << "path (" << r.path.size() << " moves):\n";
        for (const auto& d : r.path) out << "  " << detail::move_str(doc.data, d) << "\n";
        if (r.budget_exhausted) out << "note: budget exhausted, best so far\n";
      }
    } else if (c_eq->parsed()) {
      Document a = detail::load_document(file);
      Document b = detail::load_document(file2);
      if (!(a.data == b.data))
        throw error("phrases are over different homotopy data");
      EquivResult r = equivalent(a.phrase, b.phrase, a.data, budget.budget);
      nlohmann::json inv = nlohmann::json::object();
      bool distinguished = false;
      auto va = detail::pseudo_link_view(a), vb = detail::pseudo_link_view(b);
      if (va && vb) {
        Laurent ja = jones(va->first, va->second), jb = jones(vb->first, vb->second);
        inv["jones"] = {ja.str(), jb.str()};
        distinguished = distinguished || !(ja == jb);
      }
      auto la = detail::link_view(a), lb = detail::link_view(b);
      if (la && lb) {
        KeiDatum datum = kei_datum("link");
        long long ca = count_colorings(presentation(*la, datum, true), dihedral_kei(3));
        long long cb = count_colorings(presentation(*lb, datum, true), dihedral_kei(3));
        inv["dihedral3"] = {ca, cb};
        distinguished = distinguished || ca != cb;
      }
      if (json) {
        nlohmann::json j;
        j["status"] = r.status == EquivStatus::equivalent ? "equivalent" : "unknown";
        auto path = nlohmann::json::array();
        for (const auto& d : r.path) path.push_back(detail::move_str(a.data, d));
        j["path"] = path;
        j["invariants"] = inv;
        j["distinguished"] = distinguished;
        out << j.dump(2) << "\n";
      } else if (r.status == EquivStatus::equivalent) {
        out << "equivalent (" << r.path.size() << " moves)\n";
        for (const auto& d : r.path) out << "  " << detail::move_str(a.data, d) << "\n";
      } else {
        out << "unknown (search exhausted)\n";
        for (auto it = inv.begin(); it != inv.end(); ++it)
          out << "  " << it.key() << ": " << it.value()[0] << " vs " << it.value()[1]
              << "\n";
        if (distinguished) out << "  distinguished by invariants: not equivalent\n";
      }
      result.exit_code = r.status == EquivStatus::equivalent ? 0 : 1;
    } else if (c_kei->parsed()) {
      Document doc = detail::load_document(file);
      KeiDatum datum = kei_datum(datum_name);
      if (!(datum.data() == doc.data))
        throw error("datum '" + datum_name + "' expects phrases over " +
                    datum.data().name());
      KeiPresentation pres = presentation(doc.phrase, datum, hat);
      nlohmann::json j;
      if (!json) out << pres.str();
      j["generators"] = pres.gen_names;
      auto rels = nlohmann::json::array();
      for (const auto& rel : pres.relations) rels.push_back(pres.relation_str(rel));
      for (const auto& [a, b] : pres.closures)
        rels.push_back(pres.gen_names[a] + " = " + pres.gen_names[b]);
      j["relations"] = rels;
      if (!color.empty()) {
        FiniteKei k = detail::named_kei(color);
        long long count = count_colorings(pres, k);
        j["colorings"] = count;
        j["kei"] = k.name;
        if (!json) out << "colorings by " << k.name << ": " << count << "\n";
        if (enumerate_flag) {
          auto all = enumerate_colorings(pres, k);
          auto arr = nlohmann::json::array();
          for (const auto& v : all) arr.push_back(v);
          j["coloring_list"] = arr;
          if (!json)
            for (const auto& v : all) {
              out << " ";
              for (int x : v) out << " " << x;
              out << "\n";
            }
        }
      }
      if (group) {
        GroupPresentation gp = gamma_group(pres);
        j["group"] = gp.str();
        if (!json) out << "group: " << gp.str() << "\n";
      }
      if (json) out << j.dump(2) << "\n";
    } else if (c_chord->parsed()) {
      Document doc = detail::load_document(file);
      std::string svg = chord_svg(doc.phrase, doc.data);
      std::ofstream of(out_path, std::ios::binary);
      if (!of) throw error("cannot write '" + out_path + "'");
      of << svg;
      out << "wrote " << out_path << "\n";
    }
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    result.exit_code = 1;
  } catch (const error& e) {
    err << e.what() << "\n";
    result.exit_code = 1;
  }

  result.out = out.str();
  result.err += err.str();
  return result;
}

}  // namespace nw::cli
