// Command-line front end for the plcomb library.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "plc/chambers.hpp"
#include "plc/errors.hpp"
#include "plc/json_io.hpp"
#include "plc/lusztig_cone.hpp"
#include "plc/quivers.hpp"
#include "plc/rectangles.hpp"
#include "plc/regions.hpp"
#include "plc/verification.hpp"
#include "plc/weyl_words.hpp"

namespace {

using plc::json::json;

constexpr int kDomainFailure = 1;
constexpr int kVerificationFailure = 2;

struct VerificationFailed {};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

plc::ReducedWord parse_word(const std::string& text, std::optional<int> rank) {
  return plc::ReducedWord::parse(text, rank);
}

/// Letters without the reducedness check, for `words check`.
std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> letters;
  const bool commas = text.find(',') != std::string::npos;
  std::size_t p = 0;
  while (p < text.size()) {
    if (text[p] < '0' || text[p] > '9') {
      throw plc::DomainError("malformed word: character '" + std::string(1, text[p]) + "' at position " +
                             std::to_string(p + 1));
    }
    if (!commas) {
      letters.push_back(text[p] - '0');
      ++p;
      continue;
    }
    std::size_t q = p;
    while (q < text.size() && text[q] != ',') {
      if (text[q] < '0' || text[q] > '9') {
        throw plc::DomainError("malformed word: character '" + std::string(1, text[q]) + "' at position " +
                               std::to_string(q + 1));
      }
      ++q;
    }
    letters.push_back(std::stoi(text.substr(p, q - p)));
    p = q + 1;
  }
  return letters;
}

plc::RenderFormat render_format(const std::string& name) {
  if (name == "ascii") return plc::RenderFormat::ascii;
  if (name == "svg") return plc::RenderFormat::svg;
  throw plc::DomainError("unknown render format '" + name + "'");
}

plc::PartialQuiver parse_quiver(const std::string& text, std::optional<int> rank) {
  auto q = plc::PartialQuiver::parse(text);
  if (rank && *rank != q.rank()) {
    throw plc::DomainError("quiver " + text + " has rank " + std::to_string(q.rank()) + ", not " +
                           std::to_string(*rank));
  }
  return q;
}

json moves_json(const plc::ReducedWord& start, const std::vector<plc::Move>& path) {
  json steps = json::array();
  plc::ReducedWord w = start;
  for (const auto& m : path) {
    w = plc::apply_move(w, m);
    steps.push_back(json{{"kind", m.kind == plc::MoveKind::braid ? "braid" : "commutation"},
                         {"position", m.position + 1},
                         {"word", w.to_string()}});
  }
  return steps;
}

/// Quiver texts may start with '-'; glue them to their option so the
/// parser does not read them as flags.
std::vector<std::string> glue_quiver_values(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--quiver" && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-') {
      out.push_back("--quiver=" + args[++i]);
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, Lusztig cones, partial quivers, rectangle calculus and regions of linearity in type A"};
  app.require_subcommand(1);

  std::optional<int> rank;
  std::string word, from, to, quiver, strategy = "front", render, json_file, format = "text";
  bool count = false, with_sets = false, histogram = false, match = false, orthant = false, graph = false;
  std::function<void()> action;

  // words
  auto* words = app.add_subcommand("words", "Reduced words for the longest element");
  words->require_subcommand(1);
  auto* w_enum = words->add_subcommand("enumerate", "All reduced words of a rank (1..5)");
  w_enum->add_option("--rank", rank, "Rank n of A_n")->required();
  w_enum->add_flag("--count", count, "Print only the count");
  w_enum->callback([&] {
    action = [&] {
      const auto all = plc::enumerate_reduced_words(*rank);
      json out{{"rank", *rank}, {"count", all.size()}};
      if (!count) {
        json list = json::array();
        for (const auto& w : all) list.push_back(w.to_string());
        out["words"] = list;
      }
      emit(out);
    };
  });
  auto* w_classes = words->add_subcommand("classes", "Commutation classes of a rank (1..5)");
  w_classes->add_option("--rank", rank, "Rank n of A_n")->required();
  w_classes->add_flag("--count", count, "Print only the count");
  w_classes->callback([&] {
    action = [&] {
      const auto all = plc::commutation_classes(*rank);
      json out{{"rank", *rank}, {"count", all.size()}};
      if (!count) {
        json list = json::array();
        for (const auto& c : all) list.push_back(json{{"representative", c.representative.to_string()}, {"size", c.size}});
        out["classes"] = list;
      }
      emit(out);
    };
  });
  auto* w_check = words->add_subcommand("check", "Is a word reduced, and is it a word for w0?");
  w_check->add_option("--word", word, "Digits or comma-separated letters")->required();
  w_check->add_option("--rank", rank, "Rank (default: largest letter)");
  w_check->callback([&] {
    action = [&] {
      const auto letters = parse_letters(word);
      int n = rank.value_or(letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end()));
      const auto r = plc::is_reduced(letters, n);
      emit(json{{"word", word}, {"rank", n}, {"reduced", r.reduced}, {"longest", r.is_longest}});
    };
  });
  auto* w_path = words->add_subcommand("path", "A sequence of moves between two reduced words");
  w_path->add_option("--from", from, "Source word")->required();
  w_path->add_option("--to", to, "Target word")->required();
  w_path->add_option("--strategy", strategy, "front or back")->check(CLI::IsMember({"front", "back"}));
  w_path->callback([&] {
    action = [&] {
      const auto a = parse_word(from, std::nullopt);
      const auto b = parse_word(to, a.rank());
      const auto path = plc::find_move_path(
          a, b, strategy == "back" ? plc::PathStrategy::peel_back : plc::PathStrategy::peel_front);
      emit(json{{"from", a.to_string()}, {"to", b.to_string()}, {"length", path.size()}, {"moves", moves_json(a, path)}});
    };
  });
  auto* w_roots = words->add_subcommand("roots", "Positive-root order of a reduced word");
  w_roots->add_option("--word", word, "Reduced word for w0")->required();
  w_roots->callback([&] {
    action = [&] {
      const auto w = parse_word(word, rank);
      json roots = json::array();
      for (const auto& r : plc::positive_root_order(w)) roots.push_back(plc::json::to_json(r));
      emit(json{{"word", w.to_string()}, {"roots", roots}});
    };
  });
  auto* w_standard = words->add_subcommand("standard", "The words j and j'");
  w_standard->add_option("--rank", rank, "Rank n of A_n")->required();
  w_standard->callback([&] {
    action = [&] {
      const auto [j, jp] = plc::standard_words(*rank);
      emit(json{{"rank", *rank}, {"j", j.to_string()}, {"j_prime", jp.to_string()}});
    };
  });
  auto* w_graph = words->add_subcommand("graph", "Commutation classes joined by single braid moves");
  w_graph->add_option("--rank", rank, "Rank n of A_n")->required();
  w_graph->callback([&] { action = [&] { emit(plc::json::to_json(plc::class_graph(*rank))); }; });

  // chambers
  auto* chambers = app.add_subcommand("chambers", "Chamber sets of a wiring diagram");
  chambers->add_option("--word", word, "Reduced word for w0")->required();
  chambers->add_option("--render", render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  chambers->callback([&] {
    action = [&] {
      const auto w = parse_word(word, rank);
      if (!render.empty()) {
        std::cout << plc::render_wiring(w, render_format(render));
        return;
      }
      json sets = json::array();
      for (const auto& c : plc::chamber_sets(w)) sets.push_back(plc::json::to_json(c));
      emit(json{{"word", w.to_string()}, {"chamber_sets", sets}});
    };
  });

  // quivers
  auto* quivers = app.add_subcommand("quivers", "Partial quivers of a reduced word, or of a rank");
  auto* q_word = quivers->add_option("--word", word, "Reduced word for w0");
  auto* q_rank = quivers->add_option("--rank", rank, "Enumerate all partial quivers of this rank");
  q_word->excludes(q_rank);
  quivers->add_flag("--with-chamber-sets", with_sets, "Pair each quiver with its chamber set");
  quivers->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  quivers->callback([&] {
    action = [&] {
      std::vector<plc::PartialQuiver> list;
      if (!word.empty()) {
        list = plc::quivers_for_word(parse_word(word, std::nullopt));
      } else if (rank) {
        list = plc::enumerate_partial_quivers(*rank);
      } else {
        throw plc::DomainError("quivers needs --word or --rank");
      }
      if (format == "json") {
        json out = json::array();
        for (const auto& q : list) {
          json item{{"quiver", q.to_string()}};
          if (with_sets) item["chamber_set"] = plc::chamber_set_from_quiver(q);
          out.push_back(item);
        }
        emit(out);
        return;
      }
      for (const auto& q : list) {
        std::cout << q.to_string();
        if (with_sets) std::cout << "  {" << plc::chamber_label(plc::chamber_set_from_quiver(q), q.rank()) << "}";
        std::cout << "\n";
      }
    };
  });

  // cone
  auto* cone = app.add_subcommand("cone", "Lusztig cones");
  cone->require_subcommand(1);
  auto* c_lusztig = cone->add_subcommand("lusztig", "Inequalities of the Lusztig cone");
  c_lusztig->add_option("--word", word, "Reduced word for w0")->required();
  c_lusztig->callback([&] { action = [&] { emit(plc::json::to_json(plc::lusztig_cone(parse_word(word, rank)))); }; });
  auto* c_rays = cone->add_subcommand("rays", "Extreme rays of the Lusztig cone");
  c_rays->add_option("--word", word, "Reduced word for w0")->required();
  c_rays->callback([&] {
    action = [&] {
      const auto w = parse_word(word, rank);
      emit(json{{"word", w.to_string()}, {"cone", plc::json::to_json(plc::spanning_rays(w))}});
    };
  });

  // rectangles
  auto* rects = app.add_subcommand("rectangles", "Rectangle calculus of a partial quiver");
  rects->add_option("--quiver", quiver, "Text form over {L,R,-}, edges n..2 left to right")->required();
  rects->add_option("--rank", rank, "Rank (default: text length + 1)");
  rects->add_option("--render", render, "svg or ascii")->check(CLI::IsMember({"ascii", "svg"}));
  rects->callback([&] {
    action = [&] {
      const auto q = parse_quiver(quiver, rank);
      const auto cfg = plc::configuration(q);
      if (render == "svg") {
        std::cout << plc::render_configuration_svg(cfg);
      } else if (render == "ascii") {
        std::cout << plc::render_configuration_ascii(cfg);
      } else {
        emit(plc::json::to_json(cfg, q));
      }
    };
  });

  // regions
  auto* regions = app.add_subcommand("regions", "Regions of linearity of the map from j to j'");
  regions->add_option("--rank", rank, "Rank n of A_n")->required();
  regions->add_flag("--histogram", histogram, "Facet-count histogram");
  regions->add_flag("--match-classes", match, "Match commutation classes with minimal regions");
  regions->add_flag("--orthant", orthant, "Facet counts of regions intersected with the orthant");
  regions->add_flag("--graph", graph, "Compare the class graph with the minimal-region graph");
  regions->add_option("--strategy", strategy, "Move path: front or back")->check(CLI::IsMember({"front", "back"}));
  regions->add_option("--json", json_file, "Write the atlas to this file");
  regions->callback([&] {
    action = [&] {
      const auto atlas =
          plc::standard_atlas(*rank, strategy == "back" ? plc::PathStrategy::peel_back : plc::PathStrategy::peel_front);
      json out{{"rank", *rank},
               {"source", atlas.source.to_string()},
               {"target", atlas.target.to_string()},
               {"path_length", atlas.path.size()},
               {"cells", atlas.cells.size()},
               {"regions", atlas.regions.size()}};
      if (histogram) out["histogram"] = plc::json::to_json(plc::facet_histogram(atlas));
      std::optional<plc::BijectionReport> report;
      if (match || graph) report = plc::match_spanned_regions(atlas);
      if (match) out["matching"] = plc::json::to_json(*report, atlas);
      if (orthant) out["orthant"] = plc::json::to_json(plc::orthant_restriction_analysis(atlas), atlas);
      if (graph) {
        const auto rg = plc::region_graph(atlas, true);
        const auto iso = plc::compare_graphs(plc::class_graph(*rank), rg, *report);
        out["graph"] = json{{"class_edges", iso.class_edges},
                            {"region_edges", iso.region_edges},
                            {"preserved", iso.preserved},
                            {"isomorphic", iso.isomorphic}};
      }
      if (!json_file.empty()) {
        std::ofstream f(json_file);
        if (!f) throw plc::DomainError("cannot write " + json_file);
        f << plc::json::to_json(atlas).dump(2) << "\n";
      }
      emit(out);
    };
  });

  // verify
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Golden-value and property suites");
  verify->add_option("suite", suite, "a2, a3, a4 or properties")
      ->required()
      ->check(CLI::IsMember({"a2", "a3", "a4", "properties"}));
  verify->callback([&] {
    action = [&] {
      const auto rep = plc::run_suite(suite);
      json checks = json::array();
      for (const auto& c : rep.checks) {
        std::cerr << (c.pass ? "PASS " : (c.informational ? "INFO " : "FAIL ")) << c.name << ": expected " << c.expected
                  << ", actual " << c.actual << "\n";
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"informational", c.informational},
                              {"expected", c.expected},
                              {"actual", c.actual}});
      }
      emit(json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}});
      if (!rep.passed()) throw VerificationFailed{};
    };
  });

  // render
  auto* rnd = app.add_subcommand("render", "Draw a wiring diagram or a rectangle configuration");
  rnd->add_option("--format", render, "svg or ascii")->required()->check(CLI::IsMember({"ascii", "svg"}));
  auto* r_word = rnd->add_option("--word", word, "Reduced word: draw its wiring diagram");
  auto* r_quiver = rnd->add_option("--quiver", quiver, "Partial quiver: draw its rectangle configuration");
  r_word->excludes(r_quiver);
  rnd->callback([&] {
    action = [&] {
      if (!word.empty()) {
        std::cout << plc::render_wiring(parse_word(word, std::nullopt), render_format(render));
      } else if (!quiver.empty()) {
        const auto cfg = plc::configuration(parse_quiver(quiver, std::nullopt));
        std::cout << (render == "svg" ? plc::render_configuration_svg(cfg) : plc::render_configuration_ascii(cfg));
      } else {
        throw plc::DomainError("render needs --word or --quiver");
      }
    };
  });

  try {
    auto args = glue_quiver_values(argc, argv);
    std::vector<char*> ptrs;
    for (auto& a : args) ptrs.push_back(a.data());
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kDomainFailure;
  }
  try {
    if (action) action();
  } catch (const VerificationFailed&) {
    return kVerificationFailure;
  } catch (const plc::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return 0;
}
