// Command-line front end: verify scenario documents, compute radicals and
// crossed products, run the theorem checkers, and emit the built-in catalog.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hopfrad/document.hpp"

namespace hf = hopfrad;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hf::Error::parse("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hf::Error::internal("IoError", "cannot write '" + path + "'");
  out << content;
}

template <class Fn>
int with_scenarios(const hf::Document& doc, Fn&& fn) {
  if (doc.characteristic == 0) return fn(hf::scenarios_from_document<hf::Rat>(doc));
  return fn(hf::scenarios_from_document<hf::Fp>(doc));
}

template <class S>
std::string pretty_row(const hf::RowVec<S>& v, const hf::AlgebraDef<S>& a) {
  std::string out;
  for (hf::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = v(i).str();
    out += (c == "1" ? "" : c + "*") + a.label(i);
  }
  return out.empty() ? "0" : out;
}

template <class S>
void print_subspace(const hf::Subspace<S>& v, const hf::AlgebraDef<S>& a) {
  std::cout << "ambient=" << v.ambient() << " dim=" << v.dim() << "\n";
  for (hf::Index i = 0; i < v.dim(); ++i) {
    hf::RowVec<S> row = v.basis().row(i);
    std::cout << "  basis[" << i << "] = [";
    for (hf::Index j = 0; j < row.size(); ++j) std::cout << (j ? ", " : "") << row(j).str();
    std::cout << "]  # " << pretty_row(row, a) << "\n";
  }
}

template <class S>
const hf::Scenario<S>& find_scenario(const std::vector<hf::Scenario<S>>& scens, const std::string& name) {
  for (const auto& s : scens)
    if (s.name == name) return s;
  throw hf::Error::parse("no scenario named '" + name + "'");
}

template <class S>
int do_radical(const std::vector<hf::Scenario<S>>& scens, const std::string& name, const std::string& kind) {
  const auto& scen = find_scenario(scens, name);
  const auto& b = scen.bundle;
  hf::Subspace<S> value;
  std::string method;
  if (kind == "rj" || kind == "rb") {
    auto rep = kind == "rj" ? hf::jacobson_radical(b.target) : hf::baer_radical(b.target);
    std::cout << "kind=" << hf::radical_kind_name(rep.kind) << " method=" << hf::radical_method_name(rep.method)
              << " nilpotency_index=" << rep.nilpotency_index << "\n";
    print_subspace(rep.value, b.target);
    return 0;
  }
  if (kind == "rHb") {
    value = hf::r_hb(hf::smash_tower(b));
    method = "colon_with_smash_crosscheck";
  } else if (kind == "rHj") {
    value = hf::r_hj(hf::smash_tower(b));
    method = "smash_intersection_with_colon_crosscheck";
  } else if (kind == "rjH") {
    value = hf::r_jh(b);
    method = "colon";
  } else if (kind == "rHn") {
    value = hf::r_hn(b);
    method = "element_enumeration";
  } else if (kind == "wH") {
    value = hf::w_h_oracle(b);
    method = "m_sequence_graph";
  } else {
    throw hf::Error::parse("unknown radical kind '" + kind + "'");
  }
  auto nilp = hf::nilpotency_index(b.target, value, static_cast<int>(b.rdim()) + 1);
  std::cout << "kind=" << kind << " method=" << method << " nilpotency_index="
            << (nilp ? std::to_string(*nilp) : std::string("none")) << "\n";
  print_subspace(value, b.target);
  return 0;
}

template <class S>
int do_cross(const std::vector<hf::Scenario<S>>& scens, const std::string& name, bool doubled) {
  const auto& scen = find_scenario(scens, name);
  auto cp = hf::crossed_product(scen.bundle);
  const hf::AlgebraDef<S>* alg = &cp.algebra;
  hf::CrossedProduct<S> dcp = doubled ? hf::double_product(cp) : cp;
  if (doubled) alg = &dcp.algebra;
  std::cout << "dim=" << alg->dim << "\n";
  for (hf::Index i = 0; i < alg->dim; ++i) std::cout << "basis[" << i << "] = " << alg->label(i) << "\n";
  for (hf::Index i = 0; i < alg->dim; ++i)
    for (hf::Index j = 0; j < alg->dim; ++j)
      for (hf::Index k = 0; k < alg->dim; ++k) {
        const S& c = alg->table[static_cast<std::size_t>(i)](j, k);
        if (!c.is_zero()) std::cout << "[" << i << ", " << j << ", " << k << "] " << c.str() << "\n";
      }
  return 0;
}

template <class S>
int do_check_single(const std::vector<hf::Scenario<S>>& scens, const std::string& theorem,
                    const std::string& name) {
  const auto& scen = find_scenario(scens, name);
  hf::ScenarioLab<S> lab(scen);
  hf::VerdictReport rep = hf::run_checker<S>(theorem, lab);
  bool pass = rep.observed == rep.expected;
  std::cout << rep.observed << (pass ? " (expected)" : " (UNEXPECTED)") << "\n";
  if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
  return pass ? 0 : static_cast<int>(hf::Errc::unexpected_verdict);
}

int report_and_exit(const std::vector<hf::VerdictReport>& reports, const std::string& json_path) {
  std::cout << hf::report_table(reports);
  if (!json_path.empty()) write_file(json_path, hf::reports_jsonl(reports));
  int mismatches = 0;
  for (const auto& r : reports)
    if (r.observed != r.expected) ++mismatches;
  std::cout << reports.size() << " checks, " << mismatches << " unexpected verdicts\n";
  return mismatches == 0 ? 0 : static_cast<int>(hf::Errc::unexpected_verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with Hopf algebra actions, crossed products and their radicals"};
  app.require_subcommand(1);

  std::string path, scenario, kind, theorem, json_path, emit_dir;
  bool doubled = false, all = false, list = false;
  int threads = 1;

  auto* verify = app.add_subcommand("verify", "parse a scenario document and run all structural verifications");
  verify->add_option("path", path)->required();

  auto* radical = app.add_subcommand("radical", "print a radical of a scenario's base algebra");
  radical->add_option("path", path)->required();
  radical->add_option("--scenario", scenario)->required();
  radical->add_option("--kind", kind)->required()->check(CLI::IsMember({"rj", "rb", "rHb", "rHj", "rjH", "rHn", "wH"}));

  auto* cross = app.add_subcommand("cross", "print structure constants of the (double) crossed product");
  cross->add_option("path", path)->required();
  cross->add_option("--scenario", scenario)->required();
  cross->add_flag("--double", doubled);

  auto* check = app.add_subcommand("check", "run theorem checkers on a document or the built-in catalog");
  check->add_option("path", path);
  check->add_option("--theorem", theorem);
  check->add_option("--scenario", scenario);
  check->add_flag("--all", all);
  check->add_option("--json", json_path, "also write one JSON record per verdict to this file");
  check->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "list built-in scenarios or emit them as documents");
  catalog->add_flag("--list", list);
  catalog->add_option("--emit", emit_dir, "directory for catalog-gf2.json / catalog-gf3.json / catalog-q.json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      hf::Document doc = hf::parse_document(read_file(path));
      return with_scenarios(doc, [](const auto& scens) {
        std::cout << "ok: " << scens.size() << " scenarios verified\n";
        return 0;
      });
    }
    if (radical->parsed()) {
      hf::Document doc = hf::parse_document(read_file(path));
      return with_scenarios(doc, [&](const auto& scens) { return do_radical(scens, scenario, kind); });
    }
    if (cross->parsed()) {
      hf::Document doc = hf::parse_document(read_file(path));
      return with_scenarios(doc, [&](const auto& scens) { return do_cross(scens, scenario, doubled); });
    }
    if (check->parsed()) {
      if (all) {
        std::vector<hf::VerdictReport> reports;
        if (path.empty()) {
          reports = hf::run_catalog(threads);
        } else {
          hf::Document doc = hf::parse_document(read_file(path));
          with_scenarios(doc, [&](const auto& scens) {
            reports = hf::run_all_on(scens, threads);
            return 0;
          });
        }
        return report_and_exit(reports, json_path);
      }
      if (theorem.empty() || scenario.empty())
        throw hf::Error::parse("check needs either --all or both --theorem and --scenario");
      if (path.empty()) {
        for (std::uint32_t p : {2u, 3u}) {
          auto scens = hf::catalog_for<hf::Fp>(hf::gf(p));
          for (const auto& s : scens)
            if (s.name == scenario) return do_check_single(scens, theorem, scenario);
        }
        auto scens = hf::catalog_for<hf::Rat>(hf::rationals());
        return do_check_single(scens, theorem, scenario);
      }
      hf::Document doc = hf::parse_document(read_file(path));
      return with_scenarios(doc, [&](const auto& scens) { return do_check_single(scens, theorem, scenario); });
    }
    if (catalog->parsed()) {
      if (list) {
        auto show = [](const auto& scens, const char* field) {
          for (const auto& s : scens) {
            std::cout << s.name << "  field=" << field << "  tags=";
            bool first = true;
            for (hf::Tag t : s.tags) {
              std::cout << (first ? "" : ",") << hf::tag_name(t);
              first = false;
            }
            std::cout << "\n";
          }
        };
        show(hf::catalog_for<hf::Fp>(hf::gf(2)), "GF(2)");
        show(hf::catalog_for<hf::Fp>(hf::gf(3)), "GF(3)");
        show(hf::catalog_for<hf::Rat>(hf::rationals()), "Q");
        return 0;
      }
      if (emit_dir.empty()) throw hf::Error::parse("catalog needs --list or --emit DIR");
      std::filesystem::create_directories(emit_dir);
      auto emit_one = [&](const std::string& file, const std::string& body) {
        std::string full = emit_dir + "/" + file;
        write_file(full, body);
        std::cout << full << "\n";
      };
      emit_one("catalog-gf2.json",
               hf::emit_document(hf::document_from_scenarios<hf::Fp>(2, hf::catalog_for<hf::Fp>(hf::gf(2)))));
      emit_one("catalog-gf3.json",
               hf::emit_document(hf::document_from_scenarios<hf::Fp>(3, hf::catalog_for<hf::Fp>(hf::gf(3)))));
      emit_one("catalog-q.json",
               hf::emit_document(hf::document_from_scenarios<hf::Rat>(0, hf::catalog_for<hf::Rat>(hf::rationals()))));
      return 0;
    }
  } catch (const hf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
