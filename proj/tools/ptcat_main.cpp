#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptcat/catext.hpp"
#include "ptcat/category_io.hpp"
#include "ptcat/dhr.hpp"
#include "ptcat/fusion.hpp"
#include "ptcat/lattice.hpp"
#include "ptcat/models.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ptcat::CategoryFileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::vector<ptcat::Report>& reports, const std::string& format) {
  if (format == "json")
    std::cout << ptcat::render_reports_json(reports);
  else
    std::cout << ptcat::render_reports_text(reports);
}

bool all_ok(const std::vector<ptcat::Report>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

ptcat::GramMatrix load_gram(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty() && !path.empty())
    throw std::invalid_argument("give either --gram or --gram-file, not both");
  if (!inline_text.empty()) return ptcat::parse_gram(inline_text);
  if (!path.empty()) return ptcat::parse_gram(read_file(path));
  throw std::invalid_argument("a Gram matrix is required (--gram or --gram-file)");
}

// Largest eigenvalue magnitude of the fusion matrix of label i, by power
// iteration on its square (the spectrum can be symmetric around zero).
// Display only; never used in any equality decision.
double quantum_dimension(const ptcat::FusionData& d, std::size_t i) {
  const std::size_t L = d.size();
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> w(L, 0.0);
    for (std::size_t j = 0; j < L; ++j)
      for (std::size_t k = 0; k < L; ++k) w[k] += d.n(i, j, k) * v[j];
    return w;
  };
  std::vector<double> v(L, 1.0);
  double norm = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<double> w = apply(apply(v));
    norm = 0.0;
    for (double x : w) norm = std::max(norm, std::abs(x));
    if (norm == 0.0) return 0.0;
    for (double& x : w) x /= norm;
    v = std::move(w);
  }
  return std::sqrt(norm);
}

int run_verify(const std::string& path, const std::string& format) {
  ptcat::FusionData data = ptcat::parse_category(read_file(path));
  auto reports = ptcat::verify_all(data);
  if (format != "json" && !ptcat::is_pointed(data)) {
    std::cout << "quantum dimensions (numeric, display only):\n";
    for (std::size_t i = 0; i < data.size(); ++i)
      std::cout << "  " << data.labels[i] << "  " << quantum_dimension(data, i) << "\n";
  }
  emit(reports, format);
  return all_ok(reports) ? kExitPass : kExitVerifyFail;
}

void print_lattice_summary(const ptcat::DiscriminantGroup& group, const ptcat::FusionData& data) {
  std::cout << "discriminant group: ";
  if (group.invariant_factors().empty()) {
    std::cout << "trivial\n";
  } else {
    for (std::size_t i = 0; i < group.invariant_factors().size(); ++i) {
      if (i) std::cout << " x ";
      std::cout << "Z/" << group.invariant_factors()[i];
    }
    std::cout << "\n";
  }
  std::cout << "order: " << group.order() << "\n";
  std::cout << "cyclotomic order: " << data.cyclotomic_order << "\n";
  auto md = ptcat::pointed_modular_data(data);
  std::cout << "labels / q / twist:\n";
  auto elems = group.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto tw = data.twists[i].approx();
    std::cout << "  " << group.label(elems[i]) << "  q=" << group.q_value(elems[i]).get_str()
              << "  twist=" << data.twists[i].str() << " [" << tw.real()
              << (tw.imag() < 0 ? "" : "+") << tw.imag() << "i]\n";
  }
  std::cout << "S matrix (unnormalized):\n";
  for (const auto& row : md.s) {
    std::cout << "  ";
    for (const auto& v : row) std::cout << v.str() << "  ";
    std::cout << "\n";
  }
  std::cout << "T diagonal:";
  for (const auto& v : md.t) std::cout << " " << v.str();
  std::cout << "\n";
  auto g = md.gauss_sum.approx();
  std::cout << "Gauss sum: " << md.gauss_sum.str() << " [" << g.real()
            << (g.imag() < 0 ? "" : "+") << g.imag() << "i]\n";
}

int run_lattice(const std::string& gram_text, const std::string& gram_file,
                const std::string& emit_path, const std::string& format) {
  auto gram = load_gram(gram_text, gram_file);
  auto group = ptcat::discriminant_group(gram);
  auto data = ptcat::build_pointed_mtc(group);
  auto reports = ptcat::verify_all(data);
  if (format != "json") print_lattice_summary(group, data);
  emit(reports, format);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path, std::ios::binary);
    if (!out) throw ptcat::CategoryFileError("cannot write " + emit_path);
    out << ptcat::emit_category(data);
  }
  return all_ok(reports) ? kExitPass : kExitVerifyFail;
}

int run_minimal_model(long m, const std::string& format) {
  auto table = ptcat::minimal_model(m);
  if (format == "json") {
    std::ostringstream os;
    os << "{\n  \"m\": " << table.m << ",\n  \"central_charge\": \""
       << table.central_charge.get_str() << "\",\n  \"weights\": [";
    for (std::size_t i = 0; i < table.reduced.size(); ++i) {
      const auto& e = table.reduced[i];
      os << (i ? ", " : "") << "{\"r\": " << e.r << ", \"s\": " << e.s << ", \"h\": \""
         << e.h.get_str() << "\"}";
    }
    os << "]\n}\n";
    std::cout << os.str();
  } else {
    std::cout << "m = " << table.m << ", c = " << table.central_charge.get_str() << "\n";
    std::cout << "(r,s)  h  twist:\n";
    for (const auto& e : table.reduced) {
      auto tw = e.twist.approx();
      std::cout << "  (" << e.r << "," << e.s << ")  " << e.h.get_str() << "  "
                << e.twist.str() << " [" << tw.real() << (tw.imag() < 0 ? "" : "+")
                << tw.imag() << "i]\n";
    }
    std::cout << "generating labels:";
    for (const auto& [r, s] : table.generating_set) std::cout << " (" << r << "," << s << ")";
    std::cout << "\n";
  }
  return kExitPass;
}

int run_catext(const std::string& gram_text, const std::string& gram_file, std::size_t max_len,
               std::size_t trials, std::uint64_t seed, const std::string& format) {
  auto model = ptcat::build_pointed_model(load_gram(gram_text, gram_file));
  std::vector<ptcat::Report> reports;
  reports.push_back(ptcat::catext_axiom_suite(model));
  reports.push_back(ptcat::hexagon_derivation_suite(model));
  std::vector<ptcat::DiscriminantGroup::Elem> gens;
  for (const auto& e : model->group.elements())
    if (!model->group.is_zero(e)) {
      gens.push_back(e);
      break;
    }
  reports.push_back(ptcat::closure_from_generators(model, gens).report);
  reports.push_back(ptcat::confluence_trials(model, trials, max_len, seed));
  emit(reports, format);
  return all_ok(reports) ? kExitPass : kExitVerifyFail;
}

int run_dhr(const std::string& gram_text, const std::string& gram_file, std::size_t trials,
            std::uint64_t seed, const std::string& format) {
  ptcat::DhrContext ctx{ptcat::build_pointed_model(load_gram(gram_text, gram_file))};
  std::vector<ptcat::Report> reports{ptcat::verify_statistics_braiding(ctx, trials, seed)};
  emit(reports, format);
  return all_ok(reports) ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of pointed braided tensor categories"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "validate a category file");
  std::string verify_path;
  verify->add_option("path", verify_path, "category file")->required();

  auto* lattice = app.add_subcommand("lattice", "build and check the category of an even lattice");
  std::string gram_text, gram_file, emit_path;
  lattice->add_option("--gram", gram_text, "Gram matrix, rows separated by ';'");
  lattice->add_option("--gram-file", gram_file, "file with the Gram matrix");
  lattice->add_option("--emit", emit_path, "write the category file here");

  auto* mm = app.add_subcommand("minimal-model", "discrete-series weight table");
  long m_param = 0;
  mm->add_option("--m", m_param, "series index (>= 2)")->required();

  auto* catext = app.add_subcommand("catext", "word-calculus axiom and property suites");
  std::string cx_gram, cx_gram_file;
  std::size_t cx_max_len = 6, cx_trials = 1000;
  std::uint64_t cx_seed = 1;
  catext->add_option("--gram", cx_gram, "Gram matrix");
  catext->add_option("--gram-file", cx_gram_file, "file with the Gram matrix");
  catext->add_option("--max-len", cx_max_len, "maximum random word length");
  catext->add_option("--trials", cx_trials, "number of random words");
  catext->add_option("--seed", cx_seed, "random seed");

  auto* dhr = app.add_subcommand("dhr", "statistics-versus-braiding suite");
  std::string dhr_gram, dhr_gram_file;
  std::size_t dhr_trials = 10;
  std::uint64_t dhr_seed = 1;
  dhr->add_option("--gram", dhr_gram, "Gram matrix");
  dhr->add_option("--gram-file", dhr_gram_file, "file with the Gram matrix");
  dhr->add_option("--trials", dhr_trials, "random staging choices per pair");
  dhr->add_option("--seed", dhr_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (verify->parsed()) return run_verify(verify_path, format);
    if (lattice->parsed()) return run_lattice(gram_text, gram_file, emit_path, format);
    if (mm->parsed()) return run_minimal_model(m_param, format);
    if (catext->parsed())
      return run_catext(cx_gram, cx_gram_file, cx_max_len, cx_trials, cx_seed, format);
    if (dhr->parsed()) return run_dhr(dhr_gram, dhr_gram_file, dhr_trials, dhr_seed, format);
  } catch (const ptcat::CategoryFileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
