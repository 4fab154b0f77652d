// qlie - command line front end for the qlie shared library.
//
// Talks to the library exclusively through the C API in qlie.h. Exit codes:
// 0 success, 1 validation/classification failure, 2 parse error,
// 3 unsupported input (dimension, or a witness needing a square root that
// does not exist in Q(i)).

#include <qlie.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;

int exit_code_for(qlie_status status) {
  switch (status) {
    case QLIE_OK:
      return kExitOk;
    case QLIE_ERR_PARSE:
    case QLIE_ERR_INDEX:
      return kExitParse;
    case QLIE_ERR_UNSUPPORTED_DIMENSION:
    case QLIE_ERR_NO_SQUARE_ROOT:
      return kExitUnsupported;
    default:
      return kExitFailure;
  }
}

struct CommandError {
  int code;
};

[[noreturn]] void bail(qlie_status status) {
  std::cerr << "qlie: " << qlie_status_name(status) << ": " << qlie_last_error() << "\n";
  throw CommandError{exit_code_for(status)};
}

void check(qlie_status status) {
  if (status != QLIE_OK) bail(status);
}

using AlgebraPtr = std::unique_ptr<qlie_algebra, decltype(&qlie_algebra_free)>;
using StringPtr = std::unique_ptr<char, decltype(&qlie_string_free)>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "qlie: cannot read " << path << "\n";
    throw CommandError{kExitParse};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  if (!out) {
    std::cerr << "qlie: cannot write " << path << "\n";
    throw CommandError{kExitFailure};
  }
}

AlgebraPtr load_algebra(const std::string& path) {
  std::string bytes = slurp(path);
  qlie_algebra* raw = nullptr;
  check(qlie_algebra_parse(bytes.data(), bytes.size(), &raw));
  return AlgebraPtr(raw, &qlie_algebra_free);
}

std::string algebra_text(const qlie_algebra* a) {
  char* raw = nullptr;
  check(qlie_algebra_write(a, &raw));
  StringPtr guard(raw, &qlie_string_free);
  return std::string(guard.get());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
}

int run_check(const std::string& path) {
  AlgebraPtr a = load_algebra(path);
  char* raw = nullptr;
  check(qlie_validate(a.get(), &raw));
  StringPtr report(raw, &qlie_string_free);
  std::cout << report.get() << "\n";
  return std::string(report.get()).find("\"valid\":true") != std::string::npos ? kExitOk
                                                                               : kExitFailure;
}

int run_info(const std::string& path) {
  AlgebraPtr a = load_algebra(path);
  char* raw = nullptr;
  check(qlie_info(a.get(), &raw));
  StringPtr info(raw, &qlie_string_free);
  std::cout << info.get() << "\n";
  return kExitOk;
}

int run_classify(const std::string& path) {
  AlgebraPtr a = load_algebra(path);
  char* raw = nullptr;
  check(qlie_classify(a.get(), &raw));
  StringPtr labels(raw, &qlie_string_free);
  std::cout << labels.get() << "\n";
  return kExitOk;
}

int run_decompose(const std::string& path, const std::string& out_dir) {
  AlgebraPtr a = load_algebra(path);
  qlie_algebra** parts = nullptr;
  size_t count = 0;
  check(qlie_decompose(a.get(), &parts, &count));

  std::filesystem::create_directories(out_dir);
  for (size_t k = 0; k < count; ++k) {
    std::string name = "component_" + std::to_string(k) + ".qla";
    spill((std::filesystem::path(out_dir) / name).string(), algebra_text(parts[k]));
    std::cout << name << " dim " << qlie_algebra_dim(parts[k]) << "\n";
  }
  qlie_algebra_array_free(parts, count);
  return kExitOk;
}

int run_extend(const std::string& path, const std::string& derivation_path,
               const std::string& out_path) {
  AlgebraPtr a = load_algebra(path);
  std::string matrix = slurp(derivation_path);
  qlie_algebra* raw = nullptr;
  check(qlie_double_extension(a.get(), matrix.c_str(), &raw));
  AlgebraPtr extended(raw, &qlie_algebra_free);
  emit(algebra_text(extended.get()), out_path);
  return kExitOk;
}

int run_derivations(const std::string& path) {
  AlgebraPtr a = load_algebra(path);
  char* raw = nullptr;
  check(qlie_skew_derivations(a.get(), &raw));
  StringPtr basis(raw, &qlie_string_free);
  std::cout << basis.get();
  return kExitOk;
}

int run_catalog(const std::string& name, const std::string& lambda, const std::string& out_path) {
  qlie_algebra* raw = nullptr;
  check(qlie_catalog_make(name.c_str(), lambda.empty() ? nullptr : lambda.c_str(), &raw));
  AlgebraPtr a(raw, &qlie_algebra_free);
  emit(algebra_text(a.get()), out_path);
  return kExitOk;
}

int run_conjugate(const std::string& path, std::uint64_t seed, const std::string& out_path) {
  AlgebraPtr a = load_algebra(path);
  qlie_algebra* raw = nullptr;
  check(qlie_conjugate(a.get(), seed, &raw));
  AlgebraPtr moved(raw, &qlie_algebra_free);
  emit(algebra_text(moved.get()), out_path);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for solvable quadratic Lie algebras of dimension <= 6"};
  app.require_subcommand(1);

  std::string file, out_path, out_dir, derivation_path, name, lambda;
  std::uint64_t seed = 0;

  auto* cmd_check = app.add_subcommand("check", "validate the axioms of an algebra file");
  cmd_check->add_option("file", file)->required();

  auto* cmd_info = app.add_subcommand("info", "dimension, center, derived series, solvability");
  cmd_info->add_option("file", file)->required();

  auto* cmd_classify = app.add_subcommand("classify", "canonical families of the components");
  cmd_classify->add_option("file", file)->required();

  auto* cmd_decompose = app.add_subcommand("decompose", "write the indecomposable components");
  cmd_decompose->add_option("file", file)->required();
  cmd_decompose->add_option("-o,--output", out_dir, "output directory")->required();

  auto* cmd_extend = app.add_subcommand("extend", "double extension by a skew derivation");
  cmd_extend->add_option("file", file)->required();
  cmd_extend->add_option("--derivation", derivation_path, "matrix file")->required();
  cmd_extend->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* cmd_derivations = app.add_subcommand("derivations", "basis of the skew derivation space");
  cmd_derivations->add_option("file", file)->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "emit a named catalog algebra");
  cmd_catalog->add_option("name", name)->required();
  cmd_catalog->add_option("--lambda", lambda, "parameter for g6_2");
  cmd_catalog->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* cmd_conjugate = app.add_subcommand("conjugate", "transport through a seeded isometry");
  cmd_conjugate->add_option("file", file)->required();
  cmd_conjugate->add_option("--seed", seed, "PRNG seed")->required();
  cmd_conjugate->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitParse;
  }

  try {
    if (cmd_check->parsed()) return run_check(file);
    if (cmd_info->parsed()) return run_info(file);
    if (cmd_classify->parsed()) return run_classify(file);
    if (cmd_decompose->parsed()) return run_decompose(file, out_dir);
    if (cmd_extend->parsed()) return run_extend(file, derivation_path, out_path);
    if (cmd_derivations->parsed()) return run_derivations(file);
    if (cmd_catalog->parsed()) return run_catalog(name, lambda, out_path);
    if (cmd_conjugate->parsed()) return run_conjugate(file, seed, out_path);
  } catch (const CommandError& e) {
    return e.code;
  }
  return kExitParse;
}
