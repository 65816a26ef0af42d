// Command-line front end; talks to the library only through bracoid.h.
#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bracoid/bracoid.h"

namespace {

namespace fs = std::filesystem;

struct ObjectDeleter {
  void operator()(bracoid_object* o) const { bracoid_object_free(o); }
};
struct ReportDeleter {
  void operator()(bracoid_report* r) const { bracoid_report_free(r); }
};
struct ListingDeleter {
  void operator()(bracoid_listing* l) const { bracoid_listing_free(l); }
};
using Object = std::unique_ptr<bracoid_object, ObjectDeleter>;
using ReportPtr = std::unique_ptr<bracoid_report, ReportDeleter>;
using Listing = std::unique_ptr<bracoid_listing, ListingDeleter>;

int exit_code(bracoid_status s) {
  switch (s) {
    case BRACOID_OK: return 0;
    case BRACOID_PARSE_ERROR:
    case BRACOID_INVALID_ARGUMENT: return 2;
    case BRACOID_RESOURCE_BOUND: return 3;
    default: return 1;
  }
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  bracoid_string_free(s);
  return out;
}

// Outcome of one unit of work, printed later in input order.
struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome failure(bracoid_status s, const std::string& context) {
  Outcome o;
  o.code = exit_code(s);
  const std::string label = s == BRACOID_PRECONDITION ? "refused" : "error";
  const std::string what = bracoid_last_error();
  // The library usually names the input already.
  if (what.rfind(context, 0) == 0) {
    o.err = label + ": " + what + "\n";
  } else {
    o.err = label + ": " + context + ": " + what + "\n";
  }
  return o;
}

Object load(const std::string& path, bracoid_status& status) {
  bracoid_object* o = nullptr;
  status = bracoid_object_load(path.c_str(), &o);
  return Object(o);
}

// Expands directories to their *.json files in sorted order.
std::vector<std::string> expand(const std::vector<std::string>& inputs) {
  std::vector<std::string> files;
  for (const auto& p : inputs) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& e : fs::recursive_directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".json") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

template <class F>
std::vector<Outcome> run_parallel(std::size_t count, unsigned jobs, F&& work) {
  std::vector<Outcome> outcomes(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) outcomes[i] = work(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return outcomes;
}

int emit(const std::vector<Outcome>& outcomes) {
  int code = 0;
  for (const auto& o : outcomes) {
    std::cout << o.out;
    std::cerr << o.err;
    code = std::max(code, o.code);
  }
  std::cout.flush();
  return code;
}

Outcome report_outcome(bracoid_report* raw, bool machine) {
  ReportPtr r(raw);
  Outcome o;
  char* text = nullptr;
  bracoid_status s = bracoid_report_render(r.get(), machine ? 1 : 0, &text);
  if (s != BRACOID_OK) return failure(s, "render");
  o.out = take(text);
  o.code = bracoid_report_passed(r.get()) ? 0 : 1;
  return o;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for finite groups, Hopf algebras, skew bracoids, Hopf bracoids and 1-cocycles"};
  app.require_subcommand(1);

  std::string suite = "basic";
  std::string format = "text";
  unsigned jobs = 1;
  std::vector<std::string> files;

  auto* check = app.add_subcommand("check", "Run the axiom suite for each manifest (directories are searched for *.json)");
  check->add_option("--suite", suite, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  check->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  check->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  check->add_option("files", files, "manifest files or directories")->required();

  std::string functor;
  std::string out_path;
  auto* build = app.add_subcommand("build", "Apply a functor or construction and write the result manifest");
  build->add_option("--functor", functor, "L, P, R, T, Tprime, F, G, Q, tensor or opposite")
      ->required()
      ->check(CLI::IsMember({"L", "P", "R", "T", "Tprime", "F", "G", "Q", "tensor", "opposite"}));
  build->add_option("--out", out_path, "output path (default: standard output)");
  build->add_option("inputs", files, "input manifests")->required();

  std::string g_path;
  std::string n_path;
  std::size_t max_order = 8;
  bool iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every generalized skew bracoid on a pair of groups");
  enumerate->add_option("--g", g_path, "acting group manifest")->required();
  enumerate->add_option("--n", n_path, "carrier group manifest")->required();
  enumerate->add_option("--max-order", max_order, "largest group order accepted");
  enumerate->add_flag("--iso-classes", iso, "group the results under Aut(G) x Aut(N)");
  enumerate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::string pair;
  auto* roundtrip = app.add_subcommand("roundtrip", "Assert that a functor pair composes to the identity");
  roundtrip->add_option("--pair", pair, "PR or FG")->required()->check(CLI::IsMember({"PR", "FG"}));
  roundtrip->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  roundtrip->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  roundtrip->add_option("files", files, "manifest files or directories")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const bool machine = format == "machine";

  if (check->parsed() || roundtrip->parsed()) {
    const auto paths = expand(files);
    const bool is_check = check->parsed();
    auto outcomes = run_parallel(paths.size(), jobs, [&](std::size_t i) {
      bracoid_status s;
      Object obj = load(paths[i], s);
      if (s != BRACOID_OK) return failure(s, paths[i]);
      bracoid_report* r = nullptr;
      s = is_check ? bracoid_check(obj.get(), suite == "full" ? 1 : 0, &r)
                   : bracoid_roundtrip(pair.c_str(), obj.get(), &r);
      if (s != BRACOID_OK) return failure(s, paths[i]);
      return report_outcome(r, machine);
    });
    return emit(outcomes);
  }

  if (build->parsed()) {
    std::vector<Object> inputs;
    std::vector<const bracoid_object*> raw;
    for (const auto& p : files) {
      bracoid_status s;
      inputs.push_back(load(p, s));
      if (s != BRACOID_OK) return emit({failure(s, p)});
      raw.push_back(inputs.back().get());
    }
    bracoid_object* result = nullptr;
    bracoid_status s = bracoid_build(functor.c_str(), raw.data(), raw.size(), &result);
    if (s != BRACOID_OK) return emit({failure(s, functor)});
    Object owned(result);
    char* text = nullptr;
    s = bracoid_object_serialize(owned.get(), &text);
    if (s != BRACOID_OK) return emit({failure(s, "serialize")});
    const std::string manifest = take(text);
    if (out_path.empty()) {
      std::cout << manifest;
    } else if (!write_text(out_path, manifest)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  }

  bracoid_status s;
  Object g = load(g_path, s);
  if (s != BRACOID_OK) return emit({failure(s, g_path)});
  Object n = load(n_path, s);
  if (s != BRACOID_OK) return emit({failure(s, n_path)});
  bracoid_listing* raw = nullptr;
  s = bracoid_enumerate(g.get(), n.get(), max_order, jobs, iso ? 1 : 0, &raw);
  if (s != BRACOID_OK) return emit({failure(s, "enumerate")});
  Listing listing(raw);
  char* text = nullptr;
  s = bracoid_listing_render(listing.get(), machine ? 1 : 0, &text);
  if (s != BRACOID_OK) return emit({failure(s, "render")});
  std::cout << take(text);
  return 0;
}
