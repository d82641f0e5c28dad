// writes corpus/*.json from the built-in corpus plus a few fixtures used by the CLI tests
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>

#include "deltaforge/corpus.hpp"
#include "deltaforge/dialgebra.hpp"
#include "deltaforge/extensions.hpp"
#include "deltaforge/io.hpp"

using namespace deltaforge;

namespace {

std::string file_stem(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c == '(' || c == ',') s += '_';
    else if (c == ')') continue;
    else if (c == '-') s += 'm';
    else if (c == '/') s += "over";
    else s += c;
  }
  return s;
}

std::map<std::string, std::string> written;

// a row can appear both on its own and as a sample of a family; the two must agree
void write(const std::filesystem::path& dir, const std::string& stem, const std::string& text) {
  auto [it, fresh] = written.emplace(stem, text);
  if (!fresh && it->second != text) throw std::runtime_error("two different tables for " + stem);
  std::ofstream(dir / (stem + ".json"), std::ios::binary) << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_corpus DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  std::size_t n = 0;
  for (const auto& e : corpus())
    for (const auto& p : e.samples()) {
      auto a = e.instance(p);
      write(dir, file_stem(a.name()), serialize_algebra(a));
      ++n;
    }
  for (std::size_t d : {1, 2, 3}) {
    auto z = zero_algebra(d);
    z.set_name("zero" + std::to_string(d));
    write(dir, d == 3 ? "zero" : "zero" + std::to_string(d), serialize_algebra(z));
  }
  auto base = split_central(corpus_entry("frakA").instance(), 6).base;
  base.set_name("frakA/<e7>");
  write(dir, "frakA_quotient", serialize_algebra(base));
  auto di = dialgebra_from_single(corpus_entry("g1").instance());
  di.set_name("di(g1)");
  write(dir, "di_g1", dialgebra_to_json(di).dump(2) + "\n");
  std::cout << written.size() << " files written to " << dir << "\n";
  return 0;
}
