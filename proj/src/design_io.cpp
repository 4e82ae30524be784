#include "mmsts/design_io.hpp"

#include <fstream>
#include <stdexcept>

namespace mmsts {

namespace {

nlohmann::json parse_stream(std::istream& in, const std::string& what) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed " + what + ": " + e.what());
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

RawDesign read_design(std::istream& in) {
  nlohmann::json j = parse_stream(in, "design file");
  RawDesign design;
  try {
    if (!j.is_object()) throw std::runtime_error("design file must hold a JSON object");
    design.n = j.at("n").get<int>();
    for (const auto& blk : j.at("blocks")) {
      std::vector<int> points;
      for (const auto& p : blk) points.push_back(p.get<int>());
      design.blocks.push_back(std::move(points));
    }
    if (j.contains("block_labels")) {
      std::vector<long long> labels;
      for (const auto& l : j.at("block_labels")) labels.push_back(l.get<long long>());
      design.block_labels = std::move(labels);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("malformed design file: ") + e.what());
  }
  return design;
}

RawDesign read_design_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_design(in);
}

nlohmann::json design_json(const SteinerTripleSystem& system, const BlockLabeling* labeling) {
  nlohmann::json j;
  j["n"] = system.n;
  nlohmann::json blocks = nlohmann::json::array();
  for (const Block& b : system.blocks) blocks.push_back({b[0], b[1], b[2]});
  j["blocks"] = std::move(blocks);
  if (labeling != nullptr) j["block_labels"] = labeling->labels;
  return j;
}

std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

nlohmann::json rational_json(const Rational& r) { return r.str(); }

std::vector<Rational> read_popularity(std::istream& in) {
  nlohmann::json j = parse_stream(in, "popularity file");
  if (!j.is_array()) throw std::runtime_error("popularity file must hold a JSON array");
  std::vector<Rational> popularity;
  popularity.reserve(j.size());
  for (const auto& entry : j) {
    if (entry.is_number_integer()) {
      popularity.emplace_back(entry.get<long long>());
    } else if (entry.is_string()) {
      try {
        popularity.push_back(Rational::parse(entry.get<std::string>()));
      } catch (const std::exception& e) {
        throw std::runtime_error(std::string("bad popularity entry: ") + e.what());
      }
    } else {
      throw std::runtime_error("popularity entries must be integers or \"p/q\" strings");
    }
  }
  return popularity;
}

std::vector<Rational> read_popularity_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_popularity(in);
}

}  // namespace mmsts
