#pragma once

#include <string>

#include "mser/driver.hpp"
#include "mser/parser.hpp"

namespace mser::fixture {

inline constexpr const char* kZoo = "http://example.org/zoo#";

inline Iri zoo(const std::string& local) { return Iri(std::string(kZoo) + local); }

inline std::string data_path(const std::string& name) { return std::string(MSER_TEST_DATA_DIR) + "/" + name; }

inline Ontology load_ontology(const std::string& name) { return parse_ontology(read_file(data_path(name))); }
inline Query load_query(const std::string& name) { return parse_query(read_file(data_path(name))); }

inline Ontology golden_eagle() { return load_ontology("golden_eagle.qlf"); }

// Parses axioms written against the zoo namespace.
inline Ontology zoo_ontology(const std::string& body) {
  return parse_ontology("@prefix : <" + std::string(kZoo) + "> .\n" + body);
}

inline Query zoo_query(const std::string& text) {
  return parse_query("PREFIX : <" + std::string(kZoo) + ">\n" + text);
}

}  // namespace mser::fixture
