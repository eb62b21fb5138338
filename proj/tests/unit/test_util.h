#ifndef CONCISE_TESTS_TEST_UTIL_H_
#define CONCISE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <string>

#include "concise/conllu.h"
#include "concise/resources.h"

namespace concise::testing {

inline std::filesystem::path test_data(const std::string& name) {
  return std::filesystem::path(CONCISE_TEST_DATA_DIR) / name;
}

inline DepTree load_tree(const std::string& name) {
  return parse_conllu(read_file(test_data(name))).at(0);
}

// Builds a tree from "form/lemma/UPOS/head/deprel" lines; lemma "_" allowed.
DepTree make_tree(const std::vector<std::string>& rows);

}  // namespace concise::testing

#endif  // CONCISE_TESTS_TEST_UTIL_H_
