#ifndef CONCISE_INFLECT_H_
#define CONCISE_INFLECT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace concise {

enum class Inflection {
  kBase,
  kGerund,
  kThirdSingular,
  kPast,
  kPastParticiple,
  kPlural,
  kSingular,
};

std::optional<Inflection> inflection_from_name(std::string_view name);

// English inflection with irregular exception tables consulted before the
// regular rules (e-drop, y -> ies/ied, consonant doubling).
class Inflector {
 public:
  // Tables: base<TAB>past<TAB>participle<TAB>3sg<TAB>gerund ("-" = regular)
  // and singular<TAB>plural.
  static Inflector Load(const std::filesystem::path& verbs,
                        const std::filesystem::path& nouns);
  // The bundled tables, loaded once.
  static const Inflector& Default();

  std::string inflect(std::string_view lemma, Inflection form) const;

  // Base form for irregular inflected verbs and irregular noun plurals
  // ("went" -> "go", "children" -> "child"), otherwise nullopt.
  std::optional<std::string> irregular_base(std::string_view word) const;

 private:
  struct VerbForms {
    std::string past, participle, third, gerund;
  };
  std::unordered_map<std::string, VerbForms> verbs_;
  std::unordered_map<std::string, std::string> plural_of_;
  std::unordered_map<std::string, std::string> base_of_;
};

// Shorthand for Inflector::Default().inflect().
std::string inflect(std::string_view lemma, Inflection form);

}  // namespace concise

#endif  // CONCISE_INFLECT_H_
