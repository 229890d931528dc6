#pragma once

#include <string_view>

// Bundled word lists backing the coarse POS tagger and the pattern NE tagger.
namespace clozeforge::lex {

bool is_determiner(std::string_view lower);
bool is_function_word(std::string_view lower);
bool is_verb_form(std::string_view lower);  // lexicon + -s/-ed/-ing morphology
bool is_adjective(std::string_view lower);
bool is_number_word(std::string_view lower);
bool is_ordinal_word(std::string_view lower);
bool is_currency_word(std::string_view lower);
bool is_magnitude_word(std::string_view lower);

}  // namespace clozeforge::lex
