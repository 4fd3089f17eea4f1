#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eventcurve/panel.hpp"

namespace eventcurve {

// Phrase lists driving the deterministic statement scorer. All phrases are
// stored lowercase; matching is case-insensitive whole-phrase containment
// (word boundaries on both sides).
struct Lexicon {
    std::vector<std::string> hawk_terms;
    std::vector<std::string> dove_terms;
    std::vector<std::string> neutral_markers;
    std::vector<std::string> scope_markers;
    std::vector<std::string> uncertainty_terms;
    std::vector<std::string> guidance_tighten;
    std::vector<std::string> guidance_ease;
    std::vector<std::string> guidance_explicit;

    // CSV `term,class`, class one of hawk|dove|neutral|scope|uncertainty|
    // guidance_tighten|guidance_ease|guidance_explicit. The four sentence
    // classes must be pairwise disjoint.
    static Lexicon load(const std::filesystem::path& path);

    // Polarity relabeling: hawk <-> dove and guidance_tighten <-> guidance_ease.
    Lexicon with_swapped_polarity() const;
};

enum class SentenceLabel { Hawk, Dove, Neutral, OutOfScope };

struct StatementFeatures {
    double tone = 0.0;                   // [-1, 1]
    int guidance_direction = 0;          // {-1, 0, +1}
    double guidance_explicitness = 0.0;  // [0, 1]
    double guidance_score = 0.0;         // direction * explicitness
    double uncertainty_level = 0.0;      // [0, 1]
    double uncertainty_change = 0.0;     // [-1, 1]
};

enum class ToneDenominator { WithNeutral, HawkDoveOnly };

struct TextOptions {
    ToneDenominator tone_denominator = ToneDenominator::WithNeutral;
};

// Terminators . ! ? with a guard for single-letter and known abbreviations;
// decimal points never split. Worst case the whole text is one sentence.
std::vector<std::string> split_sentences(std::string_view text);

// Non-overlapping occurrences of `phrase` in `text`, case-insensitive,
// bounded by non-word characters on both sides.
int count_phrase_hits(std::string_view text, std::string_view phrase);

SentenceLabel classify_sentence(std::string_view sentence, const Lexicon& lex);

double aggregate_tone(const std::vector<SentenceLabel>& labels,
                      ToneDenominator denom = ToneDenominator::WithNeutral);

struct GuidanceResult {
    int direction = 0;
    double explicitness = 0.0;
};
GuidanceResult extract_guidance(const StatementDoc& doc, const Lexicon& lex);

struct UncertaintyResult {
    double level = 0.0;
    double change = 0.0;
};
UncertaintyResult extract_uncertainty(const StatementDoc& doc, const StatementDoc* prev_doc,
                                      const Lexicon& lex);

StatementFeatures score_statement(const StatementDoc& doc, const StatementDoc* prev_doc,
                                  const Lexicon& lex, const TextOptions& options = {});

// Scores every statement in date order; each statement's predecessor in the
// corpus supplies the uncertainty baseline.
std::map<Date, StatementFeatures> score_corpus(const std::vector<StatementDoc>& docs,
                                               const Lexicon& lex, const TextOptions& options = {});

}  // namespace eventcurve
