#include "eventcurve/textfeat.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "eventcurve/csv.hpp"
#include "eventcurve/errors.hpp"

namespace eventcurve {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Non-ASCII bytes count as word characters so accented letters do not open
// a phrase boundary mid-word.
bool word_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) != 0;
}

int count_hits_lower(std::string_view text, std::string_view phrase) {
    if (phrase.empty()) return 0;
    int hits = 0;
    size_t pos = 0;
    while ((pos = text.find(phrase, pos)) != std::string_view::npos) {
        bool left_ok = pos == 0 || !word_char(text[pos - 1]);
        size_t end = pos + phrase.size();
        bool right_ok = end == text.size() || !word_char(text[end]);
        if (left_ok && right_ok) {
            ++hits;
            pos = end;
        } else {
            ++pos;
        }
    }
    return hits;
}

int total_hits(const std::string& lower_text, const std::vector<std::string>& phrases) {
    int total = 0;
    for (const auto& p : phrases) total += count_hits_lower(lower_text, p);
    return total;
}

bool any_hit(const std::string& lower_text, const std::vector<std::string>& phrases) {
    for (const auto& p : phrases)
        if (count_hits_lower(lower_text, p) > 0) return true;
    return false;
}

// Abbreviations whose trailing period does not end a sentence. Single
// letters ("a.a.", "U.S.") are guarded separately.
const std::array<std::string_view, 14> kAbbreviations = {
    "etc", "e.g", "i.e", "vs", "dr", "mr", "mrs", "ms", "prof", "sr", "sra", "no", "cf", "al"};

bool is_abbreviation(std::string_view token) {
    if (token.size() == 1 && std::isalpha(static_cast<unsigned char>(token[0]))) return true;
    std::string lower = to_lower(token);
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

void push_sentence(std::vector<std::string>& out, std::string_view raw) {
    size_t b = raw.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return;
    size_t e = raw.find_last_not_of(" \t\r\n");
    out.emplace_back(raw.substr(b, e - b + 1));
}

}  // namespace

int count_phrase_hits(std::string_view text, std::string_view phrase) {
    return count_hits_lower(to_lower(text), to_lower(phrase));
}

std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> sentences;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        bool at_end = i + 1 == text.size();
        char next = at_end ? '\0' : text[i + 1];
        if (!at_end && !(next == ' ' || next == '\t' || next == '\r' || next == '\n' ||
                         next == '"' || next == '\''))
            continue;  // "4.5" style or mid-token period
        if (c == '.') {
            if (i > 0 && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i - 1])) &&
                std::isdigit(static_cast<unsigned char>(text[i + 1])))
                continue;  // decimal point
            size_t tok_end = i;
            size_t tok_begin = tok_end;
            while (tok_begin > start && word_char(text[tok_begin - 1])) --tok_begin;
            if (tok_end > tok_begin &&
                is_abbreviation(text.substr(tok_begin, tok_end - tok_begin)))
                continue;
        }
        push_sentence(sentences, text.substr(start, i + 1 - start));
        start = i + 1;
    }
    push_sentence(sentences, text.substr(start));
    if (sentences.empty()) sentences.emplace_back(std::string(text));
    return sentences;
}

SentenceLabel classify_sentence(std::string_view sentence, const Lexicon& lex) {
    std::string lower = to_lower(sentence);
    if (!any_hit(lower, lex.scope_markers)) return SentenceLabel::OutOfScope;
    int hawk = total_hits(lower, lex.hawk_terms);
    int dove = total_hits(lower, lex.dove_terms);
    if (hawk > dove) return SentenceLabel::Hawk;
    if (dove > hawk) return SentenceLabel::Dove;
    return SentenceLabel::Neutral;
}

double aggregate_tone(const std::vector<SentenceLabel>& labels, ToneDenominator denom) {
    int hawk = 0, dove = 0, neutral = 0;
    for (auto l : labels) {
        if (l == SentenceLabel::Hawk) ++hawk;
        else if (l == SentenceLabel::Dove) ++dove;
        else if (l == SentenceLabel::Neutral) ++neutral;
    }
    int d = hawk + dove + (denom == ToneDenominator::WithNeutral ? neutral : 0);
    if (d == 0) return 0.0;
    return static_cast<double>(hawk - dove) / static_cast<double>(d);
}

GuidanceResult extract_guidance(const StatementDoc& doc, const Lexicon& lex) {
    int tighten = 0, ease = 0, forward = 0, explicit_count = 0;
    for (const auto& sentence : split_sentences(doc.text)) {
        std::string lower = to_lower(sentence);
        int t = total_hits(lower, lex.guidance_tighten);
        int e = total_hits(lower, lex.guidance_ease);
        bool has_explicit = any_hit(lower, lex.guidance_explicit);
        if (t == 0 && e == 0 && !has_explicit) continue;  // not forward-looking
        ++forward;
        tighten += t;
        ease += e;
        if (has_explicit) ++explicit_count;
    }
    GuidanceResult out;
    if (tighten > ease) out.direction = 1;
    else if (ease > tighten) out.direction = -1;
    if (forward > 0)
        out.explicitness = std::clamp(
            static_cast<double>(explicit_count) / static_cast<double>(forward), 0.0, 1.0);
    return out;
}

namespace {

double uncertainty_level_of(const StatementDoc& doc, const Lexicon& lex) {
    int in_scope = 0, hits = 0;
    for (const auto& sentence : split_sentences(doc.text)) {
        std::string lower = to_lower(sentence);
        if (!any_hit(lower, lex.scope_markers)) continue;
        ++in_scope;
        hits += total_hits(lower, lex.uncertainty_terms);
    }
    if (in_scope == 0) return 0.0;
    double x = static_cast<double>(hits) / static_cast<double>(in_scope);
    return x / (1.0 + x);  // monotone squash onto [0, 1)
}

}  // namespace

UncertaintyResult extract_uncertainty(const StatementDoc& doc, const StatementDoc* prev_doc,
                                      const Lexicon& lex) {
    UncertaintyResult out;
    out.level = uncertainty_level_of(doc, lex);
    out.change = prev_doc ? out.level - uncertainty_level_of(*prev_doc, lex) : 0.0;
    return out;
}

StatementFeatures score_statement(const StatementDoc& doc, const StatementDoc* prev_doc,
                                  const Lexicon& lex, const TextOptions& options) {
    std::vector<SentenceLabel> labels;
    for (const auto& sentence : split_sentences(doc.text))
        labels.push_back(classify_sentence(sentence, lex));

    StatementFeatures f;
    f.tone = aggregate_tone(labels, options.tone_denominator);
    auto g = extract_guidance(doc, lex);
    f.guidance_direction = g.direction;
    f.guidance_explicitness = g.explicitness;
    f.guidance_score = static_cast<double>(g.direction) * g.explicitness;
    auto u = extract_uncertainty(doc, prev_doc, lex);
    f.uncertainty_level = u.level;
    f.uncertainty_change = u.change;
    return f;
}

std::map<Date, StatementFeatures> score_corpus(const std::vector<StatementDoc>& docs,
                                               const Lexicon& lex, const TextOptions& options) {
    std::map<Date, StatementFeatures> out;
    for (size_t i = 0; i < docs.size(); ++i) {
        const StatementDoc* prev = i > 0 ? &docs[i - 1] : nullptr;
        out[docs[i].statement_date] = score_statement(docs[i], prev, lex, options);
    }
    return out;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    CsvTable table = read_csv(path);
    if (table.header != std::vector<std::string>{"term", "class"})
        throw ParseError(path.string() + ": expected header term,class");

    Lexicon lex;
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const std::string term = to_lower(table.rows[r][0]);
        const std::string& cls = table.rows[r][1];
        if (term.empty())
            throw ParseError(path.string() + ":" + std::to_string(r + 2) + ": empty term");
        if (cls == "hawk") lex.hawk_terms.push_back(term);
        else if (cls == "dove") lex.dove_terms.push_back(term);
        else if (cls == "neutral") lex.neutral_markers.push_back(term);
        else if (cls == "scope") lex.scope_markers.push_back(term);
        else if (cls == "uncertainty") lex.uncertainty_terms.push_back(term);
        else if (cls == "guidance_tighten") lex.guidance_tighten.push_back(term);
        else if (cls == "guidance_ease") lex.guidance_ease.push_back(term);
        else if (cls == "guidance_explicit") lex.guidance_explicit.push_back(term);
        else
            throw ParseError(path.string() + ":" + std::to_string(r + 2) + ": unknown class '" +
                             cls + "'");
    }

    const std::array<std::pair<const char*, const std::vector<std::string>*>, 4> sets = {
        {{"hawk", &lex.hawk_terms},
         {"dove", &lex.dove_terms},
         {"neutral", &lex.neutral_markers},
         {"scope", &lex.scope_markers}}};
    for (size_t a = 0; a < sets.size(); ++a) {
        for (size_t b = a + 1; b < sets.size(); ++b) {
            for (const auto& term : *sets[a].second) {
                if (std::find(sets[b].second->begin(), sets[b].second->end(), term) !=
                    sets[b].second->end())
                    throw ParseError(path.string() + ": term '" + term + "' appears in both '" +
                                     sets[a].first + "' and '" + sets[b].first + "'");
            }
        }
    }
    return lex;
}

Lexicon Lexicon::with_swapped_polarity() const {
    Lexicon out = *this;
    std::swap(out.hawk_terms, out.dove_terms);
    std::swap(out.guidance_tighten, out.guidance_ease);
    return out;
}

}  // namespace eventcurve
