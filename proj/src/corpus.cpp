#include "ocrforge/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ocrforge/errors.hpp"
#include "ocrforge/unicode.hpp"
#include "ocrforge/utf8.hpp"

namespace ocrforge {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::io_failure, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_cents(long long cents) {
    std::string sign = cents < 0 ? "-" : "";
    const long long a = std::abs(cents);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%s%lld.%02lld", sign.c_str(), a / 100,
                  a % 100);
    return buf;
}

} // namespace

bool valid_language_code(std::string_view code) {
    if (code.size() < 2 || code.size() > 8) return false;
    for (char c : code) {
        if (!((c >= 'a' && c <= 'z') || c == '-')) return false;
    }
    return true;
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].key.empty()) {
            raise(Errc::invariant_violation, "lexicon: empty key");
        }
        for (const auto& [lang, _] : entries_[i].translations) {
            if (!valid_language_code(lang)) {
                raise(Errc::invariant_violation,
                      "lexicon: bad language code '" + lang + "'");
            }
        }
        by_key_[entries_[i].key] = i;
    }
}

Lexicon Lexicon::parse(std::string_view text) {
    std::vector<LexiconEntry> entries;
    std::size_t line_no = 0;
    for (const std::string& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> cols = split(line, '\t');
        LexiconEntry e;
        e.key = trim(cols[0]);
        if (e.key.empty()) {
            raise(Errc::malformed_line,
                  "lexicon line " + std::to_string(line_no) + ": empty key");
        }
        for (std::size_t i = 1; i < cols.size(); ++i) {
            const std::string col = trim(cols[i]);
            if (col.empty()) continue;
            const auto eq = col.find('=');
            if (eq == std::string::npos) {
                raise(Errc::malformed_line,
                      "lexicon line " + std::to_string(line_no) +
                          ": expected lang=translation, got '" + col + "'");
            }
            e.translations[col.substr(0, eq)] = col.substr(eq + 1);
        }
        entries.push_back(std::move(e));
    }
    return Lexicon(std::move(entries));
}

Lexicon Lexicon::load(const std::string& path) {
    return parse(read_text_file(path));
}

std::optional<std::string> Lexicon::translate(std::string_view key,
                                              std::string_view lang) const {
    const auto it = by_key_.find(key);
    if (it == by_key_.end()) return std::nullopt;
    const auto& tr = entries_[it->second].translations;
    const auto jt = tr.find(std::string(lang));
    if (jt == tr.end()) return std::nullopt;
    return jt->second;
}

TemplateSet::TemplateSet(std::vector<TextTemplate> templates)
    : templates_(std::move(templates)) {}

TemplateSet TemplateSet::parse(std::string_view text) {
    std::vector<TextTemplate> out;
    TextTemplate cur;
    bool in_template = false;
    std::size_t line_no = 0;

    auto fail = [&](const std::string& msg) {
        raise(Errc::malformed_line,
              "template line " + std::to_string(line_no) + ": " + msg);
    };

    for (const std::string& raw : split(text, '\n')) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        std::istringstream iss(line);
        std::string word;
        iss >> word;

        if (word == "template") {
            if (in_template) fail("nested template");
            std::string id, lang;
            iss >> id >> lang;
            if (id.empty() || !valid_language_code(lang)) {
                fail("expected: template <id> <lang>");
            }
            cur = TextTemplate{};
            cur.id = id;
            cur.language = lang;
            in_template = true;
        } else if (word == "end") {
            if (!in_template) fail("'end' outside template");
            if (cur.lines.empty()) fail("template has no lines");
            for (const LineTemplate& lt : cur.lines) {
                std::size_t pos = 0;
                while ((pos = lt.pattern.find('{', pos)) != std::string::npos) {
                    const auto close = lt.pattern.find('}', pos);
                    if (close == std::string::npos) fail("unclosed slot ref");
                    const std::string name =
                        lt.pattern.substr(pos + 1, close - pos - 1);
                    if (!cur.slots.count(name)) {
                        fail("undeclared slot '" + name + "'");
                    }
                    pos = close + 1;
                }
            }
            out.push_back(std::move(cur));
            in_template = false;
        } else if (word == "slot") {
            if (!in_template) fail("'slot' outside template");
            std::string name, kind;
            iss >> name >> kind;
            SlotDecl decl;
            if (kind == "word") {
                decl.kind = SlotDecl::Kind::word;
            } else if (kind == "choice") {
                decl.kind = SlotDecl::Kind::choice;
                std::string rest;
                std::getline(iss, rest);
                decl.choices = split(trim(rest), '|');
                if (decl.choices.empty() || decl.choices[0].empty()) {
                    fail("choice slot needs options");
                }
            } else if (kind == "price" || kind == "int") {
                decl.kind = kind == "price" ? SlotDecl::Kind::price
                                            : SlotDecl::Kind::integer;
                double lo = 0, hi = 0;
                if (!(iss >> lo >> hi) || hi < lo) fail("bad numeric range");
                if (decl.kind == SlotDecl::Kind::price) {
                    decl.lo = std::llround(lo * 100);
                    decl.hi = std::llround(hi * 100);
                } else {
                    decl.lo = static_cast<long long>(lo);
                    decl.hi = static_cast<long long>(hi);
                }
            } else if (kind == "total") {
                decl.kind = SlotDecl::Kind::total;
            } else {
                fail("unknown slot kind '" + kind + "'");
            }
            cur.slots[name] = std::move(decl);
        } else if (word == "line") {
            if (!in_template) fail("'line' outside template");
            const auto pos = raw.find("line");
            const std::string pattern = trim(raw.substr(pos + 4));
            if (pattern.empty()) fail("empty line pattern");
            cur.lines.push_back({pattern, 1, 1});
        } else if (word == "repeat") {
            if (!in_template) fail("'repeat' outside template");
            std::uint32_t lo = 0, hi = 0;
            iss >> lo >> hi;
            if (lo < 1 || hi < lo) fail("bad repeat range");
            std::string rest;
            std::getline(iss, rest);
            const std::string pattern = trim(rest);
            if (pattern.empty()) fail("empty repeat pattern");
            cur.lines.push_back({pattern, lo, hi});
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (in_template) {
        raise(Errc::malformed_line, "template file: missing final 'end'");
    }
    return TemplateSet(std::move(out));
}

TemplateSet TemplateSet::load(const std::string& path) {
    return parse(read_text_file(path));
}

std::vector<const TextTemplate*>
TemplateSet::for_language(std::string_view lang) const {
    std::vector<const TextTemplate*> out;
    for (const TextTemplate& t : templates_) {
        if (t.language == lang) out.push_back(&t);
    }
    return out;
}

namespace {

const char* kBuiltinTemplates = R"(# built-in generation templates
template receipt_en en
slot store choice CORNER MARKET|DAILY GOODS|GREEN GROCER|STATION KIOSK
slot item word
slot price price 0.50 19.99
slot total total
line {store}
line RECEIPT
repeat 2 5 {item} {price}
line total {total}
line thank you
end

template menu_en en
slot header choice MENU|TODAY|SPECIALS
slot item word
slot price price 1.00 24.00
line {header}
repeat 2 6 {item} {price}
end

template sign_en en
slot word1 word
slot word2 word
line {word1}
line {word2}
end

template price_tag_en en
slot item word
slot price price 0.10 99.99
slot qty int 1 12
line {item}
line {qty} x {price}
end
)";

const char* kBuiltinLexicon =
    "# built-in parallel lexicon\n"
    "coffee\tfr=café\tde=kaffee\tes=café\tja=コーヒー\n"
    "tea\tfr=thé\tde=tee\tes=té\tja=お茶\n"
    "bread\tfr=pain\tde=brot\tes=pan\tja=パン\n"
    "cheese\tfr=fromage\tde=käse\tes=queso\tja=チーズ\n"
    "milk\tfr=lait\tde=milch\tes=leche\tja=牛乳\n"
    "water\tfr=eau\tde=wasser\tes=agua\tja=水\n"
    "wine\tfr=vin\tde=wein\tes=vino\tja=ワイン\n"
    "beer\tfr=bière\tde=bier\tes=cerveza\tja=ビール\n"
    "apple\tfr=pomme\tde=apfel\tes=manzana\tja=りんご\n"
    "orange\tfr=orange\tde=orange\tes=naranja\tja=オレンジ\n"
    "chicken\tfr=poulet\tde=hähnchen\tes=pollo\tja=チキン\n"
    "fish\tfr=poisson\tde=fisch\tes=pescado\tja=魚\n"
    "rice\tfr=riz\tde=reis\tes=arroz\tja=ご飯\n"
    "soup\tfr=soupe\tde=suppe\tes=sopa\tja=スープ\n"
    "salad\tfr=salade\tde=salat\tes=ensalada\tja=サラダ\n"
    "cake\tfr=gâteau\tde=kuchen\tes=pastel\tja=ケーキ\n"
    "ice\tfr=glace\tde=eis\tes=hielo\tja=氷\n"
    "ice cream\tfr=crème glacée\tde=speiseeis\tes=helado\tja=アイスクリーム\n"
    "butter\tfr=beurre\tde=butter\tes=mantequilla\tja=バター\n"
    "sugar\tfr=sucre\tde=zucker\tes=azúcar\tja=砂糖\n"
    "salt\tfr=sel\tde=salz\tes=sal\tja=塩\n"
    "egg\tfr=œuf\tde=ei\tes=huevo\tja=卵\n"
    "total\tfr=total\tde=summe\tes=total\tja=合計\n"
    "receipt\tfr=reçu\tde=quittung\tes=recibo\tja=レシート\n"
    "menu\tfr=menu\tde=speisekarte\tes=menú\tja=メニュー\n"
    "open\tfr=ouvert\tde=geöffnet\tes=abierto\tja=営業中\n"
    "closed\tfr=fermé\tde=geschlossen\tes=cerrado\tja=閉店\n"
    "exit\tfr=sortie\tde=ausgang\tes=salida\tja=出口\n"
    "entrance\tfr=entrée\tde=eingang\tes=entrada\tja=入口\n"
    "thank you\tfr=merci\tde=danke\tes=gracias\tja=ありがとう\n"
    "station\tfr=gare\tde=bahnhof\tes=estación\tja=駅\n"
    "market\tfr=marché\tde=markt\tes=mercado\tja=市場\n";

} // namespace

const TemplateSet& TemplateSet::builtin() {
    static const TemplateSet set = TemplateSet::parse(kBuiltinTemplates);
    return set;
}

const Lexicon& builtin_lexicon() {
    static const Lexicon lex = Lexicon::parse(kBuiltinLexicon);
    return lex;
}

TextSample sample_source_text(const TemplateSet& templates,
                              std::string_view lang, const Lexicon& lexicon,
                              Rng& rng) {
    const auto candidates = templates.for_language(lang);
    if (candidates.empty()) {
        raise(Errc::empty_template_set,
              "no templates for language '" + std::string(lang) + "'");
    }
    const TextTemplate& tpl =
        *candidates[rng.next_below(candidates.size())];

    TextSample sample;
    sample.language = std::string(lang);
    sample.template_id = tpl.id;

    long long total_cents = 0;
    struct PendingTotal {
        std::uint32_t line_index;
        std::string prefix, suffix;
    };
    std::vector<PendingTotal> pending_totals;

    for (const LineTemplate& lt : tpl.lines) {
        const std::uint32_t count =
            lt.min_repeat +
            static_cast<std::uint32_t>(
                rng.next_below(lt.max_repeat - lt.min_repeat + 1));
        for (std::uint32_t rep = 0; rep < count; ++rep) {
            const auto line_index =
                static_cast<std::uint32_t>(sample.lines.size());
            std::string text;
            bool has_total = false;
            std::string total_prefix, total_suffix;

            std::size_t pos = 0;
            while (pos < lt.pattern.size()) {
                const auto open = lt.pattern.find('{', pos);
                if (open == std::string::npos) {
                    text += lt.pattern.substr(pos);
                    break;
                }
                text += lt.pattern.substr(pos, open - pos);
                const auto close = lt.pattern.find('}', open);
                const std::string name =
                    lt.pattern.substr(open + 1, close - open - 1);
                const SlotDecl& decl = tpl.slots.at(name);
                switch (decl.kind) {
                case SlotDecl::Kind::word: {
                    if (lexicon.empty()) {
                        raise(Errc::missing_lexicon_for_language,
                              "word slot '" + name + "' needs a lexicon");
                    }
                    text += lexicon.entries()[rng.next_below(lexicon.size())]
                                .key;
                    break;
                }
                case SlotDecl::Kind::choice:
                    text += decl.choices[rng.next_below(decl.choices.size())];
                    break;
                case SlotDecl::Kind::price: {
                    const long long cents =
                        decl.lo + static_cast<long long>(rng.next_below(
                                      static_cast<std::uint64_t>(
                                          decl.hi - decl.lo + 1)));
                    total_cents += cents;
                    text += format_cents(cents);
                    sample.numeric_fields.emplace_back(line_index,
                                                       cents / 100.0);
                    break;
                }
                case SlotDecl::Kind::integer: {
                    const long long v =
                        decl.lo + static_cast<long long>(rng.next_below(
                                      static_cast<std::uint64_t>(
                                          decl.hi - decl.lo + 1)));
                    text += std::to_string(v);
                    sample.numeric_fields.emplace_back(
                        line_index, static_cast<double>(v));
                    break;
                }
                case SlotDecl::Kind::total:
                    // resolved after all price draws
                    has_total = true;
                    total_prefix = text;
                    text.clear();
                    break;
                }
                pos = close + 1;
            }
            if (has_total) {
                total_suffix = text;
                pending_totals.push_back(
                    {line_index, total_prefix, total_suffix});
                sample.lines.push_back(""); // placeholder
            } else {
                sample.lines.push_back(text);
            }
        }
    }
    for (const PendingTotal& pt : pending_totals) {
        sample.lines[pt.line_index] =
            pt.prefix + format_cents(total_cents) + pt.suffix;
        sample.numeric_fields.emplace_back(pt.line_index, total_cents / 100.0);
    }
    sample.line_languages.assign(sample.lines.size(), sample.language);
    return sample;
}

namespace {

struct CpLine {
    std::vector<char32_t> cps;
};

bool boundary_ok(const std::vector<char32_t>& cps, std::size_t i,
                 std::size_t len) {
    const bool left = i == 0 || !is_alnum(cps[i - 1]);
    const bool right = i + len >= cps.size() || !is_alnum(cps[i + len]);
    return left && right;
}

} // namespace

ParallelTextPair pair_translation(const TextSample& src, const Lexicon& lexicon,
                                  std::string_view tgt_lang) {
    if (!valid_language_code(tgt_lang)) {
        raise(Errc::bad_config,
              "bad target language code '" + std::string(tgt_lang) + "'");
    }

    // keys decoded once, longest first so overlapping keys resolve maximally
    struct Key {
        std::vector<char32_t> cps;
        std::vector<char32_t> translation;
    };
    std::vector<Key> keys;
    for (const LexiconEntry& e : lexicon.entries()) {
        const auto it = e.translations.find(std::string(tgt_lang));
        if (it == e.translations.end()) continue;
        keys.push_back({utf8_decode(e.key), utf8_decode(it->second)});
    }
    std::stable_sort(keys.begin(), keys.end(),
                     [](const Key& a, const Key& b) {
                         return a.cps.size() > b.cps.size();
                     });

    ParallelTextPair pair;
    pair.src = src;
    pair.tgt.language = std::string(tgt_lang);
    pair.tgt.template_id = src.template_id;
    pair.tgt.numeric_fields = src.numeric_fields;

    std::size_t translated_lines = 0;
    for (const std::string& line : src.lines) {
        const std::vector<char32_t> cps = utf8_decode(line);
        std::vector<char32_t> out;
        out.reserve(cps.size());
        bool replaced = false;
        bool has_letter = false;
        for (char32_t cp : cps) {
            if (is_letter(cp)) { has_letter = true; break; }
        }

        std::size_t i = 0;
        while (i < cps.size()) {
            const Key* hit = nullptr;
            for (const Key& k : keys) {
                const std::size_t n = k.cps.size();
                if (n == 0 || i + n > cps.size()) continue;
                if (!std::equal(k.cps.begin(), k.cps.end(),
                                cps.begin() + static_cast<std::ptrdiff_t>(i))) {
                    continue;
                }
                if (!boundary_ok(cps, i, n)) continue;
                hit = &k;
                break; // keys are longest-first
            }
            if (hit) {
                out.insert(out.end(), hit->translation.begin(),
                           hit->translation.end());
                i += hit->cps.size();
                replaced = true;
            } else {
                out.push_back(cps[i]);
                ++i;
            }
        }

        const bool line_done = replaced || !has_letter;
        pair.line_translated.push_back(line_done);
        if (line_done) ++translated_lines;
        pair.tgt.lines.push_back(utf8_encode(out));
    }
    pair.tgt.line_languages.assign(pair.tgt.lines.size(), pair.tgt.language);
    pair.coverage = src.lines.empty()
                        ? 0.0
                        : static_cast<double>(translated_lines) /
                              static_cast<double>(src.lines.size());
    return pair;
}

TextSample mix_languages(const std::vector<TextSample>& samples, Rng& rng) {
    if (samples.size() < 2) {
        raise(Errc::insufficient_inputs, "mix_languages needs >= 2 samples");
    }
    {
        std::vector<std::string> langs;
        for (const TextSample& s : samples) langs.push_back(s.language);
        std::sort(langs.begin(), langs.end());
        if (std::unique(langs.begin(), langs.end()) == langs.begin() + 1) {
            raise(Errc::insufficient_inputs,
                  "mix_languages needs distinct languages");
        }
    }

    TextSample out;
    out.language = "mixed";
    out.template_id = "mixed";

    std::vector<std::size_t> cursor(samples.size(), 0);
    std::vector<std::size_t> remaining;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!samples[i].lines.empty()) remaining.push_back(i);
    }
    while (!remaining.empty()) {
        const std::size_t pick = rng.next_below(remaining.size());
        const std::size_t s = remaining[pick];
        const std::size_t line_idx = cursor[s]++;
        const auto new_index = static_cast<std::uint32_t>(out.lines.size());

        out.lines.push_back(samples[s].lines[line_idx]);
        out.line_languages.push_back(
            line_idx < samples[s].line_languages.size()
                ? samples[s].line_languages[line_idx]
                : samples[s].language);
        for (const auto& [li, value] : samples[s].numeric_fields) {
            if (li == line_idx) out.numeric_fields.emplace_back(new_index, value);
        }
        if (cursor[s] == samples[s].lines.size()) {
            remaining.erase(remaining.begin() +
                            static_cast<std::ptrdiff_t>(pick));
        }
    }
    return out;
}

} // namespace ocrforge
