#!/usr/bin/env python3
"""Build the pinned 1,000-line multilingual tokenizer sample.

Lines come from CLDR locale data (via babel) rendered through each locale's
own list, number, currency and date patterns, plus hand-written edge cases.
Output is JSON lines (one JSON string per line) so control characters survive.

Strings containing code points unassigned in this Python's Unicode tables are
skipped: pre-tokenizers built on different Unicode versions disagree on them.

    python3 make_sample.py > ../data/multilingual_sample.jsonl
"""

import datetime
import json
import random
import sys
import unicodedata

from babel import Locale, dates, lists, numbers

SEED = 20240717
TARGET = 1000

LOCALES = [
    "en", "te", "hi", "bn", "or", "ur", "sat", "dz", "zh_Hans", "zh_Hant", "es",
    "ar", "fr", "am", "my", "ta", "km", "bo", "ka", "hy", "el", "ru", "ko", "ja",
    "th", "si", "ne", "ml", "kn", "gu", "pa", "mr", "ps", "fa", "he", "yo", "ig",
    "ha", "sw", "zu", "vi", "tr", "uk", "lo", "mn", "chr", "ti", "sd", "de", "pl",
    "nus", "tzm", "vai", "mni", "ii",
]

HAND_WRITTEN = [
    "",
    " ",
    "hello world",
    "Hello, World!",
    "  leading and trailing spaces  ",
    "tabs\tinside\tthe\tline",
    "line one\nline two\n\nline four",
    "windows\r\nline endings\r\n",
    "trailing newlines\n\n\n",
    "   \n   \n",
    "I'm sure they'll say it's what we've done, isn't it?",
    "I'M SURE THEY'LL SAY IT'S WHAT WE'VE DONE",
    "don’t use curly apostrophes ’s",
    "numbers 1 12 123 1234 12345 1234567890",
    "3.14159 2,718 1e-9 -42 +7",
    "phone: +1 (555) 010-9999",
    "price: $1,299.99 or €1.299,99 or ₹1,29,999",
    "email someone@example.org or visit https://example.com/a/b?c=d&e=f#g",
    "def f(x):\n    return x ** 2  # square\n",
    "for (int i = 0; i < n; ++i) { sum += a[i]; }",
    "{\"key\": [1, 2, 3], \"nested\": {\"a\": null}}",
    "<html><body><p class=\"x\">text</p></body></html>",
    "SELECT name, COUNT(*) FROM users WHERE age >= 18 GROUP BY name;",
    "!!!???...,,,;;;:::---___===+++",
    "aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa",
    "ababababababababababababababababababababababababababababab",
    "Supercalifragilisticexpialidocious antidisestablishmentarianism",
    "camelCaseIdentifier snake_case_identifier SCREAMING_CASE kebab-case",
    "The <|endoftext|> marker is ordinary text here.",
    "<|fim_prefix|>a<|fim_middle|>b<|fim_suffix|>c<|endofprompt|>",
    "emoji 😀😃😄 👍🏽 👨‍👩‍👧‍👦 🏳️‍🌈 🇮🇳🇧🇹🇨🇳",
    "combining: é à ộ ñ",
    "ligatures: ﬁ ﬂ ﬀ ﬃ and fullwidth: ＡＢＣ１２３",
    "zero​width‌joiner‍text﻿bom",
    "nbsp and thin spaces　ideographic",
    "Straße, İstanbul, ǅemal, KELVIN K, Ωmega",
    "mixed: hello मित्र 朋友 صديق друг φίλος",
    "Telugu: తెలుగు భాష ప్రపంచంలో అత్యధికంగా మాట్లాడే భాషల్లో ఒకటి.",
    "Santali: ᱥᱟᱱᱛᱟᱲᱤ ᱯᱟᱹᱨᱥᱤ ᱚᱞ ᱪᱤᱠᱤ ᱛᱮ ᱚᱞ ᱟᱠᱟᱱᱟ᱾",
    "Dzongkha: རྫོང་ཁ་ འབྲུག་གི་ རྒྱལ་ཡོངས་སྐད་ ཨིན།",
    "Odia: ଓଡ଼ିଆ ଭାଷା ଭାରତର ଏକ ପ୍ରାଚୀନ ଭାଷା।",
    "Shan: ၵႂၢမ်းတႆး ပဵၼ်ၵႂၢမ်းဢၼ်ၸႂ်ႉတီႈမိူင်းတႆး။",
    "Tifinagh: ⵜⴰⵎⴰⵣⵉⵖⵜ ⵜⴰⵎⴰⵀⴰⵇ",
    "Nuer and Kabiyè: Thok Naath, kabɩyɛ tɔm",
    "Hindi: हिन्दी भारत की राजभाषा है।",
    "Arabic digits ٠١٢٣٤٥٦٧٨٩ and Devanagari ०१२३४५६७८९",
    "Roman numerals Ⅰ Ⅱ Ⅻ and fractions ½ ¾ and superscripts x² y³",
    "math: ∀x∈ℝ, ∃y: x²+y²≤1 ⇒ |x|≤1",
    "box drawing ┌──┐ │  │ └──┘ and arrows ← ↑ → ↓",
    "Ελληνικά: Η γρήγορη καφέ αλεπού πηδά πάνω από τον τεμπέλη σκύλο.",
    "Русский: Съешь же ещё этих мягких французских булок, да выпей чаю.",
    "日本語のテキストとカタカナ、ひらがな、漢字が混在しています。",
    "한국어 문장도 포함되어 있습니다.",
    "ภาษาไทยไม่มีช่องว่างระหว่างคำ",
    "עברית נכתבת מימין לשמאל",
    "Tiếng Việt có nhiều dấu thanh điệu.",
    "Ge'ez: ግዕዝ ፊደል ሰላም ለዓለም።",
    "Cherokee: ᏣᎳᎩ ᎦᏬᏂᎯᏍᏗ",
    "surrogate-range neighbours: ퟿  �",
    "x" * 3 + " " * 17 + "y",
    "\t\t\tindent\n\t\tdedent\n",
    "end with space ",
    "'s 'S 't 're 've 'm 'll 'd",
]


def assigned(text):
    return all(unicodedata.category(c) != "Cn" for c in text)


def locale_lines(code, rng):
    loc = Locale.parse(code)
    territories = [v for k, v in sorted(loc.territories.items()) if k.isalpha()]
    languages = [v for _, v in sorted(loc.languages.items())]
    months = list(loc.months["format"]["wide"].values())
    days = list(loc.days["format"]["wide"].values())
    pool = territories + languages
    out = []

    def pick(seq, k):
        return rng.sample(seq, min(k, len(seq)))

    if len(pool) >= 6:
        for style in ("standard", "or", "unit"):
            try:
                out.append(lists.format_list(pick(pool, rng.randint(3, 6)), style, locale=loc))
            except (KeyError, ValueError):
                out.append(", ".join(pick(pool, 4)))
        for _ in range(8):
            out.append(" ".join(pick(pool, rng.randint(2, 5))))
    if months and days:
        out.append(lists.format_list(pick(months, 3), locale=loc))
        out.append(" ".join(pick(days, 3)))
    day = datetime.date(2022, rng.randint(1, 12), rng.randint(1, 28))
    for fmt in ("full", "long", "medium"):
        out.append(dates.format_date(day, format=fmt, locale=loc))
    amount = rng.randint(1, 10**7) / 100
    out.append(numbers.format_decimal(amount, locale=loc))
    out.append(numbers.format_currency(amount, "USD", locale=loc))
    out.append(numbers.format_percent(rng.random(), locale=loc))
    return out


def main():
    rng = random.Random(SEED)
    lines = [s for s in HAND_WRITTEN if assigned(s)]
    per_locale = {code: locale_lines(code, rng) for code in LOCALES}
    # Round-robin so every locale is represented before any is exhausted.
    while len(lines) < TARGET and any(per_locale.values()):
        for code in LOCALES:
            if per_locale[code] and len(lines) < TARGET:
                s = per_locale[code].pop(0)
                if assigned(s):
                    lines.append(s)
    k = 0
    while len(lines) < TARGET:
        # Extra pairings of existing lines if CLDR ran short.
        lines.append(lines[len(HAND_WRITTEN) + k] + " " + lines[-1 - k])
        k += 1
    for s in lines:
        sys.stdout.write(json.dumps(s, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
