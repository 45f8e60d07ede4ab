#!/usr/bin/env python3
"""Write a small aligned corpus in FLORES file layout from CLDR display names.

Line i in every file names the same thing (a territory, month or weekday),
so token totals are comparable across languages. This is a stand-in for
offline demos and tests; it is not a substitute for real parallel prose.

    python3 make_cldr_parallel.py ../../data/corpus/cldr-names
"""

import pathlib
import sys

from babel import Locale

# corpus code -> CLDR locale
LANGS = {
    "eng_Latn": "en", "tel_Telu": "te", "hin_Deva": "hi", "ben_Beng": "bn",
    "ory_Orya": "or", "urd_Arab": "ur", "sat_Olck": "sat", "dzo_Tibt": "dz",
    "zho_Hans": "zh_Hans", "spa_Latn": "es", "arb_Arab": "ar", "fra_Latn": "fr",
    "amh_Ethi": "am", "mya_Mymr": "my", "tam_Taml": "ta",
}


def main():
    out = pathlib.Path(sys.argv[1])
    out.mkdir(parents=True, exist_ok=True)
    locs = {code: Locale.parse(tag) for code, tag in LANGS.items()}
    keys = None
    for loc in locs.values():
        k = {t for t in loc.territories if t.isalpha()}
        keys = k if keys is None else keys & k
    keys = sorted(keys)
    for code, loc in locs.items():
        lines = [loc.territories[k] for k in keys]
        lines += [loc.months["format"]["wide"][m] for m in range(1, 13)]
        lines += [loc.days["format"]["wide"][d] for d in range(7)]
        assert all(s.strip() and "\n" not in s for s in lines), code
        (out / f"{code}.dev").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{len(locs)} languages x {len(keys) + 19} lines -> {out}")


if __name__ == "__main__":
    main()
