"""Writes data/languages.csv (code,name): English display names from CLDR.

    python3 make_language_names.py /path/to/cldr-core/supplemental \
        ../../data/demographics/cldr/speakers.csv ../../data/corpus/cldr-names \
        > ../../data/languages.csv

Codes are ISO 639-3, taken from the speaker snapshot and the corpus file
names. The translation prompt substitutes these names verbatim.
"""

import json
import sys
from pathlib import Path

from babel import Locale

# Individual languages whose CLDR name is the macrolanguage's.
OVERRIDES = {
    "arb": "Standard Arabic",
    "zsm": "Standard Malay",
    "pes": "Western Persian",
    "khk": "Halh Mongolian",
    "lvs": "Standard Latvian",
    "ekk": "Standard Estonian",
    "uzn": "Northern Uzbek",
    "npi": "Nepali",
    "ory": "Odia",
    "swh": "Swahili",
    "gaz": "West Central Oromo",
    "als": "Tosk Albanian",
    "azj": "North Azerbaijani",
    "plt": "Plateau Malagasy",
    "quy": "Ayacucho Quechua",
    "pbt": "Southern Pashto",
    "ydd": "Eastern Yiddish",
    "taq": "Tamasheq",
    "kbp": "Kabiye",
    "ben": "Bengali",
}


def main():
    supplemental, speakers, corpus = map(Path, sys.argv[1:4])
    aliases = json.loads((supplemental / "aliases.json").read_text(encoding="utf-8"))
    alias = aliases["supplemental"]["metadata"]["alias"]["languageAlias"]
    to_two = {
        k: v["_replacement"]
        for k, v in alias.items()
        if len(k) == 3 and v.get("_reason") == "overlong"
    }
    names = Locale("en").languages

    codes = set()
    for line in speakers.read_text(encoding="utf-8").splitlines():
        if line and not line.startswith("#") and not line.startswith("language,"):
            codes.add(line.split(",")[0])
    for f in corpus.glob("*.dev"):
        codes.add(f.name.split("_")[0])

    print("code,name")
    for code in sorted(codes):
        name = OVERRIDES.get(code) or names.get(code) or names.get(to_two.get(code, ""))
        if name:
            print(f"{code},{name}" if "," not in name else f'{code},"{name}"')


if __name__ == "__main__":
    main()
