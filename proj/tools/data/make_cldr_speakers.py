"""Builds data/demographics/cldr/speakers.csv from CLDR supplemental data.

    npm pack cldr-core@48.2.0 && tar xzf cldr-core-48.2.0.tgz
    python3 make_cldr_speakers.py package/supplemental > ../../data/demographics/cldr/speakers.csv

speakers = territory population x languagePopulation percent / 100, rounded.
CLDR percentages count everyone who uses the language (L1 and L2), so totals
run higher than first-language censuses.
"""

import json
import sys
from pathlib import Path

# Individual languages used by FLORES-style corpora where ISO 639-1 names a
# macrolanguage (ar -> arb rather than ara).
PREFERRED_INDIVIDUAL = {
    "arb", "ory", "pes", "zsm", "lvs", "khk", "uzn", "swh", "ydd", "npi",
    "gaz", "als", "azj", "plt", "quy", "ekk", "pbt",
}


def load(root, name):
    return json.loads((root / name).read_text(encoding="utf-8"))["supplemental"]


def iso3_map(aliases):
    overlong, individual = {}, {}
    for code, entry in aliases.items():
        target = entry.get("_replacement", "")
        reason = entry.get("_reason")
        if len(code) != 3 or "-" in target or "_" in target:
            continue
        if reason == "overlong":
            overlong[target] = code
        elif reason == "macrolanguage" and code in PREFERRED_INDIVIDUAL:
            individual[target] = code
    return overlong, individual


def main():
    root = Path(sys.argv[1])
    territories = load(root, "territoryInfo.json")["territoryInfo"]
    alpha3 = {
        k: v["_alpha3"]
        for k, v in load(root, "codeMappings.json")["codeMappings"].items()
        if "_alpha3" in v
    }
    aliases = load(root, "aliases.json")["metadata"]["alias"]["languageAlias"]
    overlong, individual = iso3_map(aliases)

    counts = {}
    for region, info in territories.items():
        country = alpha3.get(region)
        population = float(info.get("_population", 0))
        if not country or population <= 0:
            continue
        for tag, lp in info.get("languagePopulation", {}).items():
            base = tag.split("_")[0]
            if len(base) == 2:
                code = individual.get(base) or overlong.get(base)
            else:
                code = base
            if not code:
                continue
            n = round(population * float(lp["_populationPercent"]) / 100.0)
            # Script variants of one language in one country overlap; keep the larger.
            key = (code, country)
            counts[key] = max(counts.get(key, 0), n)

    out = sys.stdout
    out.write("# Unicode CLDR 48.2.0 supplemental territoryInfo (cldr-core npm package)\n")
    out.write("# speakers = territory population x language population percent; L1+L2\n")
    out.write("language,country,count,ref_year\n")
    for (code, country), n in sorted(counts.items()):
        if n > 0:
            out.write(f"{code},{country},{n},\n")


if __name__ == "__main__":
    main()
