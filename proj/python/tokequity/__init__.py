"""Tokenizer premiums, speaker demographics and judge-table helpers."""

from pathlib import Path

from ._core import (
    ParallelCorpus,
    SCALE_PROMPT,
    TRANSLATE_PROMPT,
    TokequityError,
    Vocabulary,
    all_premiums,
    band_label,
    classify_wealth,
    fragmentation_multiplier,
    income_vector,
    inference_flops,
    load_flores,
    parse_binary,
    parse_scale,
    parse_translation,
    premium_change,
    premium_pair,
    premium_vs_english,
    total_speakers,
    weighted_gdp,
)

__version__ = "0.1.0"


def load_vocabulary(name_or_manifest, data_dir=None):
    """Load a vocabulary by name ("cl100k_base") or by manifest path."""
    p = Path(name_or_manifest)
    if p.suffix != ".toml":
        if data_dir is None:
            raise ValueError("pass data_dir when loading a vocabulary by name")
        p = Path(data_dir) / "vocab" / f"{name_or_manifest}.toml"
    return Vocabulary.from_manifest(p)
