#!/usr/bin/env python3
"""Encode the multilingual sample with tiktoken and freeze the ids.

    python3 make_golden.py cl100k_base > ../data/golden_cl100k_base.txt

Output: '#' header lines, then one line of space-separated ids per sample
line (an empty line for an empty string). Special tokens are not matched.
"""

import hashlib
import json
import pathlib
import sys

import tiktoken

from tiktoken_offline import get_encoding

HERE = pathlib.Path(__file__).resolve().parent


def main():
    name = sys.argv[1]
    sample = HERE.parent / "data" / "multilingual_sample.jsonl"
    enc = get_encoding(name)
    raw = sample.read_bytes()
    print(f"# oracle: tiktoken {tiktoken.__version__} encode_ordinary, encoding {name}")
    print(f"# sample sha256: {hashlib.sha256(raw).hexdigest()}")
    for line in raw.decode("utf-8").splitlines():
        ids = enc.encode_ordinary(json.loads(line))
        print(" ".join(map(str, ids)))


if __name__ == "__main__":
    main()
