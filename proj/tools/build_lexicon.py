#!/usr/bin/env python3
# Copyright 2026 The lineametrics Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Builds data/lexicon.tsv from the CMU Pronouncing Dictionary.

Syllable count = number of stress-marked vowel phones in the first listed
pronunciation. Entries in the supplement file are added verbatim and win
over CMU. With --derive-from TEXT, words of TEXT missing from both are given
counts derived from elided and archaic forms of listed words (lov'd ->
loved, know'st -> know, viewest -> view + 1, maketh -> make + 1, o'er...).

    pip download cmudict --no-deps && python3 -m zipfile -e cmudict-*.whl cmu
    python3 tools/build_lexicon.py cmu/cmudict/data/cmudict.dict \
        --supplement data/lexicon_supplement.tsv \
        --derive-from data/fixtures/sonnets.txt -o data/lexicon.tsv
"""

import argparse
import re
import sys

WORD_RE = re.compile(r"[A-Za-z]+(?:['’][A-Za-z]+)*")
KEY_RE = re.compile(r"^[a-z]+(?:'[a-z]+)*$")


def load_cmu(path):
    counts = {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            parts = line.split("#", 1)[0].split()
            if len(parts) < 2:
                continue
            word = parts[0]
            if "(" in word or not KEY_RE.match(word):
                continue
            counts.setdefault(word, sum(p[-1].isdigit() for p in parts[1:]))
    return counts


def load_supplement(path):
    out = {}
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            word, count = line.split("\t")
            out[word.lower()] = int(count)
    return out


def derive(word, lex):
    def get(w):
        return lex.get(w)

    if word.startswith("o'er"):
        rest = word[4:]
        if not rest:
            return 1
        n = get(rest) or derive(rest, lex)
        return 1 + n if n else None
    if word.endswith("e'er"):
        n = get(word[:-4] + "e")
        return n + 1 if n else None
    if word.endswith("'s") or word.endswith("'t"):
        base = word[:-2]
        n = get(base) or derive(base, lex)
        if n and word.endswith("'s") and re.search(r"(s|x|z|ce|ge|ch|sh)$", base):
            n += 1
        return n
    if word.endswith("'d"):
        base = word[:-2]
        for cand in (base + "ed", base + "d"):
            if cand in lex:
                return lex[cand]
        n = get(base) or get(base + "e")
        return n
    if word.endswith("'st"):
        base = word[:-3]
        return get(base) or get(base + "e")
    if word.endswith("est") and len(word) > 5:
        base = word[:-3]
        for cand in (base, base + "e", base[:-1] + "y"):
            if cand in lex:
                return lex[cand] + 1
    if word.endswith("eth") and len(word) > 5:
        base = word[:-3]
        for cand in (base, base + "e", base[:-1] + "y"):
            if cand in lex:
                return lex[cand] + 1
    if re.search(r"[^aeiou](st)$", word) and len(word) <= 8:
        # archaic second-person auxiliaries: canst, shouldst, mayst ...
        stem = re.sub(r"e?st$", "", word)
        if stem in lex:
            return lex[stem]
    return None


def main(argv):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("cmudict")
    ap.add_argument("--supplement")
    ap.add_argument("--derive-from", action="append", default=[])
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args(argv)

    lex = load_cmu(args.cmudict)
    if args.supplement:
        lex.update(load_supplement(args.supplement))

    derived = 0
    for path in args.derive_from:
        with open(path, encoding="utf-8") as f:
            text = f.read().replace("’", "'")
        for w in sorted({m.lower() for m in WORD_RE.findall(text)}):
            if w in lex:
                continue
            n = derive(w, lex)
            if n:
                lex[w] = n
                derived += 1

    with open(args.output, "w", encoding="utf-8", newline="\n") as f:
        for w in sorted(lex):
            f.write(f"{w}\t{max(lex[w], 1)}\n")
    print(f"{len(lex)} entries ({derived} derived)", file=sys.stderr)


if __name__ == "__main__":
    main(sys.argv[1:])
