#!/usr/bin/env python3
"""Regenerates resources/visual_table.txt from Unicode decomposition data.

Neighbors of a base character are BMP characters whose canonical (then
compatibility) decomposition starts with that character, plus a short list
of cross-script lookalikes. At most 20 neighbors per character.
"""
import sys
import unicodedata

LIMIT = 20

# Cross-script confusables that have no decomposition relation.
LOOKALIKES = {
    "a": "аɑα", "b": "ЬƄ", "c": "сϲⅽ",
    "d": "ԁⅾ", "e": "еє", "g": "ɡց",
    "h": "һհ", "i": "іıι", "j": "јʝ",
    "k": "κк", "l": "ӏⅼı", "m": "мⅿ",
    "n": "пո", "o": "оοօ", "p": "рρ",
    "q": "ԛɋʠ", "r": "гɾ", "s": "ѕʂ",
    "t": "тƫ", "u": "υս", "v": "νѵ",
    "w": "ѡԝ", "x": "хχ", "y": "уү",
    "z": "ʐᴢ",
    "A": "ΑА", "B": "ΒВ", "C": "СⅭ",
    "D": "ⅮᎠ", "E": "ΕЕ", "F": "Ϝᖴ",
    "G": "ԌᏀ", "H": "ΗН", "I": "ΙІⅠ",
    "J": "ЈᎫ", "K": "ΚК", "L": "ⅬᏞ",
    "M": "ΜМ", "N": "ΝИ", "O": "ΟО",
    "P": "ΡР", "Q": "Ԛⵕ", "R": "Ꭱʀ",
    "S": "ЅᏚ", "T": "ΤТ", "U": "Ս∪",
    "V": "ⅤѴ", "W": "ԜᎳ", "X": "ΧХ",
    "Y": "ΥҮ", "Z": "ΖᏃ",
    "0": "ΟоО", "1": "lΙ", "2": "Ƨᒿ",
    "3": "ЗƷ", "4": "ᏎЧ", "5": "ƼЅ",
    "6": "бᏮ", "7": "Ꮽ⼂", "8": "Ȣȣ",
    "9": "৭੧",
}


def usable(ch):
    cat = unicodedata.category(ch)
    return cat[0] in "LNSP" and not (0xD800 <= ord(ch) <= 0xDFFF)


def neighbors(base):
    canonical, compat = [], []
    for cp in range(0x80, 0x10000):
        ch = chr(cp)
        if not usable(ch):
            continue
        nfd = unicodedata.normalize("NFD", ch)
        if nfd != ch and nfd[0] == base:
            canonical.append(ch)
            continue
        nfkd = unicodedata.normalize("NFKD", ch)
        if nfkd != ch and nfkd[0] == base and len(nfkd.strip()) <= 2:
            compat.append(ch)
    out = []
    for ch in canonical + list(LOOKALIKES.get(base, "")) + compat:
        if ch != base and ch not in out and usable(ch):
            out.append(ch)
    return out[:LIMIT]


def main(path):
    bases = [chr(c) for c in range(ord("0"), ord("9") + 1)]
    bases += [chr(c) for c in range(ord("A"), ord("Z") + 1)]
    bases += [chr(c) for c in range(ord("a"), ord("z") + 1)]
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("# Builtin homoglyph neighbor table: U+XXXX<TAB>U+XXXX U+XXXX ...\n")
        for b in bases:
            ns = neighbors(b)
            assert len(ns) >= 5, (b, ns)
            f.write("U+%04X\t%s\n" % (ord(b), " ".join("U+%04X" % ord(n) for n in ns)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "resources/visual_table.txt")
