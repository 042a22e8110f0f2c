"""Noncommutative integer polynomials in two letters.

Two alphabets are used: ``ab`` (every letter has degree 1) and ``cd``
(``c`` has degree 1, ``d`` has degree 2).  Words are plain strings, so the
canonical term order is simply ``(degree, word)`` with Python string
comparison, which puts ``a`` before ``b`` and ``c`` before ``d``.
"""

from __future__ import annotations

import json
import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

ALPHABETS = {"ab": ("a", "b"), "cd": ("c", "d")}


class AlphabetMismatch(ValueError):
    pass


class NotCdExpressible(ValueError):
    """Raised by :func:`ab_to_cd`; ``witness`` is the undecodable ab-word."""

    def __init__(self, witness: str):
        super().__init__(f"no cd-expression: lex-least remaining word {witness!r} is not of the form (a|ab)*")
        self.witness = witness


class NonHomogeneous(ValueError):
    pass


class PolyParseError(ValueError):
    pass


def word_degree(word: str, alphabet: str) -> int:
    if alphabet == "cd":
        return len(word) + word.count("d")
    return len(word)


class NcPoly:
    """Immutable finitely supported map ``word -> int`` over one alphabet."""

    __slots__ = ("alphabet", "_terms", "_hash")

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] = (), alphabet: str = "cd"):
        if alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        letters = set(ALPHABETS[alphabet])
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = {}
        for word, coeff in items:
            if not set(word) <= letters:
                raise ValueError(f"word {word!r} not over alphabet {alphabet!r}")
            acc[word] = acc.get(word, 0) + int(coeff)
        self.alphabet = alphabet
        self._terms = {w: c for w, c in acc.items() if c}
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def monomial(cls, word: str, alphabet: str = "cd", coeff: int = 1) -> NcPoly:
        return cls({word: coeff}, alphabet)

    @classmethod
    def constant(cls, value: int, alphabet: str = "cd") -> NcPoly:
        return cls({"": value}, alphabet)

    @classmethod
    def zero(cls, alphabet: str = "cd") -> NcPoly:
        return cls({}, alphabet)

    # -- inspection -------------------------------------------------------
    def __getitem__(self, word: str) -> int:
        return self._terms.get(word, 0)

    coeff = __getitem__

    def __iter__(self) -> Iterator[str]:
        return iter(self.words())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def words(self) -> list[str]:
        return sorted(self._terms, key=self._key)

    def items(self) -> list[tuple[str, int]]:
        return [(w, self._terms[w]) for w in self.words()]

    def _key(self, word: str) -> tuple[int, str]:
        return (word_degree(word, self.alphabet), word)

    def degrees(self) -> set[int]:
        return {word_degree(w, self.alphabet) for w in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common degree of a homogeneous nonzero polynomial, else None."""
        degs = self.degrees()
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == ({"": other} if other else {})
        if not isinstance(other, NcPoly):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.alphabet == other.alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if set(self._terms) <= {""}:
                # agree with int equality for constants
                self._hash = hash(self._terms.get("", 0))
            else:
                self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NcPoly({format_poly(self)!r}, alphabet={self.alphabet!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: NcPoly) -> str:
        # the zero polynomial is alphabet-neutral
        if not other._terms:
            return self.alphabet
        if not self._terms:
            return other.alphabet
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self.alphabet} vs {other.alphabet}")
        return self.alphabet

    def __add__(self, other: NcPoly | int) -> NcPoly:
        if isinstance(other, int):
            other = NcPoly.constant(other, self.alphabet)
        alpha = self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return NcPoly(acc, alpha)

    __radd__ = __add__

    def __neg__(self) -> NcPoly:
        return NcPoly({w: -c for w, c in self._terms.items()}, self.alphabet)

    def __sub__(self, other: NcPoly | int) -> NcPoly:
        return self + (-other)

    def __rsub__(self, other: int) -> NcPoly:
        return (-self) + other

    def __mul__(self, other: NcPoly | int) -> NcPoly:
        if isinstance(other, int):
            return NcPoly({w: c * other for w, c in self._terms.items()}, self.alphabet)
        return multiply(self, other)

    def __rmul__(self, other: int) -> NcPoly:
        return self * other

    def __pow__(self, k: int) -> NcPoly:
        result = NcPoly.constant(1, self.alphabet)
        for _ in range(k):
            result = result * self
        return result


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    alpha = p._check(q)
    acc: dict[str, int] = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            acc[u + v] = acc.get(u + v, 0) + a * b
    return NcPoly(acc, alpha)


def substitute(p: NcPoly, image1: NcPoly, image2: NcPoly) -> NcPoly:
    """Apply the algebra homomorphism sending the two letters of ``p`` to the images."""
    target = image1._check(image2)
    first, second = ALPHABETS[p.alphabet]
    images = {first: image1, second: image2}
    result = NcPoly.zero(target)
    for word, coeff in p._terms.items():
        term = NcPoly.constant(coeff, target)
        for letter in word:
            term = multiply(term, images[letter])
        result = result + term
    return result


@lru_cache(maxsize=None)
def _expand_cd_word(word: str) -> tuple[tuple[str, int], ...]:
    # c -> a+b, d -> ab+ba, built letter by letter from the cached prefix
    if not word:
        return (("", 1),)
    prefix = _expand_cd_word(word[:-1])
    tails = ("a", "b") if word[-1] == "c" else ("ab", "ba")
    acc: dict[str, int] = {}
    for u, k in prefix:
        for t in tails:
            acc[u + t] = acc.get(u + t, 0) + k
    return tuple(sorted(acc.items()))


def cd_to_ab(q: NcPoly) -> NcPoly:
    if q and q.alphabet != "cd":
        raise AlphabetMismatch("cd_to_ab expects a cd-polynomial")
    acc: dict[str, int] = {}
    for word, coeff in q._terms.items():
        for u, k in _expand_cd_word(word):
            acc[u] = acc.get(u, 0) + coeff * k
    return NcPoly(acc, "ab")


def _decode_lex_least(word: str) -> str | None:
    """Inverse of c->a, d->ab; None when ``word`` is not in (a|ab)*."""
    out = []
    i = 0
    while i < len(word):
        if word[i] != "a":
            return None
        if i + 1 < len(word) and word[i + 1] == "b":
            out.append("d")
            i += 2
        else:
            out.append("c")
            i += 1
    return "".join(out)


def ab_to_cd(p: NcPoly) -> NcPoly:
    """Rewrite a homogeneous ab-polynomial in c = a+b, d = ab+ba.

    Peels off the lex-least remaining word each round.  The lex-least word
    in the expansion of a cd-word is its image under c->a, d->ab, so each
    round is forced and only introduces lex-larger words.
    """
    if p and p.alphabet != "ab":
        raise AlphabetMismatch("ab_to_cd expects an ab-polynomial")
    if not p.is_homogeneous():
        raise NonHomogeneous(f"degrees {sorted(p.degrees())}")
    remaining = dict(p._terms)
    result: dict[str, int] = {}
    while remaining:
        least = min(remaining)
        cd_word = _decode_lex_least(least)
        if cd_word is None:
            raise NotCdExpressible(least)
        coeff = remaining[least]
        result[cd_word] = coeff
        for u, k in _expand_cd_word(cd_word):
            v = remaining.get(u, 0) - coeff * k
            if v:
                remaining[u] = v
            else:
                remaining.pop(u, None)
    return NcPoly(result, "cd")


_G_IMAGE = {"c": "d", "d": "cd"}


def derivation_g(q: NcPoly) -> NcPoly:
    """The derivation with c -> d, d -> cd, extended by the Leibniz rule."""
    if q and q.alphabet != "cd":
        raise AlphabetMismatch("derivation_g expects a cd-polynomial")
    acc: dict[str, int] = {}
    for word, coeff in q._terms.items():
        for i, letter in enumerate(word):
            w = word[:i] + _G_IMAGE[letter] + word[i + 1:]
            acc[w] = acc.get(w, 0) + coeff
    return NcPoly(acc, "cd")


def _upoly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _trim(p: Sequence[int]) -> tuple[int, ...]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def evaluate_commutative(q: NcPoly, c_value: Sequence[int], d_value: Sequence[int]) -> tuple[int, ...]:
    """Substitute commuting univariate polynomials (coefficient lists, constant first).

    The zero polynomial comes back as the empty tuple.
    """
    letters = ALPHABETS[q.alphabet]
    values = {letters[0]: list(c_value), letters[1]: list(d_value)}
    total: list[int] = []
    for word, coeff in q._terms.items():
        term = [coeff]
        for letter in word:
            term = _upoly_mul(term, values[letter])
        if len(term) > len(total):
            total.extend([0] * (len(term) - len(total)))
        for i, v in enumerate(term):
            total[i] += v
    return _trim(total)


def words_of_degree(n: int, alphabet: str = "cd") -> list[str]:
    """All words of the given degree, in canonical order."""
    if n < 0:
        return []
    if alphabet == "ab":
        out = [""]
        for _ in range(n):
            out = [w + x for w in out for x in "ab"]
        return sorted(out)
    table: list[list[str]] = [[""], ["c"]]
    for k in range(2, n + 1):
        table.append([w + "c" for w in table[k - 1]] + [w + "d" for w in table[k - 2]])
    return sorted(table[n])


def d_count(word: str) -> int:
    return word.count("d")


# -- text and JSON ------------------------------------------------------------

def format_poly(p: NcPoly) -> str:
    if not p:
        return "0"
    return " + ".join(f"{c}*{w}" if w else f"{c}" for w, c in p.items())


_TERM = re.compile(r"^([+-]?\d+)(?:\*([A-Za-z]+))?$")


def parse_poly(text: str, alphabet: str | None = None) -> NcPoly:
    """Parse the canonical text form; the alphabet is inferred when not given.

    A bare integer term stands for the empty word.
    """
    text = text.strip()
    if not text:
        raise PolyParseError("empty polynomial text")
    if text == "0":
        return NcPoly.zero(alphabet or "cd")
    terms: dict[str, int] = {}
    for token in text.split(" + "):
        m = _TERM.match(token.strip())
        if m is None:
            raise PolyParseError(f"malformed term {token!r}")
        coeff, word = int(m.group(1)), m.group(2) or ""
        if coeff == 0:
            raise PolyParseError(f"zero coefficient in term {token!r}")
        if word in terms:
            raise PolyParseError(f"duplicate word {word!r}")
        terms[word] = coeff
    letters = set("".join(terms))
    if alphabet is None:
        alphabet = "ab" if letters & {"a", "b"} else "cd"
    unknown = letters - set(ALPHABETS[alphabet])
    if unknown:
        raise PolyParseError(f"unknown letter(s) {''.join(sorted(unknown))} for alphabet {alphabet}")
    return NcPoly(terms, alphabet)


def to_json_obj(p: NcPoly) -> dict:
    return {
        "alphabet": p.alphabet,
        "terms": [{"word": w, "coeff": str(c)} for w, c in p.items()],
    }


def to_json(p: NcPoly) -> str:
    return json.dumps(to_json_obj(p))


def from_json(data: str | dict) -> NcPoly:
    obj = json.loads(data) if isinstance(data, str) else data
    alphabet = obj["alphabet"]
    terms: dict[str, int] = {}
    for t in obj["terms"]:
        if t["word"] in terms:
            raise PolyParseError(f"duplicate word {t['word']!r}")
        terms[t["word"]] = int(t["coeff"])
    return NcPoly(terms, alphabet)


# convenient letters
A = NcPoly.monomial("a", "ab")
B = NcPoly.monomial("b", "ab")
C = NcPoly.monomial("c", "cd")
D = NcPoly.monomial("d", "cd")
