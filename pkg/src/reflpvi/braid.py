"""Braid group action on reflection triples and induced quintuple maps.

The three-string braid group acts on triples by

    beta1(r1, r2, r3) = (r2, r2^-1 r1 r2, r3)
    beta2(r1, r2, r3) = (r1, r3, r3^-1 r2 r3)

For triples of order-2 reflections the action descends to polynomial maps
of the fingerprint quintuple (w, x, y, p, q).  Deriving those maps from
the trace identities gives

    beta1: (w, y, x + p + q + wy, -q - wy, -p - wy)
    beta2: (x, w + p + q + xy, y, -q - xy, -p - xy)

with the inverse letters given by the companion pair

    beta1^-1: (w, y + p + q + wx, x, -q - wx, -p - wx)
    beta2^-1: (x + p + q + wy, w, y, -q - wy, -p - wy)

All four satisfy fingerprint(beta(T)) = beta_hat(fingerprint(T)) exactly,
which the test suite checks on whole groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .linalg3 import Mat3
from .fingerprints import Fingerprint, TripleClass, fingerprint

LETTERS = ("b1", "b2", "b1i", "b2i")


class UnsupportedFingerprintActionError(ValueError):
    """Quintuple-level action asked for a triple with some t_i != -1."""


class OrbitBoundError(RuntimeError):
    pass


class GenusError(ValueError):
    pass


def reduce_word(word: Sequence[str]) -> Tuple[str, ...]:
    """Free reduction: cancel adjacent inverse pairs."""
    inverse = {"b1": "b1i", "b1i": "b1", "b2": "b2i", "b2i": "b2"}
    out: List[str] = []
    for letter in word:
        if letter not in LETTERS:
            raise ValueError(f"unknown braid letter {letter!r}")
        if out and out[-1] == inverse[letter]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def braid_act(letter: str, triple: Sequence[Mat3]) -> Tuple[Mat3, Mat3, Mat3]:
    r1, r2, r3 = triple
    if letter == "b1":
        return (r2, r2.inverse() * r1 * r2, r3)
    if letter == "b2":
        return (r1, r3, r3.inverse() * r2 * r3)
    if letter == "b1i":
        return (r1 * r2 * r1.inverse(), r1, r3)
    if letter == "b2i":
        return (r1, r2 * r3 * r2.inverse(), r2)
    raise ValueError(f"unknown braid letter {letter!r}")


def braid_act_word(word: Sequence[str], triple: Sequence[Mat3]):
    for letter in word:
        triple = braid_act(letter, triple)
    return triple


def braid_act_quintuple(letter: str, fp: Fingerprint) -> Fingerprint:
    """Induced action on (w, x, y, p, q) for order-2 reflection triples."""
    if not fp.all_t_minus_one():
        raise UnsupportedFingerprintActionError(
            "quintuple-level braid action needs all t_i = -1; "
            "act on the triple itself instead")
    t = fp.t1
    w, x, y, p, q = fp.quintuple()
    if letter == "b1":
        return Fingerprint(t, t, t, w, y, x + p + q + w * y, -q - w * y, -p - w * y)
    if letter == "b2":
        return Fingerprint(t, t, t, x, w + p + q + x * y, y, -q - x * y, -p - x * y)
    if letter == "b1i":
        return Fingerprint(t, t, t, w, y + p + q + w * x, x, -q - w * x, -p - w * x)
    if letter == "b2i":
        return Fingerprint(t, t, t, x + p + q + w * y, w, y, -q - w * y, -p - w * y)
    raise ValueError(f"unknown braid letter {letter!r}")


@dataclass
class OrbitReport:
    seeds: List[Fingerprint]
    orbit: List[Fingerprint]
    sigma1: Tuple[int, ...]
    sigma2: Tuple[int, ...]
    sigma_prod: Tuple[int, ...]
    cycle_types: Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]
    genus: Optional[int]
    branches: int

    def to_dict(self) -> dict:
        return {
            "branches": self.branches,
            "orbit": [fp.to_dict() for fp in self.orbit],
            "sigma1": list(self.sigma1),
            "sigma2": list(self.sigma2),
            "sigma_prod": list(self.sigma_prod),
            "cycle_types": [list(ct) for ct in self.cycle_types],
            "genus": self.genus,
        }


def cycle_type(perm: Sequence[int]) -> Tuple[int, ...]:
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def cover_genus(branches: int, cycle_types: Sequence[Sequence[int]]) -> int:
    """Genus of the smooth cover of the thrice-punctured sphere with the
    given branch-cycle data (Euler-characteristic count)."""
    if len(cycle_types) != 3:
        raise GenusError("expected cycle types over exactly three branch points")
    n = branches
    for ct in cycle_types:
        if sum(ct) != n:
            raise GenusError("cycle type is not a partition of the branch count")
    euler = 2 * n - sum(n - len(ct) for ct in cycle_types)
    if euler % 2 != 0:
        raise GenusError("branch data gives a non-integral genus")
    g = (2 - euler) // 2
    if g < 0:
        raise GenusError("branch data gives negative genus")
    return g


class _TripleState:
    """Orbit node carrying a representative triple for general t_i."""

    __slots__ = ("triple", "fp")

    def __init__(self, triple):
        self.triple = tuple(triple)
        self.fp = fingerprint(triple)


def _act(state, letter: str, quintuple_level: bool):
    if quintuple_level:
        return braid_act_quintuple(letter, state)
    return _TripleState(braid_act(letter, state.triple))


def _state_fp(state, quintuple_level: bool) -> Fingerprint:
    return state if quintuple_level else state.fp


def orbit(seed: Union[Fingerprint, Sequence[Mat3]], generators: str = "full",
          max_size: int = 1_000_000) -> OrbitReport:
    """Closure of a fingerprint class under the chosen braid generators.

    generators = "full" uses beta1, beta2 (the full braid group on three
    strings); "pure" uses their squares (the pure braid group).  The report
    always records the permutations sigma1, sigma2 induced by the squares
    on the orbit, their composition (apply beta1^2 then beta2^2), all three
    cycle types and the cover genus they determine.
    """
    if generators not in ("full", "pure"):
        raise ValueError("generators must be 'full' or 'pure'")
    if isinstance(seed, Fingerprint):
        quintuple_level = seed.all_t_minus_one()
        if not quintuple_level:
            raise UnsupportedFingerprintActionError(
                "fingerprint seeds need all t_i = -1; pass the triple instead")
        start = seed
    else:
        start = _TripleState(seed)
        quintuple_level = False
        if start.fp.all_t_minus_one():
            start = start.fp
            quintuple_level = True

    letter_words = {
        "full": (("b1",), ("b2",)),
        "pure": (("b1", "b1"), ("b2", "b2")),
    }[generators]

    index: Dict[tuple, int] = {}
    states = []

    def visit(state) -> int:
        key = _state_fp(state, quintuple_level).key()
        idx = index.get(key)
        if idx is None:
            if len(states) >= max_size:
                raise OrbitBoundError(
                    f"orbit exceeded bound {max_size}; diverging input?")
            idx = len(states)
            index[key] = idx
            states.append(state)
        return idx

    visit(start)
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for word in letter_words:
                state = states[i]
                for letter in word:
                    state = _act(state, letter, quintuple_level)
                before = len(states)
                j = visit(state)
                if j >= before:
                    nxt.append(j)
        frontier = nxt

    def square_perm(letter: str) -> Tuple[int, ...]:
        out = []
        for st in states:
            img = _act(_act(st, letter, quintuple_level), letter, quintuple_level)
            key = _state_fp(img, quintuple_level).key()
            target = index.get(key)
            if target is None:
                raise OrbitBoundError(
                    "orbit is not closed under the pure braid generators")
            out.append(target)
        return tuple(out)

    sigma1 = square_perm("b1")
    sigma2 = square_perm("b2")
    sigma_prod = tuple(sigma2[sigma1[i]] for i in range(len(states)))
    types = (cycle_type(sigma1), cycle_type(sigma2), cycle_type(sigma_prod))
    try:
        genus = cover_genus(len(states), types)
    except GenusError:
        genus = None
    fps = [_state_fp(s, quintuple_level) for s in states]
    return OrbitReport(
        seeds=[fps[0]],
        orbit=fps,
        sigma1=sigma1,
        sigma2=sigma2,
        sigma_prod=sigma_prod,
        cycle_types=types,
        genus=genus,
        branches=len(states),
    )


def orbit_partition(classes: Sequence[TripleClass]) -> List[int]:
    """Sizes of the full-braid-group orbits on a set of triple classes."""
    index = {cls.fingerprint.key(): i for i, cls in enumerate(classes)}
    seen = [False] * len(classes)
    sizes = []
    for i, cls in enumerate(classes):
        if seen[i]:
            continue
        rep = orbit(cls.fingerprint if cls.fingerprint.all_t_minus_one()
                    else cls.representative, generators="full")
        count = 0
        for fp in rep.orbit:
            j = index.get(fp.key())
            if j is None:
                raise OrbitBoundError(
                    "braid image leaves the supplied class set; "
                    "classify without first_fixed restriction first")
            if not seen[j]:
                seen[j] = True
                count += 1
        if count != rep.branches:
            raise OrbitBoundError("classes duplicate fingerprints in the orbit")
        sizes.append(rep.branches)
    return sorted(sizes)
