"""Seifert matrices of positive braid closures and their Tristram-Levine signatures.

This module shares no code with the signature engine; it is there to check it.

Seifert's algorithm on the closure of a positive braid on n strands gives n
disks joined by one half-twisted band per crossing. Between two consecutive
crossings sigma_i in the word there is a loop running through both bands; these
loops form a basis of H_1 of the surface. Their linking numbers with pushoffs
depend only on how the crossing positions interleave.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

SIGNATURE_MARGIN = 1e-8


class IndeterminateSignature(ArithmeticError):
    """An eigenvalue is too close to zero to trust its sign."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise ValueError(f"generator {g} out of range for {self.strands} strands")

    def permutation(self) -> list[int]:
        perm = list(range(self.strands))
        for g in self.letters:
            i = abs(g) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return perm

    def closure_components(self) -> int:
        perm, seen, cycles = self.permutation(), set(), 0
        for start in range(self.strands):
            if start in seen:
                continue
            cycles += 1
            j = start
            while j not in seen:
                seen.add(j)
                j = perm[j]
        return cycles


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_{p-1})^q, whose closure is T_{p,q}."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError(f"torus braid needs coprime p, q >= 2, got ({p},{q})")
    return BraidWord(p, tuple(range(1, p)) * q)


def _exact_det(m: np.ndarray) -> int:
    """Bareiss fraction-free elimination on an integer matrix."""
    a = [[int(v) for v in row] for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1] if n else 1


def seifert_matrix_from_braid(b: BraidWord) -> np.ndarray:
    if any(g < 0 for g in b.letters):
        raise ValueError("only positive braid words are supported")
    if b.closure_components() != 1:
        raise ValueError("braid closure is not a knot")

    positions = {i: [k for k, g in enumerate(b.letters) if g == i]
                 for i in range(1, b.strands)}
    loops = [(i, pos[j], pos[j + 1])
             for i, pos in positions.items() for j in range(len(pos) - 1)]
    size = len(loops)
    S = np.zeros((size, size), dtype=np.int64)
    for x, (i, c1, c2) in enumerate(loops):
        S[x, x] = -1
        for y, (k, d1, d2) in enumerate(loops):
            if k == i and d1 == c2:
                S[x, y] = 1
            elif k == i + 1:
                if c1 < d1 < c2 < d2:
                    S[x, y] = -1
                elif d1 < c1 < d2 < c2:
                    S[y, x] = 1

    if abs(_exact_det(S - S.T)) != 1:
        raise AssertionError("S - S^T is not unimodular; Seifert matrix construction is broken")
    return S


def tristram_levine_form(S: np.ndarray, x) -> np.ndarray:
    zeta = np.exp(2j * np.pi * float(Fraction(x)))
    return (1 - zeta) * S + (1 - np.conj(zeta)) * S.T


def tl_signature(S: np.ndarray, x) -> int:
    """Signature of (1 - zeta) S + (1 - conj(zeta)) S^T at zeta = exp(2 pi i x)."""
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"x = {x} must lie in (0, 1)")
    if S.size == 0:
        return 0
    ev = np.linalg.eigvalsh(tristram_levine_form(S, x))
    scale = np.abs(ev).max()
    if np.abs(ev).min() <= SIGNATURE_MARGIN * scale:
        raise IndeterminateSignature(f"form is (nearly) degenerate at x = {x}")
    return int((ev > 0).sum() - (ev < 0).sum())
