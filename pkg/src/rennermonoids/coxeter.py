"""Finite Coxeter engine for the unit group of the matrix model.

Lengths come from breadth-first search over the Cayley graph of the simple
reflections, so the same machinery serves every embedding (types A, B, D)
with no per-type inversion formula.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .model import PartialInjection


class WeylGroup:
    """The group generated by the simple-reflection permutations.

    Elements are total PartialInjection values; the table caches lengths
    and descent sets for all of them.  Immutable after construction.
    """

    def __init__(self, gens: dict[int, PartialInjection], degree: int):
        self.degree = degree
        self._s = dict(sorted(gens.items()))
        ident = PartialInjection.identity(degree)
        elements: list[PartialInjection] = [ident]
        index: dict[PartialInjection, int] = {ident: 0}
        length: list[int] = [0]
        queue = deque([ident])
        while queue:
            w = queue.popleft()
            lw = length[index[w]]
            for s in self._s.values():
                v = s * w
                if v not in index:
                    index[v] = len(elements)
                    elements.append(v)
                    length.append(lw + 1)
                    queue.append(v)
        self.elements: tuple[PartialInjection, ...] = tuple(elements)
        self._index = index
        self._length = tuple(length)
        left: list[frozenset[int]] = []
        right: list[frozenset[int]] = []
        for w in elements:
            lw = self._length[index[w]]
            left.append(
                frozenset(i for i, s in self._s.items() if self._length[index[s * w]] < lw)
            )
            right.append(
                frozenset(i for i, s in self._s.items() if self._length[index[w * s]] < lw)
            )
        self._left = tuple(left)
        self._right = tuple(right)
        self._parabolic_cache: dict[frozenset[int], frozenset[PartialInjection]] = {}

    @property
    def identity(self) -> PartialInjection:
        return self.elements[0]

    @property
    def s_indices(self) -> tuple[int, ...]:
        return tuple(self._s)

    def s(self, i: int) -> PartialInjection:
        try:
            return self._s[i]
        except KeyError:
            raise ValueError(f"no simple reflection with index {i}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PartialInjection]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return w in self._index

    def _at(self, w: PartialInjection) -> int:
        try:
            return self._index[w]
        except KeyError:
            raise ValueError(f"not an element of the unit group: {w!r}") from None

    def length(self, w: PartialInjection) -> int:
        return self._length[self._at(w)]

    def left_descents(self, w: PartialInjection) -> frozenset[int]:
        return self._left[self._at(w)]

    def right_descents(self, w: PartialInjection) -> frozenset[int]:
        return self._right[self._at(w)]

    def evaluate(self, word: Iterable[int]) -> PartialInjection:
        """Product of simple reflections, word read left to right."""
        out = self.identity
        for i in word:
            out = out * self.s(i)
        return out

    def reduced_word(self, w: PartialInjection) -> tuple[int, ...]:
        """The fixed reduced word: repeatedly strip the lowest left descent."""
        word: list[int] = []
        while True:
            ds = self.left_descents(w)
            if not ds:
                return tuple(word)
            i = min(ds)
            word.append(i)
            w = self.s(i) * w

    def min_coset_rep(
        self, w: PartialInjection, I: Iterable[int], side: str = "right"
    ) -> PartialInjection:
        """Minimal-length element of w * W_I (side "right") or W_I * w (side "left")."""
        gens = frozenset(I)
        if side == "right":
            while True:
                ds = self.right_descents(w) & gens
                if not ds:
                    return w
                w = w * self.s(min(ds))
        if side == "left":
            while True:
                ds = self.left_descents(w) & gens
                if not ds:
                    return w
                w = self.s(min(ds)) * w
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def min_double_coset_rep(
        self, w: PartialInjection, J: Iterable[int], I: Iterable[int]
    ) -> PartialInjection:
        """Minimal-length element of W_J * w * W_I, by alternating one-sided reductions."""
        J, I = frozenset(J), frozenset(I)
        while True:
            v = self.min_coset_rep(self.min_coset_rep(w, J, "left"), I, "right")
            if v == w:
                return w
            w = v

    def in_parabolic(self, w: PartialInjection, I: Iterable[int]) -> bool:
        """Whether w lies in the standard parabolic subgroup generated by I."""
        return self.min_coset_rep(w, I, "left") == self.identity

    def parabolic(self, I: Iterable[int]) -> frozenset[PartialInjection]:
        """All elements of the standard parabolic subgroup generated by I."""
        key = frozenset(I)
        cached = self._parabolic_cache.get(key)
        if cached is None:
            members = {self.identity}
            queue = deque(members)
            while queue:
                w = queue.popleft()
                for i in key:
                    v = self.s(i) * w
                    if v not in members:
                        members.add(v)
                        queue.append(v)
            cached = frozenset(members)
            self._parabolic_cache[key] = cached
        return cached
