"""Normal forms and the word-length function for the modeled monoids.

Every element factors uniquely as w1 * e * w2 with e a lattice idempotent,
w1 right-reduced modulo the absorbing parabolic of e, and w2 left-reduced
modulo the full centralizer parabolic of e.  The length of an element is
the number of simple-reflection letters in a cheapest word for it; the
idempotent letters cost nothing, and on normal forms the length is just
len(w1) + len(w2) in the Coxeter sense.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .coxeter import WeylGroup
from .lattice import CrossSectionLattice, LambdaElement
from .model import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    GeneratorName,
    MonoidFamily,
    PartialInjection,
    build_generators,
    enumerate_monoid,
)


@dataclass(frozen=True)
class NormalForm:
    """The canonical triple; equality of normal forms is equality of elements."""

    w1: PartialInjection
    e: LambdaElement
    w2: PartialInjection


class OutsideMonoidError(ValueError):
    """Partial injection that has no expression inside the modeled monoid."""


class RennerMonoid:
    """Engine for one family and rank: model, group, lattice, normal forms.

    All tables are built eagerly at construction and never mutated, so a
    single engine can be shared freely across threads.
    """

    def __init__(self, family: str, rank: int):
        self.fam = MonoidFamily(family, rank)
        self.generators = build_generators(self.fam)
        self.weyl = WeylGroup(
            {g.index: p for g, p in self.generators.items() if g.kind == "s"},
            self.fam.degree,
        )
        self.lattice = CrossSectionLattice(self.fam, self.generators, self.weyl)

        # Diagonal idempotent -> (lattice element, first conjugator in BFS order).
        self._conjugation: dict[PartialInjection, tuple[LambdaElement, PartialInjection]] = {}
        for e in self.lattice.elements:
            for u in self.weyl.elements:
                d = u * e.idem * u.inverse()
                self._conjugation.setdefault(d, (e, u))

        # Meet-under table: (e, w, f) with w minimal in its (e, f) double coset
        # maps to the idempotent h with e*w*f = h*w = h.
        self._meet_domain: dict[tuple[str, str], frozenset[PartialInjection]] = {}
        self._meet_under: dict[tuple[str, PartialInjection, str], LambdaElement] = {}
        for e in self.lattice.elements:
            ge = self.lattice.coset_minima(e).left
            for f in self.lattice.elements:
                dom = ge & self.lattice.coset_minima(f).right
                self._meet_domain[e.token, f.token] = dom
                for w in dom:
                    prod = e.idem * w * f.idem
                    h = self.lattice.by_idem(prod)
                    if h.idem * w != h.idem:
                        raise RuntimeError(
                            f"{e.token}*w*{f.token} does not absorb its middle factor"
                        )
                    if w not in self.lattice.absorbing_subgroup(h):
                        raise RuntimeError(
                            f"middle factor of {e.token}*w*{f.token} escapes the"
                            f" absorbing subgroup of {h.token}"
                        )
                    if not self.lattice.leq(h, self.lattice.meet(e, f)):
                        raise RuntimeError(
                            f"{e.token}*w*{f.token} is not below the plain meet"
                        )
                    self._meet_under[e.token, w, f.token] = h

        self._nf_memo: dict[PartialInjection, NormalForm] = {}
        self._elements: tuple[PartialInjection, ...] | None = None

    @property
    def identity(self) -> PartialInjection:
        return self.weyl.identity

    @property
    def alphabet(self) -> tuple[GeneratorName, ...]:
        return tuple(self.generators)

    def generator(self, name: GeneratorName) -> PartialInjection:
        try:
            return self.generators[name]
        except KeyError:
            raise ValueError(f"unknown generator {name}") from None

    def elements(self, cap: int = DEFAULT_ENUMERATION_CAP) -> tuple[PartialInjection, ...]:
        """All monoid elements in deterministic enumeration order (cached)."""
        if self._elements is None:
            self._elements = tuple(enumerate_monoid(self.fam, cap))
        if len(self._elements) > cap:
            raise EnumerationCapExceeded(f"enumeration cap exceeded: cap={cap}")
        return self._elements

    def evaluate(self, word: Iterable[GeneratorName]) -> PartialInjection:
        """Product of generator letters, word read left to right."""
        out = self.identity
        for g in word:
            out = out * self.generator(g)
        return out

    def value(self, nf: NormalForm) -> PartialInjection:
        return nf.w1 * nf.e.idem * nf.w2

    def normal_decompose(self, x: PartialInjection) -> NormalForm:
        """The unique canonical triple evaluating to x.

        Steps: write x = w * d with w a unit-group extension of x and d the
        restriction idempotent of its domain; locate d as a conjugate
        u * e * u^-1 of a lattice element of matching rank; then squeeze
        w * u * e * u^-1 to the canonical triple by reducing the right
        factor modulo the centralizer of e, sliding the nonabsorbing part
        of the remainder to the left, and reducing the left factor modulo
        the absorbing parabolic of e.
        """
        hit = self._nf_memo.get(x)
        if hit is not None:
            return hit
        if x.degree != self.fam.degree:
            raise ValueError(f"degree mismatch: expected {self.fam.degree}, got {x.degree}")
        dom = x.domain()
        d = PartialInjection.restriction(self.fam.degree, dom)
        conj = self._conjugation.get(d)
        if conj is None:
            raise OutsideMonoidError(
                f"domain {dom} matches no conjugate of a lattice idempotent"
            )
        ext = None
        for w in self.weyl.elements:
            if all(w(j) == x(j) for j in dom):
                ext = w
                break
        if ext is None:
            raise OutsideMonoidError(
                f"no unit-group permutation extends {x!r}; element is outside the monoid"
            )
        e, u = conj
        tm = self.lattice.type_map(e)
        b = u.inverse()
        w2 = self.weyl.min_coset_rep(b, tm.commuting, "left")
        z = b * w2.inverse()
        z_non = self.weyl.min_coset_rep(z, tm.absorbing, "right")
        z_abs = z_non.inverse() * z
        if not self.weyl.in_parabolic(z_abs, tm.absorbing):
            raise RuntimeError("direct-product split failed during decomposition")
        w1 = self.weyl.min_coset_rep(ext * u * z_non, tm.absorbing, "right")
        nf = NormalForm(w1, e, w2)
        if self.value(nf) != x:
            raise RuntimeError("normal decomposition does not reproduce its input")
        self._nf_memo[x] = nf
        return nf

    def multiply(self, a: NormalForm, b: NormalForm) -> NormalForm:
        return self.normal_decompose(self.value(a) * self.value(b))

    def length(self, nf: NormalForm) -> int:
        return self.weyl.length(nf.w1) + self.weyl.length(nf.w2)

    def length_of_element(self, x: PartialInjection) -> int:
        return self.length(self.normal_decompose(x))

    def canonical_word(self, nf: NormalForm) -> tuple[GeneratorName, ...]:
        """The canonical word: fixed reduced word of w1, then e, then that of w2."""
        parts = [GeneratorName.s(i) for i in self.weyl.reduced_word(nf.w1)]
        if nf.e.name is not None:
            parts.append(nf.e.name)
        parts.extend(GeneratorName.s(i) for i in self.weyl.reduced_word(nf.w2))
        return tuple(parts)

    def meet_under_domain(self, e: LambdaElement, f: LambdaElement) -> frozenset[PartialInjection]:
        """All w minimal in their double coset for the pair (e, f)."""
        return self._meet_domain[e.token, f.token]

    def meet_under(
        self, e: LambdaElement, w: PartialInjection, f: LambdaElement
    ) -> LambdaElement:
        """The lattice element equal to e * w * f, for double-coset-minimal w."""
        try:
            return self._meet_under[e.token, w, f.token]
        except KeyError:
            raise ValueError(
                f"w not double-coset minimal for ({e.token}, {f.token}): {w!r}"
            ) from None

    def left_mult_generator(self, i: int, nf: NormalForm) -> NormalForm:
        """Left multiplication by s_i via the absorb-or-extend dichotomy.

        Either s_i * w1 stays right-reduced modulo the absorbing parabolic
        of e and simply replaces w1, or the product slides across w1 into a
        letter absorbed by e and the element is unchanged.
        """
        s = self.weyl.s(i)
        v = s * nf.w1
        absorbing = self.lattice.type_map(nf.e).absorbing
        if not (self.weyl.right_descents(v) & absorbing):
            return NormalForm(v, nf.e, nf.w2)
        for t in sorted(absorbing):
            if v == nf.w1 * self.weyl.s(t):
                return nf
        raise RuntimeError("left-multiplication dichotomy failed")

    def solomon_delta(self, nf: NormalForm) -> int:
        """len(w1) - len(w2); offsets per idempotent are normalized to zero,
        so only differences within a fixed idempotent are meaningful."""
        return self.weyl.length(nf.w1) - self.weyl.length(nf.w2)
