"""Constructors for the cohomology rings the bound rules consume.

Covered: the special orthogonal groups SO(n) over characteristic 0 and 2,
real and complex projective spaces, tori, spheres, and closed orientable
surfaces.  Characteristic-0 rings are realized over the exact rationals; for
rings whose structure constants are integers this computes the same ranks,
kernels and cup lengths as any other characteristic-0 coefficient field, so
results stated over the reals hold verbatim.

Catalog entries are addressable by id strings of the form ``family:param`` or
``family:param:charP``, e.g. ``so:5:char2``, ``cp:3:char0``, ``rp:7``
(``rp`` implies characteristic 2).  ``t`` = torus, ``s`` = sphere,
``sigma`` = orientable surface by genus.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .algebra import (
    Algebra,
    DEFAULT_CAPACITY,
    GeneratorSpec,
    InvalidPresentationError,
    MonomialAlgebra,
    TableAlgebra,
)
from .fields import F2, QQ, Field, field_of, parse_field


class CatalogError(ValueError):
    """Unknown catalog id or unsupported field for the requested ring."""


def pi_exponent(i: int, n: int) -> int:
    """Smallest power of two ``2**k`` with ``i * 2**k >= n`` (i odd, i < n).

    These are the truncation exponents of the characteristic-2 cohomology of
    SO(n): one truncated polynomial generator of degree i per odd i < n.
    """
    if i % 2 == 0 or i < 1:
        raise CatalogError(f"i must be odd and positive, got {i}")
    if i >= n:
        raise CatalogError(f"require i < n, got i={i}, n={n}")
    p = 1
    while i * p < n:
        p *= 2
    return p


def so_ring(n: int, field: Field, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """Cohomology ring of SO(n) over the given field.

    Characteristic != 2: an exterior algebra on ``n // 2`` odd-degree
    generators — degrees 3, 7, ..., 4m-1 for SO(2m+1) and degrees
    3, 7, ..., 4m-5 plus a final generator of degree 2m-1 for SO(2m)
    (the extra generator is listed last).  Characteristic 2: the tensor
    product of F2[b_i]/(b_i^{p_i}) over odd i < n with p_i from
    :func:`pi_exponent`.  n = 1 yields the ground field (SO(1) is a point).
    """
    if n < 1:
        raise CatalogError(f"so requires n >= 1, got {n}")
    if field.characteristic == 2:
        gens = [
            GeneratorSpec(f"b{i}", i, pi_exponent(i, n)) for i in range(1, n, 2)
        ]
        return MonomialAlgebra(field, gens, capacity=capacity)
    m = n // 2
    if n % 2 == 1:
        degrees = [4 * k - 1 for k in range(1, m + 1)]
        gens = [GeneratorSpec(f"a{d}", d, 2) for d in degrees]
    else:
        degrees = [4 * k - 1 for k in range(1, m)]
        gens = [GeneratorSpec(f"a{d}", d, 2) for d in degrees]
        gens.append(GeneratorSpec(f"a'{2 * m - 1}", 2 * m - 1, 2))
    return MonomialAlgebra(field, gens, capacity=capacity)


def rp_ring(n: int, field: Field = F2, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """F2[a]/(a^{n+1}) with ``a`` of degree 1 — real projective n-space.

    Only characteristic 2 is supported; other coefficients are rejected
    rather than silently returning a different ring.
    """
    if n < 1:
        raise CatalogError(f"rp requires n >= 1, got {n}")
    if field.characteristic != 2:
        raise CatalogError("rp ring is only available over characteristic 2")
    return MonomialAlgebra(field, [GeneratorSpec("a", 1, n + 1)], capacity=capacity)


def cp_ring(n: int, field: Field = QQ, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """K[u]/(u^{n+1}) with ``u`` of degree 2 — complex projective n-space."""
    if n < 1:
        raise CatalogError(f"cp requires n >= 1, got {n}")
    return MonomialAlgebra(field, [GeneratorSpec("u", 2, n + 1)], capacity=capacity)


def torus_ring(n: int, field: Field = QQ, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """Exterior algebra on n degree-1 generators — the n-torus.

    The square-zero truncation is imposed explicitly so the same presentation
    is correct over characteristic 2 as well.
    """
    if n < 1:
        raise CatalogError(f"t requires n >= 1, got {n}")
    gens = [GeneratorSpec(f"u{i}", 1, 2) for i in range(1, n + 1)]
    return MonomialAlgebra(field, gens, capacity=capacity)


def sphere_ring(n: int, field: Field = QQ, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """K[x]/(x^2) with ``x`` of degree n — the n-sphere."""
    if n < 1:
        raise CatalogError(f"s requires n >= 1, got {n}")
    return MonomialAlgebra(field, [GeneratorSpec("x", n, 2)], capacity=capacity)


def surface_ring(g: int, field: Field = F2, capacity: int = DEFAULT_CAPACITY) -> Algebra:
    """Closed orientable surface of genus g as a structure-constant algebra.

    Basis 1, a_1..a_g, b_1..b_g, w with a_i·b_i = w = -b_i·a_i, every other
    product of positive-degree classes zero.  (Genus 1 is the torus in table
    form.)  Not a truncated-generator algebra for g >= 2, hence the table
    encoding.
    """
    if g < 1:
        raise CatalogError(f"sigma requires genus >= 1, got {g}")
    names = ["1"] + [f"a{i}" for i in range(1, g + 1)] + [
        f"b{i}" for i in range(1, g + 1)
    ] + ["w"]
    degrees = [0] + [1] * (2 * g) + [2]
    w = 2 * g + 1
    products: dict[tuple[int, int], dict] = {}
    one = field.one()
    for i in range(1, g + 1):
        products[(i, g + i)] = {w: one}
        products[(g + i, i)] = {w: field.neg(one)}
    return TableAlgebra(field, names, degrees, products, capacity=capacity)


# -- catalog ids -----------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    """A named ring instance: ``id`` is ``family:param:charP``."""

    family: str
    param: int
    field: Field
    algebra: Algebra = dc_field(compare=False)
    citation: str = dc_field(compare=False, default="")

    @property
    def entry_id(self) -> str:
        return f"{self.family}:{self.param}:char{self.field.characteristic}"


_FAMILIES: dict[str, tuple[Callable, str]] = {
    "so": (so_ring, "standard presentation of the cohomology of SO(n)"),
    "rp": (rp_ring, "mod-2 cohomology of real projective space"),
    "cp": (cp_ring, "cohomology of complex projective space"),
    "t": (torus_ring, "cohomology of the n-torus"),
    "s": (sphere_ring, "cohomology of the n-sphere"),
    "sigma": (surface_ring, "cohomology of the closed orientable genus-g surface"),
}


def parse_catalog_id(text: str) -> tuple[str, int, Optional[Field]]:
    """Split ``family:param[:charP]``; rp defaults to characteristic 2."""
    parts = text.strip().split(":")
    if len(parts) not in (2, 3):
        raise CatalogError(f"bad catalog id {text!r}; expected family:param[:charP]")
    family, param_s = parts[0], parts[1]
    if family not in _FAMILIES:
        raise CatalogError(
            f"unknown ring family {family!r}; known: {', '.join(sorted(_FAMILIES))}"
        )
    try:
        param = int(param_s)
    except ValueError:
        raise CatalogError(f"bad parameter {param_s!r} in catalog id {text!r}")
    field: Optional[Field] = None
    if len(parts) == 3:
        field = parse_field(parts[2])
    elif family == "rp":
        field = F2
    return family, param, field


def catalog_ring(
    text: str, field: Optional[Field] = None, capacity: int = DEFAULT_CAPACITY
) -> CatalogEntry:
    """Resolve a catalog id (with optional external field) to a built entry."""
    family, param, declared = parse_catalog_id(text)
    if declared is not None and field is not None and declared != field:
        raise CatalogError(
            f"catalog id {text!r} declares {declared.token()} but "
            f"{field.token()} was requested"
        )
    use = declared or field
    if use is None:
        raise CatalogError(f"catalog id {text!r} needs a field (append :charP)")
    ctor, citation = _FAMILIES[family]
    algebra = ctor(param, use, capacity=capacity)
    return CatalogEntry(family, param, use, algebra, citation)


def catalog_entries(capacity: int = DEFAULT_CAPACITY) -> list[CatalogEntry]:
    """The canonical registry of shipped ring instances.

    Used by the oracle-equivalence and property suites and by the CLI's id
    listing.  Order is deterministic.
    """
    ids = []
    ids += [f"so:{n}:char0" for n in range(1, 9)]
    ids += [f"so:{n}:char2" for n in range(1, 9)]
    ids += [f"rp:{n}" for n in (1, 2, 3, 7)]
    ids += [f"cp:{n}:char0" for n in range(1, 5)]
    ids += [f"cp:{n}:char2" for n in (1, 2)]
    ids += [f"t:{n}:char0" for n in range(1, 5)]
    ids += [f"t:{n}:char2" for n in range(1, 5)]
    ids += [f"s:{n}:char0" for n in range(1, 5)]
    ids += [f"s:{n}:char2" for n in range(1, 5)]
    ids += [f"sigma:{g}:char0" for g in range(1, 4)]
    ids += [f"sigma:{g}:char2" for g in range(1, 4)]
    return [catalog_ring(i, capacity=capacity) for i in ids]
