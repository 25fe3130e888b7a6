"""Finite-dimensional graded-commutative algebras with exact arithmetic.

Three encodings share one interface (:class:`Algebra`):

* :class:`MonomialAlgebra` — generators ``g_i`` with degrees ``d_i`` and
  truncations ``q_i`` (the relation ``g_i**q_i = 0``), basis = exponent
  vectors ``e`` with ``0 <= e_i < q_i`` in lexicographic order over the
  declared generator order.  Multiplication adds exponents, truncates, and
  picks up the Koszul sign from counting transpositions of odd-degree
  factors.
* :class:`TableAlgebra` — explicit graded basis plus structure constants,
  validated for unitality, grading, graded commutativity and associativity.
* :class:`ProductAlgebra` — the graded tensor product of two algebras with
  structure constants computed lazily:
  ``(a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'``.

Basis ordering is deterministic everywhere, so searches and reported
witnesses are reproducible.  Elements are sparse maps from basis index to a
nonzero field coefficient.  The default capacity cap refuses algebras with
more than 4096 basis elements; operations that need exhaustive basis
enumeration or dense linear algebra respect it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Optional, Sequence, Union

from .fields import Coeff, Field, field_from_json

DEFAULT_CAPACITY = 4096


class InvalidPresentationError(ValueError):
    """The given presentation violates an algebra axiom."""


class CapacityError(RuntimeError):
    """Construction or computation would exceed the configured dimension cap."""


class DomainMismatchError(ValueError):
    """Operands belong to different algebras or fields."""


@dataclass(frozen=True)
class GeneratorSpec:
    """A truncated generator: ``name`` of ``degree`` with ``name**truncation = 0``."""

    name: str
    degree: int
    truncation: int = 2

    def __post_init__(self):
        if not self.name:
            raise InvalidPresentationError("generator name must be nonempty")
        if self.degree < 1:
            raise InvalidPresentationError(
                f"generator {self.name}: degree must be positive, got {self.degree}"
            )
        if self.truncation < 2:
            raise InvalidPresentationError(
                f"generator {self.name}: truncation must be >= 2, got {self.truncation}"
            )


class Element:
    """Sparse exact linear combination of basis classes of one algebra."""

    __slots__ = ("algebra", "coeffs")
    __hash__ = None

    def __init__(self, algebra: "Algebra", coeffs: dict):
        clean = {}
        for i, c in coeffs.items():
            c = algebra.field.coerce(c)
            if not algebra.field.is_zero(c):
                clean[i] = c
        self.algebra = algebra
        self.coeffs = clean

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> Optional[int]:
        """Common degree of the support, None for 0, error if mixed."""
        if not self.coeffs:
            return None
        degs = {self.algebra.degrees[i] for i in self.coeffs}
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def _check_same(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise DomainMismatchError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        f = self.algebra.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = f.add(out.get(i, f.zero()), c)
        return Element(self.algebra, out)

    def __sub__(self, other: "Element") -> "Element":
        self._check_same(other)
        f = self.algebra.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = f.sub(out.get(i, f.zero()), c)
        return Element(self.algebra, out)

    def __neg__(self) -> "Element":
        f = self.algebra.field
        return Element(self.algebra, {i: f.neg(c) for i, c in self.coeffs.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, Element):
            self._check_same(other)
            return Element(self.algebra, self.algebra.mul_vec(self.coeffs, other.coeffs))
        f = self.algebra.field
        s = f.coerce(other)
        return Element(self.algebra, {i: f.mul(c, s) for i, c in self.coeffs.items()})

    def __rmul__(self, other) -> "Element":
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.coeffs == other.coeffs
        )

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        f = self.algebra.field
        parts = []
        for i in sorted(self.coeffs):
            c, lab = self.coeffs[i], self.algebra.labels[i]
            if lab == "1":
                term = f.format(c)
            elif c == f.one():
                term = lab
            elif f.characteristic == 0 and c == -1:
                term = f"-{lab}"
            else:
                term = f"{f.format(c)}·{lab}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    __repr__ = __str__


class Algebra:
    """Common interface of all encodings.

    Subclasses populate ``field``, ``degrees``, ``labels``, ``unit_index`` and
    implement :meth:`mul_basis`.  Instances are immutable after construction
    and safe to share; all operations are pure.
    """

    field: Field
    degrees: list[int]
    labels: list[str]
    unit_index: int

    @property
    def dim(self) -> int:
        return len(self.degrees)

    @property
    def top_degree(self) -> int:
        return max(self.degrees)

    def mul_basis(self, i: int, j: int) -> dict:
        raise NotImplementedError

    def indices_by_degree(self) -> dict[int, list[int]]:
        try:
            return self._by_degree
        except AttributeError:
            by: dict[int, list[int]] = {}
            for i, d in enumerate(self.degrees):
                by.setdefault(d, []).append(i)
            self._by_degree = by
            return by

    def basis_in_degree(self, d: int) -> list[Element]:
        return [self.basis_element(i) for i in self.indices_by_degree().get(d, [])]

    def poincare_polynomial(self) -> list[int]:
        """Coefficient c_d = number of basis classes of degree d, d = 0..top."""
        out = [0] * (self.top_degree + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    # -- element constructors ----------------------------------------------

    def element(self, coeffs: dict) -> Element:
        return Element(self, coeffs)

    def basis_element(self, i: int) -> Element:
        return Element(self, {i: self.field.one()})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {self.unit_index: self.field.one()})

    # -- products ------------------------------------------------------------

    def mul_vec(self, u: dict, v: dict) -> dict:
        f = self.field
        out: dict = {}
        for i, ci in u.items():
            for j, cj in v.items():
                cij = f.mul(ci, cj)
                for k, s in self.mul_basis(i, j).items():
                    acc = f.add(out.get(k, f.zero()), f.mul(cij, s))
                    if f.is_zero(acc):
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    # -- axiom checking --------------------------------------------------------

    def check_axioms(self, seed: int = 0, sample: int = 2048) -> None:
        """Verify unit, grading, graded commutativity, associativity.

        Commutativity is checked on all basis pairs; associativity on all
        triples when dim <= 32 and on a seeded random sample otherwise.
        Raises InvalidPresentationError naming the first offender.
        """
        f = self.field
        n = self.dim
        if self.degrees[self.unit_index] != 0:
            raise InvalidPresentationError("unit must have degree 0")
        for i in range(n):
            if self.mul_basis(self.unit_index, i) != {i: f.one()} or self.mul_basis(
                i, self.unit_index
            ) != {i: f.one()}:
                raise InvalidPresentationError(f"unit fails on basis class {self.labels[i]}")
        for i in range(n):
            for j in range(n):
                prod_ij = self.mul_basis(i, j)
                d = self.degrees[i] + self.degrees[j]
                for k in prod_ij:
                    if self.degrees[k] != d:
                        raise InvalidPresentationError(
                            f"product {self.labels[i]}·{self.labels[j]} violates grading"
                        )
                sign = f.sign_to_coeff(self.degrees[i] * self.degrees[j])
                prod_ji = self.mul_basis(j, i)
                expect = {k: f.mul(sign, c) for k, c in prod_ji.items()}
                if prod_ij != expect:
                    raise InvalidPresentationError(
                        f"graded commutativity fails on {self.labels[i]}, {self.labels[j]}"
                    )
        if n <= 32:
            triples: Iterable = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(sample)
            )
        for i, j, k in triples:
            left = self.mul_vec(self.mul_basis(i, j), {k: f.one()})
            right = self.mul_vec({i: f.one()}, self.mul_basis(j, k))
            if left != right:
                raise InvalidPresentationError(
                    "associativity fails on "
                    f"{self.labels[i]}, {self.labels[j]}, {self.labels[k]}"
                )


class MonomialAlgebra(Algebra):
    """Truncated-generator encoding (tensor product of one-generator algebras)."""

    def __init__(
        self,
        field: Field,
        gens: Sequence[GeneratorSpec],
        capacity: int = DEFAULT_CAPACITY,
    ):
        gens = tuple(gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise InvalidPresentationError(f"duplicate generator names in {names}")
        if field.characteristic != 2:
            for g in gens:
                if g.degree % 2 == 1 and g.truncation != 2:
                    raise InvalidPresentationError(
                        f"generator {g.name} has odd degree {g.degree}; truncation "
                        f"must be 2 over a field of characteristic != 2"
                    )
        dim = prod(g.truncation for g in gens)
        if dim > capacity:
            raise CapacityError(f"dimension {dim} exceeds capacity {capacity}")
        self.field = field
        self.gens = gens
        self.exponents: list[tuple[int, ...]] = list(
            itertools.product(*(range(g.truncation) for g in gens))
        )
        self.index_of = {e: i for i, e in enumerate(self.exponents)}
        self.degrees = [
            sum(e * g.degree for e, g in zip(exp, gens)) for exp in self.exponents
        ]
        self.labels = [self._label(exp) for exp in self.exponents]
        self.unit_index = self.index_of[(0,) * len(gens)]
        self._odd = [g.degree % 2 == 1 for g in gens]

    def _label(self, exp: tuple[int, ...]) -> str:
        parts = [
            g.name if e == 1 else f"{g.name}^{e}"
            for e, g in zip(exp, self.gens)
            if e > 0
        ]
        return "·".join(parts) if parts else "1"

    def generator_element(self, name: str) -> Element:
        for pos, g in enumerate(self.gens):
            if g.name == name:
                exp = tuple(1 if t == pos else 0 for t in range(len(self.gens)))
                return self.basis_element(self.index_of[exp])
        raise KeyError(f"no generator named {name!r}")

    def mul_basis(self, i: int, j: int) -> dict:
        e, f = self.exponents[i], self.exponents[j]
        out = []
        for a, (ea, fa, g) in enumerate(zip(e, f, self.gens)):
            s = ea + fa
            if s >= g.truncation:
                return {}
            out.append(s)
        # Koszul sign: each of the f_a copies of generator a crosses each of
        # the e_b copies of generator b, for every pair a < b; a transposition
        # of two odd-degree factors contributes -1.
        exponent = 0
        for a in range(len(e)):
            if f[a] and self._odd[a]:
                for b in range(a + 1, len(e)):
                    if e[b] and self._odd[b]:
                        exponent += f[a] * e[b]
        return {self.index_of[tuple(out)]: self.field.sign_to_coeff(exponent)}


class TableAlgebra(Algebra):
    """Structure-constant encoding with axiom validation at construction."""

    def __init__(
        self,
        field: Field,
        names: Sequence[str],
        degrees: Sequence[int],
        products: dict,
        capacity: int = DEFAULT_CAPACITY,
        validate: bool = True,
    ):
        if len(names) != len(degrees):
            raise InvalidPresentationError("names and degrees differ in length")
        if len(set(names)) != len(names):
            raise InvalidPresentationError("duplicate basis names")
        if len(names) > capacity:
            raise CapacityError(f"dimension {len(names)} exceeds capacity {capacity}")
        units = [i for i, d in enumerate(degrees) if d == 0]
        if len(units) != 1:
            raise InvalidPresentationError(
                f"need exactly one degree-0 basis class, found {len(units)}"
            )
        self.field = field
        self.labels = list(names)
        self.degrees = list(degrees)
        self.unit_index = units[0]
        table: dict[tuple[int, int], dict] = {}
        for (i, j), terms in products.items():
            clean = {}
            for k, c in terms.items():
                c = field.coerce(c)
                if not field.is_zero(c):
                    clean[k] = c
            if self.unit_index in (i, j):
                other = j if i == self.unit_index else i
                if clean != {other: field.one()}:
                    raise InvalidPresentationError(
                        f"explicit unit product for {names[other]} contradicts unitality"
                    )
                continue  # unit products are implied
            if clean:
                table[(i, j)] = clean
        self._table = table
        if validate:
            self.check_axioms()

    def mul_basis(self, i: int, j: int) -> dict:
        if i == self.unit_index:
            return {j: self.field.one()}
        if j == self.unit_index:
            return {i: self.field.one()}
        return dict(self._table.get((i, j), {}))


class ProductAlgebra(Algebra):
    """Graded tensor product with lazily computed structure constants."""

    def __init__(self, left: Algebra, right: Algebra, capacity: int = DEFAULT_CAPACITY):
        if left.field != right.field:
            raise DomainMismatchError("tensor factors must share the coefficient field")
        dim = left.dim * right.dim
        if dim > capacity:
            raise CapacityError(f"dimension {dim} exceeds capacity {capacity}")
        self.field = left.field
        self.left = left
        self.right = right
        rd = right.dim
        self.degrees = [
            left.degrees[i] + right.degrees[j]
            for i in range(left.dim)
            for j in range(right.dim)
        ]
        self.labels = [
            f"{left.labels[i]}⊗{right.labels[j]}"
            for i in range(left.dim)
            for j in range(right.dim)
        ]
        self.unit_index = left.unit_index * rd + right.unit_index
        self._mul_cached = lru_cache(maxsize=1 << 18)(self._mul_uncached)

    def pair_index(self, i: int, j: int) -> int:
        return i * self.right.dim + j

    def split_index(self, k: int) -> tuple[int, int]:
        return divmod(k, self.right.dim)

    def _mul_uncached(self, x: int, y: int) -> tuple:
        f = self.field
        i1, j1 = self.split_index(x)
        i2, j2 = self.split_index(y)
        sign = f.sign_to_coeff(self.right.degrees[j1] * self.left.degrees[i2])
        out = {}
        lterms = self.left.mul_basis(i1, i2)
        if lterms:
            rterms = self.right.mul_basis(j1, j2)
            for k, ca in lterms.items():
                for l, cb in rterms.items():
                    out[self.pair_index(k, l)] = f.mul(sign, f.mul(ca, cb))
        return tuple(out.items())

    def mul_basis(self, i: int, j: int) -> dict:
        return dict(self._mul_cached(i, j))


def tensor(
    left: Algebra, right: Algebra, capacity: int = DEFAULT_CAPACITY
) -> Algebra:
    """Graded (Künneth) tensor product.

    Two monomial algebras tensor to a monomial algebra by concatenating the
    generator lists (duplicate right-hand names get a ``'`` suffix); any other
    combination yields a :class:`ProductAlgebra`.  Dimensions multiply and the
    Poincaré polynomial is the coefficientwise product.
    """
    if left.field != right.field:
        raise DomainMismatchError("tensor factors must share the coefficient field")
    if isinstance(left, MonomialAlgebra) and isinstance(right, MonomialAlgebra):
        taken = {g.name for g in left.gens}
        gens = list(left.gens)
        for g in right.gens:
            name = g.name
            while name in taken:
                name += "'"
            taken.add(name)
            gens.append(GeneratorSpec(name, g.degree, g.truncation))
        return MonomialAlgebra(left.field, gens, capacity=capacity)
    return ProductAlgebra(left, right, capacity=capacity)


def tensor_square(algebra: Algebra, capacity: int = DEFAULT_CAPACITY) -> ProductAlgebra:
    """The tensor square A (x) A in product form (labels ``x⊗y``)."""
    return ProductAlgebra(algebra, algebra, capacity=capacity)


# -- descriptor files ---------------------------------------------------------
#
# Ring descriptor JSON (schema shipped in frametc/schemas/ring.schema.json):
#   {"field": {"char": 2},
#    "type": "monomial",
#    "generators": [{"name": "b1", "degree": 1, "truncation": 4}, ...]}
# or
#   {"field": {"char": 0},
#    "type": "table",
#    "basis": [{"name": "1", "degree": 0}, {"name": "a1", "degree": 1}, ...],
#    "products": [["a1", "b1", "w", 1], ...]}
#
# Table products list one summand per row: x·y contains coeff·z.  Rows for the
# unit are implied.  Coefficients are ints or "p/q" strings (char 0 only).


def _coeff_from_json(c, field: Field) -> Coeff:
    if isinstance(c, str):
        return field.coerce(Fraction(c))
    if isinstance(c, int):
        return field.coerce(c)
    raise InvalidPresentationError(f"bad coefficient {c!r} (int or 'p/q' string)")


def ring_from_json(
    obj: dict, field: Optional[Field] = None, capacity: int = DEFAULT_CAPACITY
) -> Algebra:
    """Build an algebra from its JSON descriptor (see module comment)."""
    if not isinstance(obj, dict):
        raise InvalidPresentationError("ring descriptor must be a JSON object")
    if "field" in obj:
        declared = field_from_json(obj["field"])
        if field is not None and declared != field:
            raise DomainMismatchError(
                f"descriptor declares {declared.token()} but {field.token()} was requested"
            )
        field = declared
    if field is None:
        raise InvalidPresentationError("ring descriptor needs a 'field' entry")
    kind = obj.get("type")
    if kind == "monomial":
        gens = [
            GeneratorSpec(g["name"], g["degree"], g.get("truncation", 2))
            for g in obj.get("generators", [])
        ]
        return MonomialAlgebra(field, gens, capacity=capacity)
    if kind == "table":
        basis = obj.get("basis", [])
        names = [b["name"] for b in basis]
        degrees = [b["degree"] for b in basis]
        index = {n: i for i, n in enumerate(names)}
        products: dict[tuple[int, int], dict] = {}
        for row in obj.get("products", []):
            if len(row) != 4:
                raise InvalidPresentationError(f"product row {row!r} is not [x,y,z,coeff]")
            x, y, z, c = row
            try:
                key = (index[x], index[y])
                k = index[z]
            except KeyError as e:
                raise InvalidPresentationError(f"unknown basis name {e.args[0]!r}")
            terms = products.setdefault(key, {})
            f = field
            acc = f.add(terms.get(k, f.zero()), _coeff_from_json(c, f))
            terms[k] = acc
        return TableAlgebra(field, names, degrees, products, capacity=capacity)
    raise InvalidPresentationError(f"unknown ring type {kind!r} (monomial or table)")


def ring_to_json(algebra: Algebra) -> dict:
    """Serialize a monomial or table algebra back to descriptor form."""
    if isinstance(algebra, MonomialAlgebra):
        return {
            "field": algebra.field.to_json(),
            "type": "monomial",
            "generators": [
                {"name": g.name, "degree": g.degree, "truncation": g.truncation}
                for g in algebra.gens
            ],
        }
    if isinstance(algebra, TableAlgebra):
        rows = []
        for (i, j), terms in sorted(algebra._table.items()):
            for k in sorted(terms):
                c = terms[k]
                rows.append(
                    [
                        algebra.labels[i],
                        algebra.labels[j],
                        algebra.labels[k],
                        str(c) if isinstance(c, Fraction) and c.denominator != 1 else int(c),
                    ]
                )
        return {
            "field": algebra.field.to_json(),
            "type": "table",
            "basis": [
                {"name": n, "degree": d}
                for n, d in zip(algebra.labels, algebra.degrees)
            ],
            "products": rows,
        }
    raise InvalidPresentationError("only monomial and table algebras serialize")
