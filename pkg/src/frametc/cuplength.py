"""Cup-length computations on graded algebras and their tensor squares.

Three quantities, in increasing strength on the zero-divisor side:

* ``cup_length(A)`` — longest nonzero product from the positive-degree part.
  Closed form for monomial encodings (sum of truncation exponents minus one
  per generator, witnessed by the top monomial); an independent level-set
  span search otherwise (also available for monomial algebras via
  ``method="search"`` as a cross-check).
* ``zcl_basic(A)`` — longest nonzero product of *basic* zero-divisors
  ``m̄ = 1⊗m − m⊗1`` in A⊗A, m running over positive-degree basis classes.
  Restricting to basis classes loses nothing: u ↦ ū is linear, so a product
  of bars of arbitrary elements expands multilinearly into products of bars
  of basis classes; if all of those vanish, so does the original.
* ``zcl_full(A)`` — cup length of the whole zero-divisor ideal
  Z = ker(A⊗A → A).  Computed per degree by exact kernel extraction and
  iterated span products.  For monomial algebras there is a factorization
  fast path: over a field, Z(A⊗B) = Z_A·(B⊗B) + (A⊗A)·Z_B, and expanding a
  product of more than zcl(A)+zcl(B) such elements binomially always
  overruns one of the two factors, so zcl is additive across tensor factors
  and a monomial algebra contributes the sum of its single-generator values.
  The fast path is cross-checked against the direct route by the property
  suite, never by itself.

Every result carries a witness that is re-multiplied and checked nonzero
before it is returned.  Budget-limited searches return ``exact=False`` and
their value is then only a lower bound; callers that need upper bounds must
reject inexact results.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .algebra import (
    Algebra,
    CapacityError,
    DEFAULT_CAPACITY,
    Element,
    MonomialAlgebra,
    ProductAlgebra,
    tensor_square,
)
from .linalg import Echelon, kernel_of_map

DEFAULT_BUDGET = 500_000


class BudgetExceeded(Exception):
    """Internal signal: search node budget ran out."""


@dataclass
class CupLengthResult:
    """Value with witness; ``exact=False`` means lower bound only."""

    value: int
    exact: bool
    method: str
    witness: list[Element] = dc_field(default_factory=list)
    witness_product: Optional[Element] = None
    nodes: int = 0

    def verify(self) -> bool:
        """Re-multiply the witness and confirm a nonzero product of the stated length."""
        if self.value == 0:
            return not self.witness
        if len(self.witness) != self.value:
            return False
        prod = self.witness[0]
        for w in self.witness[1:]:
            prod = prod * w
        if prod.is_zero:
            return False
        if self.witness_product is not None and prod != self.witness_product:
            return False
        return True

    def describe(self) -> dict:
        out = {
            "value": self.value,
            "exact": self.exact,
            "method": self.method,
            "witness": [str(w) for w in self.witness],
        }
        if self.witness_product is not None:
            out["witness_product"] = str(self.witness_product)
        if self.nodes:
            out["nodes"] = self.nodes
        return out


def _checked(result: CupLengthResult) -> CupLengthResult:
    if not result.verify():
        raise AssertionError(
            f"internal error: witness failed re-multiplication for {result.method}"
        )
    return result


# -- cup length ---------------------------------------------------------------


def cup_length(
    A: Algebra,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> CupLengthResult:
    """Longest nonzero product of positive-degree classes.

    ``method``: "auto" (closed form for monomial encodings, search otherwise),
    "closed-form", or "search".
    """
    if method == "auto":
        method = "closed-form" if isinstance(A, MonomialAlgebra) else "search"
    if method == "closed-form":
        if not isinstance(A, MonomialAlgebra):
            raise ValueError("closed form requires the monomial encoding")
        # The top monomial (all exponents maximal) is a nonzero basis class,
        # and total exponent weight is additive and capped, so the value is
        # exactly the sum of (truncation - 1).
        witness: list[Element] = []
        for g in A.gens:
            witness += [A.generator_element(g.name)] * (g.truncation - 1)
        value = len(witness)
        top = A.basis_element(A.index_of[tuple(g.truncation - 1 for g in A.gens)])
        return _checked(
            CupLengthResult(value, True, "closed-form", witness, top if value else None)
        )
    if method != "search":
        raise ValueError(f"unknown cup_length method {method!r}")
    if A.dim > capacity:
        raise CapacityError(
            f"cup-length search on dimension {A.dim} exceeds capacity {capacity}"
        )
    one = A.field.one()
    pos = [i for i in range(A.dim) if A.degrees[i] > 0]
    members = [({i: one}, (i,)) for i in pos]
    best: list[tuple[dict, tuple]] = []
    value = 0
    nodes = 0
    while members:
        value += 1
        best = members
        nxt = []
        ech = Echelon(A.field)
        for vec, factors in members:
            for g in pos:
                nodes += 1
                prod = A.mul_vec(vec, {g: one})
                if prod and ech.insert(dict(prod))[0]:
                    nxt.append((prod, factors + (g,)))
        members = nxt
    if value == 0:
        return _checked(CupLengthResult(0, True, "search", nodes=nodes))
    vec, factors = best[0]
    witness = [A.basis_element(i) for i in factors]
    return _checked(
        CupLengthResult(value, True, "search", witness, A.element(vec), nodes)
    )


# -- zero-divisors ----------------------------------------------------------------


def diagonal_image(T: ProductAlgebra, vec: dict) -> dict:
    """Image of a tensor-square vector under the multiplication map A⊗A → A."""
    A = T.left
    f = A.field
    out: dict = {}
    for k, c in vec.items():
        i, j = T.split_index(k)
        for m, s in A.mul_basis(i, j).items():
            acc = f.add(out.get(m, f.zero()), f.mul(c, s))
            if f.is_zero(acc):
                out.pop(m, None)
            else:
                out[m] = acc
    return out


def bar(T: ProductAlgebra, u: Element) -> Element:
    """The zero-divisor 1⊗u − u⊗1 associated with u, inside the tensor square."""
    A = T.left
    f = A.field
    unit = A.unit_index
    coeffs: dict = {}
    for i, c in u.coeffs.items():
        k = T.pair_index(unit, i)
        coeffs[k] = f.add(coeffs.get(k, f.zero()), c)
        k = T.pair_index(i, unit)
        coeffs[k] = f.sub(coeffs.get(k, f.zero()), c)
    return Element(T, coeffs)


@dataclass
class ZeroDivisorBasis:
    """Basic zero-divisors m̄ for every positive-degree basis class m of A."""

    algebra: Algebra
    square: ProductAlgebra
    bars: list[Element]
    sources: list[int]  # basis index of A that each bar came from

    @property
    def labels(self) -> list[str]:
        return [f"bar({self.algebra.labels[i]})" for i in self.sources]


def zero_divisor_generators(
    A: Algebra, capacity: int = DEFAULT_CAPACITY
) -> ZeroDivisorBasis:
    """Construct m̄ = 1⊗m − m⊗1 for each positive-degree basis class m.

    Each element is verified to lie in the kernel of the multiplication map.
    Bars are ordered by (degree, basis index), which is the deterministic
    search order used by :func:`zcl_basic`.
    """
    T = tensor_square(A, capacity=capacity)
    order = sorted(
        (i for i in range(A.dim) if A.degrees[i] > 0),
        key=lambda i: (A.degrees[i], i),
    )
    bars, sources = [], []
    for i in order:
        b = bar(T, A.basis_element(i))
        if diagonal_image(T, b.coeffs):
            raise AssertionError(
                f"internal error: bar({A.labels[i]}) is not a zero-divisor"
            )
        bars.append(b)
        sources.append(i)
    return ZeroDivisorBasis(A, T, bars, sources)


def zcl_basic(
    A: Algebra,
    budget: int = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> CupLengthResult:
    """Longest nonzero product of basic zero-divisors (repetition allowed).

    Depth-first search over multisets of bars in (degree, index)-nondecreasing
    order, pruning zero partial products and products whose degree cannot stay
    within the tensor square's top degree.  If the node budget runs out the
    best length found so far is returned with ``exact=False``.
    """
    zdb = zero_divisor_generators(A, capacity=capacity)
    T = zdb.square
    bars = zdb.bars
    if not bars:
        return _checked(CupLengthResult(0, True, "search"))
    bar_vecs = [b.coeffs for b in bars]
    bar_degs = [T.degrees[next(iter(v))] for v in bar_vecs]
    max_deg = 2 * A.top_degree
    state = {"nodes": 0, "best": 0, "factors": (), "product": None}

    def dfs(start: int, vec: dict, deg: int, factors: tuple):
        for t in range(start, len(bars)):
            if deg + bar_degs[t] > max_deg:
                break  # bars are degree-sorted; later ones are no smaller
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise BudgetExceeded
            prod = T.mul_vec(vec, bar_vecs[t])
            if not prod:
                continue
            new_factors = factors + (t,)
            if len(new_factors) > state["best"]:
                state["best"] = len(new_factors)
                state["factors"] = new_factors
                state["product"] = prod
            dfs(t, prod, deg + bar_degs[t], new_factors)

    exact = True
    try:
        dfs(0, {T.unit_index: T.field.one()}, 0, ())
    except BudgetExceeded:
        exact = False
    value = state["best"]
    if value == 0:
        return _checked(CupLengthResult(0, exact, "search", nodes=state["nodes"]))
    witness = [bars[t] for t in state["factors"]]
    return _checked(
        CupLengthResult(
            value, exact, "search", witness, Element(T, state["product"]), state["nodes"]
        )
    )


# -- full zero-divisor cup length ------------------------------------------------


def zero_divisor_ideal_basis(T: ProductAlgebra) -> tuple[list[dict], list[int]]:
    """Per-degree exact kernel of the multiplication map, as sparse vectors.

    Returns (vectors, degrees), ordered by degree then by kernel extraction
    order.  Degree-0 (the unit line) is excluded: zero-divisors live in the
    reduced part.
    """
    A = T.left
    vectors: list[dict] = []
    degrees: list[int] = []
    by_degree = T.indices_by_degree()
    for d in sorted(by_degree):
        if d == 0:
            continue
        domain = by_degree[d]
        images = []
        for k in domain:
            i, j = T.split_index(k)
            images.append(dict(A.mul_basis(i, j)))
        for combo in kernel_of_map(images, T.field):
            vec = {domain[pos]: c for pos, c in combo.items()}
            vectors.append(vec)
            degrees.append(d)
    return vectors, degrees


def _zcl_full_direct(
    A: Algebra, capacity: int, collect_witness: bool = True
) -> CupLengthResult:
    if A.dim * A.dim > capacity:
        raise CapacityError(
            f"zcl-full needs exact linear algebra on the {A.dim * A.dim}-dimensional "
            f"tensor square, above capacity {capacity}; use zcl-basic for a lower bound"
        )
    T = tensor_square(A, capacity=max(capacity, A.dim * A.dim))
    z_vecs, z_degs = zero_divisor_ideal_basis(T)
    if not z_vecs:
        return _checked(CupLengthResult(0, True, "linear-algebra"))
    max_deg = 2 * A.top_degree
    members = [(vec, (i,), z_degs[i]) for i, vec in enumerate(z_vecs)]
    value = 0
    best = members
    nodes = 0
    while members:
        value += 1
        best = members
        nxt = []
        ech = Echelon(T.field)
        for vec, factors, deg in members:
            for t, zv in enumerate(z_vecs):
                if deg + z_degs[t] > max_deg:
                    break  # z_vecs are degree-sorted
                nodes += 1
                prod = T.mul_vec(vec, zv)
                if prod and ech.insert(dict(prod))[0]:
                    nxt.append((prod, factors + (t,), deg + z_degs[t]))
        members = nxt
    vec, factors, _ = best[0]
    witness = [Element(T, z_vecs[t]) for t in factors]
    return _checked(
        CupLengthResult(
            value, True, "linear-algebra", witness, Element(T, vec), nodes
        )
    )


def _embed_square(
    big: ProductAlgebra, A: MonomialAlgebra, slot: int, small: ProductAlgebra
) -> dict:
    """Index map from (B_g ⊗ B_g) into (A ⊗ A) for generator slot ``slot``.

    B_g is the single-generator algebra of A's generator ``slot``; exponent e
    maps to the exponent vector of A with e in that slot.  The map
    x⊗y ↦ (x·1)⊗(y·1) is a ring embedding (unit factors carry no sign).
    """
    k = len(A.gens)

    def lift(e: int) -> int:
        exp = [0] * k
        exp[slot] = e
        return A.index_of[tuple(exp)]

    out = {}
    for idx in range(small.dim):
        i, j = small.split_index(idx)
        ei = small.left.exponents[i][0]
        ej = small.right.exponents[j][0]
        out[idx] = big.pair_index(lift(ei), lift(ej))
    return out


def _zcl_full_factor(A: MonomialAlgebra, capacity: int) -> CupLengthResult:
    """Sum of per-generator values, witnessed inside the full tensor square.

    Justified by additivity of zcl across tensor factors over a field (see
    module docstring); the witness is assembled by embedding each factor's
    witness and is re-multiplied in the big tensor square, which only needs
    sparse products, so the capacity cap does not apply to it.
    """
    if not A.gens:
        return _checked(CupLengthResult(0, True, "factorization"))
    big = tensor_square(A, capacity=max(capacity, A.dim * A.dim))
    witness: list[Element] = []
    total = 0
    nodes = 0
    for slot, g in enumerate(A.gens):
        Bg = MonomialAlgebra(A.field, [g], capacity=capacity)
        part = _zcl_full_direct(Bg, capacity=capacity)
        total += part.value
        nodes += part.nodes
        emb = _embed_square(big, A, slot, tensor_square(Bg, capacity=capacity))
        for w in part.witness:
            witness.append(Element(big, {emb[i]: c for i, c in w.coeffs.items()}))
    if total == 0:
        return _checked(CupLengthResult(0, True, "factorization", nodes=nodes))
    prod = witness[0]
    for w in witness[1:]:
        prod = prod * w
    return _checked(
        CupLengthResult(total, True, "factorization", witness, prod, nodes)
    )


def zcl_full(
    A: Algebra,
    method: str = "auto",
    capacity: int = DEFAULT_CAPACITY,
) -> CupLengthResult:
    """Cup length of the full zero-divisor ideal Z = ker(A⊗A → A).

    ``method``: "auto" (factorization for monomial encodings, direct linear
    algebra otherwise), "direct", or "factor".  Raises CapacityError when the
    direct route would need dense linear algebra beyond the cap; zcl_basic is
    then the documented lower-bound fallback.
    """
    if method == "auto":
        method = "factor" if isinstance(A, MonomialAlgebra) else "direct"
    if method == "factor":
        if not isinstance(A, MonomialAlgebra):
            raise ValueError("factorization requires the monomial encoding")
        return _zcl_full_factor(A, capacity)
    if method != "direct":
        raise ValueError(f"unknown zcl_full method {method!r}")
    return _zcl_full_direct(A, capacity)
