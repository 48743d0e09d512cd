"""Symmetric group representation theory over the rationals.

Characters are computed by the Murnaghan-Nakayama rule with memoization,
decompositions by exact character inner products, and induced products by
Littlewood-Richardson tableau enumeration.  Everything is exact: values are
Python ints or Fractions, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial

from .partitions import (
    Partition,
    conjugate,
    cycle_types,
    enumerate_partitions,
    double,
    size,
)

Permutation = tuple[int, ...]  # images of 0..n-1


# ---------------------------------------------------------------------------
# characters


def centralizer_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``mu``."""
    out = 1
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    for j, a in counts.items():
        out *= j**a * factorial(a)
    return out


def class_size(mu: Partition) -> int:
    return factorial(size(mu)) // centralizer_order(mu)


def _beta_set(lam: Partition) -> list[int]:
    k = len(lam)
    return [lam[i] + (k - 1 - i) for i in range(k)]


def _beta_to_partition(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(b - (k - 1 - i) for i, b in enumerate(beta) if b - (k - 1 - i) > 0)


def border_strips(lam: Partition, length: int):
    """Yield (partition after removal, strip height) for every removable
    border strip of the given length."""
    beta = _beta_set(lam)
    present = set(beta)
    for b in beta:
        target = b - length
        if target >= 0 and target not in present:
            height = sum(1 for c in beta if target < c < b)
            rest = [c for c in beta if c != b] + [target]
            yield _beta_to_partition(rest), height


@cache
def character_value(lam: Partition, mu: Partition) -> int:
    """chi_lambda evaluated on cycle type mu, via Murnaghan-Nakayama."""
    if size(lam) != size(mu):
        raise ValueError("partition sizes differ")
    if not lam:
        return 1
    head, rest = mu[0], mu[1:]
    total = 0
    for nu, height in border_strips(lam, head):
        total += (-1) ** height * character_value(nu, rest)
    return total


@cache
def irreducible_dimension(lam: Partition) -> int:
    return character_value(lam, (1,) * size(lam)) if lam else 1


@dataclass(frozen=True)
class ClassFunction:
    """A rational class function on S_n, one value per cycle type."""

    n: int
    values: dict[Partition, Fraction] = field(compare=False)

    def __post_init__(self):
        expected = cycle_types(self.n)
        if set(self.values) != set(expected):
            raise ValueError("class function must assign a value to every cycle type")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.n == other.n
            and self.values == other.values
        )

    def __call__(self, mu: Partition) -> Fraction:
        return self.values[mu]

    @property
    def dim(self) -> Fraction:
        return self.values[(1,) * self.n] if self.n else Fraction(1)

    def inner(self, other: "ClassFunction") -> Fraction:
        if self.n != other.n:
            raise ValueError("mismatched symmetric groups")
        total = sum(
            class_size(mu) * self.values[mu] * other.values[mu]
            for mu in cycle_types(self.n)
        )
        return Fraction(total, factorial(self.n)) if self.n else Fraction(total)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("mismatched symmetric groups")
        return ClassFunction(
            self.n, {mu: self.values[mu] + other.values[mu] for mu in self.values}
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError("mismatched symmetric groups")
        return ClassFunction(
            self.n, {mu: self.values[mu] - other.values[mu] for mu in self.values}
        )

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        """Pointwise product, i.e. the character of a tensor product."""
        if self.n != other.n:
            raise ValueError("mismatched symmetric groups")
        return ClassFunction(
            self.n, {mu: self.values[mu] * other.values[mu] for mu in self.values}
        )

    def restrict(self) -> "ClassFunction":
        """Restriction to S_{n-1}: evaluate after re-adding a fixed point."""
        if self.n < 1:
            raise ValueError("cannot restrict below S_0")
        vals = {}
        for mu in cycle_types(self.n - 1):
            padded = tuple(sorted(mu + (1,), reverse=True))
            vals[mu] = self.values[padded]
        return ClassFunction(self.n - 1, vals)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())


def irreducible_character(lam: Partition) -> ClassFunction:
    n = size(lam)
    return ClassFunction(
        n, {mu: Fraction(character_value(lam, mu)) for mu in cycle_types(n)}
    )


@dataclass(frozen=True)
class IrrDecomposition:
    """Multiplicities of irreducibles of S_n; zero entries are omitted."""

    n: int
    mult: dict[Partition, int] = field(compare=False)

    def __post_init__(self):
        clean = {lam: m for lam, m in self.mult.items() if m}
        for lam, m in clean.items():
            if size(lam) != self.n or m < 0:
                raise ValueError(f"bad multiplicity entry {lam}: {m}")
        object.__setattr__(self, "mult", clean)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IrrDecomposition)
            and self.n == other.n
            and self.mult == other.mult
        )

    def __getitem__(self, lam: Partition) -> int:
        return self.mult.get(tuple(lam), 0)

    @property
    def dim(self) -> int:
        return sum(m * irreducible_dimension(lam) for lam, m in self.mult.items())

    def is_zero(self) -> bool:
        return not self.mult

    def items(self):
        """(partition, multiplicity) pairs in canonical partition order."""
        return [(lam, self.mult[lam]) for lam in cycle_types(self.n) if lam in self.mult]

    def character(self) -> ClassFunction:
        vals = {mu: Fraction(0) for mu in cycle_types(self.n)}
        for lam, m in self.mult.items():
            for mu in vals:
                vals[mu] += m * character_value(lam, mu)
        return ClassFunction(self.n, vals)

    def __add__(self, other: "IrrDecomposition") -> "IrrDecomposition":
        if self.n != other.n:
            raise ValueError("mismatched symmetric groups")
        merged = dict(self.mult)
        for lam, m in other.mult.items():
            merged[lam] = merged.get(lam, 0) + m
        return IrrDecomposition(self.n, merged)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "mult": m} for lam, m in self.items()
        ]

    def __str__(self) -> str:
        if not self.mult:
            return "0"
        terms = []
        for lam, m in self.items():
            body = ",".join(str(p) for p in lam)
            terms.append(f"{m}({body})" if m != 1 else f"({body})")
        return " + ".join(terms)


def decompose(chi: ClassFunction) -> IrrDecomposition:
    """Inner-product decomposition; rejects non-characters."""
    mult = {}
    for lam in enumerate_partitions(chi.n):
        coeff = chi.inner(irreducible_character(lam))
        if coeff.denominator != 1 or coeff < 0:
            raise ValueError(f"not a genuine character: <chi, {lam}> = {coeff}")
        if coeff:
            mult[lam] = int(coeff)
    return IrrDecomposition(chi.n, mult)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


@cache
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient N_{lam,mu,nu}: the multiplicity
    of V_lam in the induced product V_mu o V_nu.  Counts LR skew tableaux of
    shape lam/mu with content nu."""
    if size(lam) != size(mu) + size(nu):
        return 0
    rows = len(lam)
    if len(mu) > rows or len(nu) > rows:
        return 0
    mu_padded = tuple(mu) + (0,) * (rows - len(mu))
    if any(mu_padded[i] > lam[i] for i in range(rows)):
        return 0
    if not nu:
        return 1 if lam == mu else 0

    # cells of lam/mu in reverse reading order: top row first, right to left
    cells = []
    for r in range(rows):
        for c in range(lam[r] - 1, mu_padded[r] - 1, -1):
            cells.append((r, c))

    nparts = len(nu)
    grid = [[0] * lam[r] for r in range(rows)]  # mu boxes stay 0
    counts = [0] * (nparts + 1)

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = grid[r - 1][c] + 1 if r > 0 else 1  # strict down columns
        hi = grid[r][c + 1] if c + 1 < lam[r] else nparts  # weak along rows
        total = 0
        for t in range(lo, hi + 1):
            if counts[t] >= nu[t - 1]:
                continue
            if t > 1 and counts[t] >= counts[t - 1]:
                continue  # lattice condition on the reverse reading word
            grid[r][c] = t
            counts[t] += 1
            total += fill(idx + 1)
            counts[t] -= 1
            grid[r][c] = 0
        return total

    return fill(0)


def induce_product(a: IrrDecomposition, b: IrrDecomposition) -> IrrDecomposition:
    """Bilinear extension of the induced product V_mu o V_nu to decompositions."""
    n = a.n + b.n
    mult: dict[Partition, int] = {}
    for lam in enumerate_partitions(n):
        total = 0
        for mu, am in a.mult.items():
            for nu, bm in b.mult.items():
                total += am * bm * lr_coefficient(lam, mu, nu)
        if total:
            mult[lam] = total
    return IrrDecomposition(n, mult)


def trivial_decomposition(n: int) -> IrrDecomposition:
    return IrrDecomposition(n, {(n,) if n else (): 1} if n else {(): 1})


def sign_decomposition(n: int) -> IrrDecomposition:
    lam = (1,) * n if n else ()
    return IrrDecomposition(n, {lam: 1})


def restrict(a: IrrDecomposition) -> IrrDecomposition:
    """Branching rule: remove one corner box in all possible ways."""
    if a.n < 1:
        raise ValueError("cannot restrict below S_0")
    mult: dict[Partition, int] = {}
    for lam, m in a.mult.items():
        for i in range(len(lam)):
            if i + 1 < len(lam) and lam[i] == lam[i + 1]:
                continue  # not a removable corner
            below = tuple(p - 1 if j == i else p for j, p in enumerate(lam))
            below = tuple(p for p in below if p)
            mult[below] = mult.get(below, 0) + m
    return IrrDecomposition(a.n - 1, mult)


def tensor_sign(a: IrrDecomposition) -> IrrDecomposition:
    """Tensor with the alternating representation: conjugate every partition."""
    return IrrDecomposition(a.n, {conjugate(lam): m for lam, m in a.mult.items()})


def hyperoctahedral_doubles(y: int) -> IrrDecomposition:
    """Decomposition of Ind from the hyperoctahedral subgroup S_2 wr S_y of
    S_{2y} of the trivial representation: each double 2*tau once."""
    if y < 0:
        raise ValueError("y must be non-negative")
    if y == 0:
        return IrrDecomposition(0, {(): 1})
    return IrrDecomposition(2 * y, {double(tau): 1 for tau in enumerate_partitions(y)})


def decomposition_width(a: IrrDecomposition) -> int:
    """Largest part over partitions appearing with positive multiplicity."""
    if a.is_zero():
        raise ValueError("width of the zero decomposition is undefined")
    return max((lam[0] if lam else 0) for lam in a.mult)


def decomposition_rows(a: IrrDecomposition) -> int:
    """Largest number of rows over partitions with positive multiplicity."""
    if a.is_zero():
        raise ValueError("rows of the zero decomposition is undefined")
    return max(len(lam) for lam in a.mult)


# ---------------------------------------------------------------------------
# permutations and induction from explicit subgroups


def compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, img in enumerate(p):
        out[img] = i
    return tuple(out)


def identity(n: int) -> Permutation:
    return tuple(range(n))


def perm_cycle_type(p: Permutation) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cur, cyc = start, 0
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            cyc += 1
        lengths.append(cyc)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(p: Permutation) -> int:
    return -1 if (len(p) - len(perm_cycle_type(p))) % 2 else 1


def cycle_type_representative(mu: Partition) -> Permutation:
    """A fixed permutation of cycle type ``mu`` (consecutive cycles)."""
    out = []
    start = 0
    for part in mu:
        out.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(out)


def is_subgroup(n: int, elements: frozenset[Permutation]) -> bool:
    if identity(n) not in elements:
        return False
    return all(compose(a, b) in elements for a in elements for b in elements)


def generated_subgroup(n: int, generators) -> frozenset[Permutation]:
    elems = {identity(n)}
    frontier = [identity(n)]
    gens = [tuple(g) for g in generators]
    while frontier:
        cur = frontier.pop()
        for g in gens:
            nxt = compose(g, cur)
            if nxt not in elems:
                elems.add(nxt)
                frontier.append(nxt)
    return frozenset(elems)


def induce_from_subgroup(
    n: int, subgroup, chi_h
) -> ClassFunction:
    """Character of Ind_H^{S_n} of a one-dimensional character of H.

    ``subgroup`` is an iterable of permutations (images of 0..n-1) forming a
    subgroup H of S_n; ``chi_h`` maps each element of H to a rational.  Uses
    the standard conjugation-sum induction formula, evaluated on one
    representative per cycle type.
    """
    elements = frozenset(tuple(h) for h in subgroup)
    if not is_subgroup(n, elements):
        raise ValueError("not a subgroup of S_n")
    chi = {h: Fraction(chi_h[h] if isinstance(chi_h, dict) else chi_h(h)) for h in elements}
    for a in elements:
        for b in elements:
            if chi[compose(a, b)] != chi[a] * chi[b]:
                raise ValueError("character of H is not multiplicative")

    order = len(elements)
    values = {}
    for mu in cycle_types(n):
        rep = cycle_type_representative(mu)
        total = Fraction(0)
        for x in permutations(range(n)):
            xinv = inverse(x)
            conj = compose(compose(x, rep), xinv)
            if conj in elements:
                total += chi[conj]
        values[mu] = total / order
    return ClassFunction(n, values)
