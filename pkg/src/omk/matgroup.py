"""Finite matrix groups over a single cyclotomic field.

:func:`close_group` builds the group by breadth-first search over right
multiplication by the generators.  Besides the element list it records, for
every generator, the permutations of the element indices induced by left and
right multiplication.  Conjugacy classes, centralizers and powers are then
computed with integer permutation arithmetic, without further matrix
products.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import CapExceeded, InputError, NotAMember, OrderOverflow, SingularGenerator
from .exactnum import Cyclotomic, parse_cyclotomic

DEFAULT_CAP = 100_000
DEFAULT_ORDER_BOUND = 10**6


class CycMatrix:
    """Square matrix with entries in Q(zeta_order)."""

    __slots__ = ("degree", "order", "rows", "_key", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise InputError("matrix must be square and nonempty")
        orders = {e.order for r in rows for e in r}
        if len(orders) != 1:
            raise InputError(f"entries have mixed cyclotomic orders {sorted(orders)}")
        self.degree = len(rows)
        self.order = orders.pop()
        self.rows = rows
        self._key = None
        self._hash = None

    @classmethod
    def identity(cls, degree, order):
        one, zero = Cyclotomic.one(order), Cyclotomic.zero(order)
        return cls([[one if i == j else zero for j in range(degree)] for i in range(degree)])

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        zero = Cyclotomic.zero(entries[0].order)
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def from_strings(cls, grid, order):
        return cls([[parse_cyclotomic(s, order) for s in row] for row in grid])

    def key(self):
        """Canonical serialization: row-major coefficient vectors."""
        if self._key is None:
            self._key = tuple(e.coeffs for r in self.rows for e in r)
        return self._key

    sort_key = key

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.order == other.order and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __mul__(self, other):
        if self.degree != other.degree:
            raise InputError("degree mismatch in matrix product")
        n = self.degree
        cols = list(zip(*other.rows))
        zero = Cyclotomic.zero(self.order)
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        assert len(out) == n
        return CycMatrix(out)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        acc = CycMatrix.identity(self.degree, self.order)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def trace(self):
        acc = Cyclotomic.zero(self.order)
        for i in range(self.degree):
            acc = acc + self.rows[i][i]
        return acc

    def is_identity(self):
        return self == CycMatrix.identity(self.degree, self.order)

    def inverse(self):
        n = self.degree
        one, zero = Cyclotomic.one(self.order), Cyclotomic.zero(self.order)
        aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
            if piv is None:
                raise SingularGenerator("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = aug[col][col].inverse()
            aug[col] = [e * inv for e in aug[col]]
            for i in range(n):
                if i != col and not aug[i][col].is_zero():
                    f = aug[i][col]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
        return CycMatrix([r[n:] for r in aug])

    def to_strings(self):
        return [[str(e) for e in r] for r in self.rows]

    def to_complex(self):
        return [[e.to_complex() for e in r] for r in self.rows]

    def __repr__(self):
        return f"CycMatrix(order={self.order}, {self.to_strings()})"


def determinant(g):
    """Exact determinant by Gaussian elimination over Q(zeta_n)."""
    n = g.degree
    m = [list(r) for r in g.rows]
    det = Cyclotomic.one(g.order)
    for col in range(n):
        piv = next((i for i in range(col, n) if not m[i][col].is_zero()), None)
        if piv is None:
            return Cyclotomic.zero(g.order)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = p.inverse()
        for i in range(col + 1, n):
            if not m[i][col].is_zero():
                f = m[i][col] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return det


def element_order(g, bound=DEFAULT_ORDER_BOUND):
    ident = CycMatrix.identity(g.degree, g.order)
    power = g
    for k in range(1, bound + 1):
        if power == ident:
            return k
        power = power * g
    raise OrderOverflow(f"no finite order up to {bound}", bound=bound)


def _perm_inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv


@dataclass(frozen=True, eq=False)
class FiniteMatrixGroup:
    degree: int
    order: int
    elements: tuple
    generators: tuple
    identity_index: int
    # right[s][i] = index(elements[i] * gen_s), left[s][i] = index(gen_s * elements[i])
    right: tuple = field(repr=False)
    left: tuple = field(repr=False)
    # words[i]: generator indices w with elements[i] = gen_w0 * gen_w1 * ...
    words: tuple = field(repr=False)
    class_of: tuple = ()
    class_reps: tuple = ()
    class_sizes: tuple = ()
    index: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.index

    def index_of(self, g):
        try:
            return self.index[g]
        except KeyError:
            raise NotAMember("matrix is not an element of the group") from None

    @property
    def num_classes(self):
        return len(self.class_reps)

    def right_perm(self, i):
        """Permutation h -> h * elements[i] of the element indices."""
        perm = list(range(len(self.elements)))
        for s in self.words[i]:
            r = self.right[s]
            perm = [r[j] for j in perm]
        return perm

    def left_perm(self, i):
        """Permutation h -> elements[i] * h of the element indices."""
        perm = list(range(len(self.elements)))
        for s in reversed(self.words[i]):
            lft = self.left[s]
            perm = [lft[j] for j in perm]
        return perm

    def power_indices(self, i):
        """Indices of e, g, g^2, ..., g^(l-1) for g = elements[i]."""
        r = self.right_perm(i)
        out = [self.identity_index]
        j = r[self.identity_index]
        while j != self.identity_index:
            out.append(j)
            j = r[j]
        return out

    def element_order_of(self, i):
        return len(self.power_indices(i))

    def inverse_index(self, i):
        return self.right_perm(i).index(self.identity_index)

    def class_members(self, c):
        return [i for i, k in enumerate(self.class_of) if k == c]


def close_group(generators, cap=DEFAULT_CAP):
    generators = list(generators)
    if not generators:
        raise InputError("at least one generator is required")
    degree, order = generators[0].degree, generators[0].order
    for g in generators:
        if g.degree != degree:
            raise InputError("generators have different degrees")
        if g.order != order:
            raise InputError("generators have different cyclotomic orders")
        if determinant(g).is_zero():
            raise SingularGenerator("generator has determinant 0", generator=g.to_strings())
    gens = sorted(set(generators), key=CycMatrix.sort_key)

    ident = CycMatrix.identity(degree, order)
    elements = [ident]
    index = {ident: 0}
    words = [()]
    right = [[] for _ in gens]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        x = elements[i]
        for s, gen in enumerate(gens):
            y = x * gen
            j = index.get(y)
            if j is None:
                if len(elements) >= cap:
                    raise CapExceeded(f"group closure exceeded cap {cap}", cap=cap)
                j = len(elements)
                elements.append(y)
                index[y] = j
                words.append(words[i] + (s,))
                queue.append(j)
            right[s].append(j)
    left = [[index[gen * x] for x in elements] for gen in gens]

    group = FiniteMatrixGroup(
        degree=degree,
        order=order,
        elements=tuple(elements),
        generators=tuple(gens),
        identity_index=0,
        right=tuple(tuple(r) for r in right),
        left=tuple(tuple(lf) for lf in left),
        words=tuple(words),
        index=index,
    )
    class_of, reps, sizes = conjugacy_classes(group)
    object.__setattr__(group, "class_of", class_of)
    object.__setattr__(group, "class_reps", reps)
    object.__setattr__(group, "class_sizes", sizes)
    return group


def conjugacy_classes(G):
    """Orbits of conjugation by the generators.

    Classes are ordered by (element order, canonical key of the
    representative); the representative is the member with the smallest
    canonical key.  Returns ``(class_of, class_reps, class_sizes)``.
    """
    n = len(G.elements)
    # conjugation by gen_s: h -> s h s^-1 = left_s(right_s^-1(h))
    conj = []
    for s in range(len(G.generators)):
        rinv = _perm_inverse(G.right[s])
        lft = G.left[s]
        conj.append([lft[rinv[h]] for h in range(n)])
    orbit_of = [-1] * n
    orbits = []
    for start in range(n):
        if orbit_of[start] >= 0:
            continue
        k = len(orbits)
        orbit_of[start] = k
        members = [start]
        stack = [start]
        while stack:
            h = stack.pop()
            for c in conj:
                j = c[h]
                if orbit_of[j] < 0:
                    orbit_of[j] = k
                    members.append(j)
                    stack.append(j)
        orbits.append(members)
    keyed = []
    for members in orbits:
        rep = min(members, key=lambda i: G.elements[i].key())
        keyed.append(((G.element_order_of(rep), G.elements[rep].key()), rep, members))
    keyed.sort(key=lambda t: t[0])
    class_of = [0] * n
    for c, (_, _, members) in enumerate(keyed):
        for i in members:
            class_of[i] = c
    return tuple(class_of), tuple(t[1] for t in keyed), tuple(len(t[2]) for t in keyed)


def centralizer_order(G, g):
    """Number of h in G with hg = gh."""
    i = G.index_of(g) if isinstance(g, CycMatrix) else g
    r, lft = G.right_perm(i), G.left_perm(i)
    return sum(1 for h in range(len(G.elements)) if r[h] == lft[h])


def is_subgroup_of_SL(G):
    return all(determinant(g) == 1 for g in G.elements)


def find_reflections(G):
    from .sectors import group_exponent_multiplicities

    return [
        i for i in range(len(G.elements))
        if i != G.identity_index and group_exponent_multiplicities(G, i)[-1] == G.degree - 1
    ]
