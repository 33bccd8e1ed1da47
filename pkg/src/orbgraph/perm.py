"""Permutations of {1..n}, permutation groups backed by stabilizer chains,
and ordered partitions of the point domain.

Points are 1-based throughout and every value is treated as immutable once
constructed. Composition follows the right-action convention: the image of
x under p * q is q(p(x)), so p acts first.
"""

from __future__ import annotations

import re
import threading
from collections import deque


class Permutation:
    """A bijection of {1..degree} stored as an image table."""

    __slots__ = ("degree", "images")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"images {images!r} are not a bijection of 1..{n}")
        self.degree = n
        self.images = images

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        # products and inverses of valid permutations need no re-validation
        p = object.__new__(cls)
        p.degree = len(images)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise ValueError("degree must be at least 1")
        return cls._unchecked(tuple(range(1, degree + 1)))

    def apply(self, point: int) -> int:
        """Image of a point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition with self acting first: (p * q)(x) = q(p(x))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot compose permutations of different degree")
        oi = other.images
        return Permutation._unchecked(tuple(oi[i - 1] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for pre, post in enumerate(self.images, start=1):
            inv[post - 1] = pre
        return Permutation._unchecked(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == p for i, p in enumerate(self.images, start=1))

    def min_moved(self) -> int | None:
        """Smallest moved point, or None for the identity."""
        for i, p in enumerate(self.images, start=1):
            if i != p:
                return i
        return None

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, ordered by start."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1] or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen[start - 1] = True
            nxt = self.images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen[nxt - 1] = True
                nxt = self.images[nxt - 1]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation[{self.degree}] {self.cycle_string()}"


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as "(1,2)(3,4)" or "()".

    Comma-separated points are always accepted. A run of digits with no
    commas, like "(132)", is read one digit per point, so domains with
    points above 9 must write commas. Whitespace is ignored and points
    absent from the text are fixed.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty permutation text")
    images = list(range(1, degree + 1))
    used: set[int] = set()
    pos = 0
    while pos < len(compact):
        if compact[pos] != "(":
            raise ValueError(f"malformed cycle notation {text!r}")
        end = compact.find(")", pos + 1)
        if end < 0:
            raise ValueError(f"unbalanced parenthesis in {text!r}")
        body = compact[pos + 1 : end]
        pos = end + 1
        if not body:
            continue
        if "," in body:
            try:
                points = [int(tok) for tok in body.split(",")]
            except ValueError:
                raise ValueError(f"malformed cycle notation {text!r}") from None
        elif body.isdigit():
            points = [int(ch) for ch in body]
        else:
            raise ValueError(f"malformed cycle notation {text!r}")
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in used:
                raise ValueError(f"point {p} repeated in {text!r}")
            used.add(p)
        for a, b in zip(points, points[1:]):
            images[a - 1] = b
        images[points[-1] - 1] = points[0]
    return Permutation(images)


class OrderedPartition:
    """An ordered sequence of disjoint, sorted cells covering {1..degree}.

    Cell order is preserved as given; each cell is sorted ascending.
    """

    __slots__ = ("degree", "cells")

    def __init__(self, degree: int, cells):
        norm = tuple(tuple(sorted(c)) for c in cells)
        seen: set[int] = set()
        for cell in norm:
            if not cell:
                raise ValueError("empty cell")
            for p in cell:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} out of range 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} appears in more than one cell")
                seen.add(p)
        if len(seen) != degree:
            raise ValueError("cells do not cover the domain")
        self.degree = degree
        self.cells = norm

    @classmethod
    def unit(cls, degree: int) -> "OrderedPartition":
        return cls(degree, [range(1, degree + 1)])

    @classmethod
    def discrete(cls, degree: int) -> "OrderedPartition":
        return cls(degree, [[p] for p in range(1, degree + 1)])

    def cell_index(self) -> dict[int, int]:
        """Map each point to the position of its cell."""
        idx: dict[int, int] = {}
        for k, cell in enumerate(self.cells):
            for p in cell:
                idx[p] = k
        return idx

    def is_refinement_of(self, other: "OrderedPartition") -> bool:
        """True when every cell here lies inside a single cell of other."""
        if self.degree != other.degree:
            return False
        coarse = other.cell_index()
        return all(len({coarse[p] for p in cell}) == 1 for cell in self.cells)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrderedPartition)
            and self.degree == other.degree
            and self.cells == other.cells
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.cells))

    def __str__(self) -> str:
        return "[" + "|".join(",".join(map(str, c)) for c in self.cells) + "]"

    def __repr__(self) -> str:
        return f"OrderedPartition({self.degree}, {self})"


def partition_stabilizer_generators(partition: OrderedPartition) -> list[Permutation]:
    """Adjacent transpositions within each cell.

    Together they generate the direct product of the full symmetric groups
    on the cells, which is the stabilizer of the ordered partition inside
    the symmetric group on the whole domain.
    """
    gens = []
    n = partition.degree
    for cell in partition.cells:
        for a, b in zip(cell, cell[1:]):
            images = list(range(1, n + 1))
            images[a - 1], images[b - 1] = b, a
            gens.append(Permutation._unchecked(tuple(images)))
    return gens


class _ChainLevel:
    """One level of a stabilizer chain: a base point, the strong generators
    attached at this level, and a transversal u[x] with point^u = x."""

    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, gens=None, transversal=None):
        self.point = point
        self.gens: list[Permutation] = list(gens or [])
        self.transversal: dict[int, Permutation] = dict(transversal or {})


def _build_chain(degree, generators, forced_first=None):
    """Deterministic Schreier-Sims.

    Base points are the minimal point moved by the residue that created each
    level, so the first base point is the first moved point overall. When
    forced_first is given, level 0 uses that point even if nothing moves it,
    which makes the generators attached below level 0 generate its
    stabilizer.
    """
    ident = Permutation.identity(degree)
    levels: list[_ChainLevel] = []
    if forced_first is not None:
        levels.append(_ChainLevel(forced_first, [], {forced_first: ident}))

    def level_gens(i):
        return [g for lvl in levels[i:] for g in lvl.gens]

    def rebuild(i):
        lvl = levels[i]
        gens = level_gens(i)
        trans = {lvl.point: ident}
        queue = deque([lvl.point])
        while queue:
            x = queue.popleft()
            ux = trans[x]
            for s in gens:
                y = s.images[x - 1]
                if y not in trans:
                    trans[y] = ux * s
                    queue.append(y)
        lvl.transversal = trans

    def strip(h, start):
        # divide off transversal representatives until h escapes or dies
        i = start
        while i < len(levels):
            lvl = levels[i]
            u = lvl.transversal.get(h.images[lvl.point - 1])
            if u is None:
                return h, i
            h = h * u.inverse()
            i += 1
        return h, i

    def attach(h, m):
        # h moves levels[m].point outside its current transversal, so each
        # attach strictly grows an orbit; total growth is bounded by degree
        # squared, which bounds the whole construction
        if m == len(levels):
            levels.append(_ChainLevel(h.min_moved()))
        levels[m].gens.append(h)
        for j in range(m + 1):
            rebuild(j)

    for g in generators:
        if g.is_identity():
            continue
        h, m = strip(g, 0)
        if not h.is_identity():
            attach(h, m)

    # Work upward, re-checking a level whenever anything below it changed.
    # A level is done when all of its Schreier generators sift to identity.
    i = len(levels) - 1
    while i >= 0:
        lvl = levels[i]
        gens_i = level_gens(i)
        attached_at = None
        for beta in sorted(lvl.transversal):
            u = lvl.transversal[beta]
            for s in gens_i:
                gamma = s.images[beta - 1]
                schreier = (u * s) * lvl.transversal[gamma].inverse()
                h, m = strip(schreier, i + 1)
                if not h.is_identity():
                    attach(h, m)
                    attached_at = m
                    break
            if attached_at is not None:
                break
        i = i - 1 if attached_at is None else attached_at
    return levels


class PermGroup:
    """Group generated by permutations of {1..degree}.

    The stabilizer chain is built lazily on first use and then reused; the
    build is lock-guarded so a first use from several threads constructs it
    exactly once. Everything else is immutable.
    """

    def __init__(self, degree: int, generators=()):
        if degree < 1:
            raise ValueError("degree must be at least 1")
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                raise ValueError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
        if not gens:
            gens = (Permutation.identity(degree),)
        self.degree = degree
        self.generators = gens
        self._lock = threading.Lock()
        self._chain: list[_ChainLevel] | None = None
        self._stabilizers: dict[int, "PermGroup"] = {}
        self._orbit_partition: OrderedPartition | None = None

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree)

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        """Natural symmetric group on {1..degree}."""
        if degree == 1:
            return cls(degree)
        swap = parse_cycles("(1,2)", degree)
        cycle = Permutation._unchecked(tuple(list(range(2, degree + 1)) + [1]))
        return cls(degree, [swap, cycle])

    @property
    def chain(self) -> list[_ChainLevel]:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _build_chain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        n = 1
        for lvl in self.chain:
            n *= len(lvl.transversal)
        return n

    def __contains__(self, perm: Permutation) -> bool:
        if not isinstance(perm, Permutation) or perm.degree != self.degree:
            return False
        h = perm
        for lvl in self.chain:
            u = lvl.transversal.get(h.images[lvl.point - 1])
            if u is None:
                return False
            h = h * u.inverse()
        return h.is_identity()

    def orbit(self, point: int) -> tuple[int, ...]:
        """Sorted orbit of a point, by breadth-first closure under the
        generators. Forward images suffice: a generator maps the finite
        closure into itself injectively, hence onto itself."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        seen = {point}
        queue = deque([point])
        images = [g.images for g in self.generators]
        while queue:
            x = queue.popleft()
            for im in images:
                y = im[x - 1]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def orbit_partition(self) -> OrderedPartition:
        """Orbits as an ordered partition, cells ascending by minimal point."""
        if self._orbit_partition is None:
            visited = [False] * self.degree
            cells = []
            for p in range(1, self.degree + 1):
                if visited[p - 1]:
                    continue
                cell = self.orbit(p)
                for q in cell:
                    visited[q - 1] = True
                cells.append(cell)
            self._orbit_partition = OrderedPartition(self.degree, cells)
        return self._orbit_partition

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def point_stabilizer(self, point: int) -> "PermGroup":
        """Subgroup fixing a point, from a chain based at that point."""
        if not 1 <= point <= self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        cached = self._stabilizers.get(point)
        if cached is not None:
            return cached
        levels = _build_chain(self.degree, self.generators, forced_first=point)
        gens = [g for lvl in levels[1:] for g in lvl.gens]
        stab = PermGroup(self.degree, gens)
        self._stabilizers.setdefault(point, stab)
        return self._stabilizers[point]

    def transitivity_degree(self) -> int:
        """Largest k with the group k-transitive on its domain, 0 when it is
        not even transitive. Computed by repeatedly descending to a point
        stabilizer acting on the remaining points."""
        k = 0
        current: PermGroup = self
        remaining = tuple(range(1, self.degree + 1))
        while remaining:
            alpha = remaining[0]
            if current.orbit(alpha) != remaining:
                break
            k += 1
            current = current.point_stabilizer(alpha)
            remaining = remaining[1:]
        return k

    def __repr__(self) -> str:
        gens = " ".join(g.cycle_string() for g in self.generators)
        return f"PermGroup[{self.degree}] <{gens}>"


_DEGREE_RE = re.compile(r"degree:\s*(\d+)")


def parse_group_text(text: str) -> PermGroup:
    """Parse the shared group description format.

    The first significant line is `degree: n`; every following non-empty
    line not starting with `#` is one permutation in cycle notation.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = _DEGREE_RE.fullmatch(line)
            if not m:
                raise ValueError(
                    f"line {lineno}: expected 'degree: n' header, got {line!r}"
                )
            degree = int(m.group(1))
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be at least 1")
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise ValueError("missing 'degree: n' header")
    return PermGroup(degree, gens)


def load_group(path) -> PermGroup:
    """Read a group description file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_group_text(fh.read())
