"""Exhaustive Folkman searches over colorings of [1, N] and a FAL partition probe."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List

import numpy as np

from .config import DEFAULT_NODE_BUDGET, DEFAULT_SEED, get_logger
from .errors import BudgetExceededError, InputFormatError, MathPreconditionError, PreconditionNotEstablishedError
from .windows import FSWitness, WindowSet, fal_level

logger = get_logger("ramsey")

BOUND_HOLDS = "BoundHolds"
COUNTER_COLORING = "CounterColoring"


@dataclass(frozen=True)
class Coloring:
    """colors[i] is the color of i + 1."""

    n: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.colors) != self.n:
            raise InputFormatError(f"a coloring of [1, {self.n}] needs {self.n} colors, got {len(self.colors)}")
        if any(c < 0 for c in self.colors):
            raise InputFormatError(f"colors must be >= 0: {list(self.colors)}")

    @classmethod
    def of(cls, colors: Iterable[int]) -> "Coloring":
        values = tuple(int(c) for c in colors)
        return cls(len(values), values)

    def color_of(self, x: int) -> int:
        return self.colors[x - 1]

    def palette(self) -> list[int]:
        return sorted(set(self.colors))

    def color_class(self, color: int) -> WindowSet:
        return WindowSet(self.n, frozenset(x for x in range(1, self.n + 1) if self.colors[x - 1] == color))

    def to_dict(self) -> dict:
        return {"n": self.n, "colors": list(self.colors)}


def mono_fs_witness(c: Coloring, n: int) -> tuple[int, FSWitness] | None:
    """Least color with n distinct elements whose finite sums all share it."""
    if n < 1:
        raise InputFormatError(f"n must be >= 1, got {n}")
    for color in c.palette():
        witness = fal_level(c.color_class(color), n)
        if witness is not None:
            return color, witness
    return None


@dataclass(frozen=True)
class Leaf:
    prefix: tuple[int, ...]
    color: int
    elements: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"prefix": list(self.prefix), "color": self.color, "elements": list(self.elements)}


@dataclass
class FolkmanCertificate:
    kind: str
    N: int
    n: int
    r: int
    nodes: int = 0
    leaves: List[Leaf] = field(default_factory=list)
    coloring: Coloring | None = None

    @property
    def holds(self) -> bool:
        return self.kind == BOUND_HOLDS

    def to_dict(self) -> dict:
        data: dict = {"kind": self.kind, "N": self.N, "n": self.n, "r": self.r, "nodes": self.nodes}
        if self.kind == BOUND_HOLDS:
            data["leaves"] = [leaf.to_dict() for leaf in self.leaves]
        else:
            data["coloring"] = self.coloring.to_dict() if self.coloring else None
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "FolkmanCertificate":
        try:
            kind = data["kind"]
            if kind == BOUND_HOLDS:
                leaves = [Leaf(tuple(x["prefix"]), int(x["color"]), tuple(x["elements"])) for x in data["leaves"]]
                return cls(kind, int(data["N"]), int(data["n"]), int(data["r"]), int(data.get("nodes", 0)), leaves)
            if kind == COUNTER_COLORING:
                coloring = Coloring.of(data["coloring"]["colors"])
                return cls(kind, int(data["N"]), int(data["n"]), int(data["r"]), int(data.get("nodes", 0)), coloring=coloring)
        except (KeyError, TypeError, ValueError) as e:
            raise InputFormatError(f"malformed certificate: {e}") from e
        raise InputFormatError(f"unknown certificate kind {kind!r}")


@dataclass
class _Branch:
    nodes: int = 0
    leaves: List[Leaf] = field(default_factory=list)
    counter: tuple[int, ...] | None = None
    exceeded: bool = False


def _leaf_witness(prefix: tuple[int, ...], n: int) -> FSWitness | None:
    """A monochromatic witness through the last element, within the prefix's own class."""
    x, color = len(prefix), prefix[-1]
    members = frozenset(i + 1 for i, c in enumerate(prefix) if c == color)
    return fal_level(WindowSet(x, members), n)


def _search(prefix: tuple[int, ...], N: int, n: int, r: int, budget: int) -> _Branch:
    out = _Branch()

    def visit(p: tuple[int, ...]) -> bool:
        out.nodes += 1
        if out.nodes > budget:
            out.exceeded = True
            return True
        witness = _leaf_witness(p, n)
        if witness is not None:
            out.leaves.append(Leaf(p, p[-1], witness.elements))
            return False
        if len(p) == N:
            out.counter = p
            return True
        for color in range(min(max(p) + 2, r)):
            if visit(p + (color,)):
                return True
        return False

    visit(prefix)
    return out


def _search_task(args: tuple[tuple[int, ...], int, int, int, int]) -> _Branch:
    return _search(*args)


def _root_branches(N: int, r: int) -> list[tuple[int, ...]]:
    if N == 1 or r == 1:
        return [(0,)]
    return [(0, 0), (0, 1)]


def folkman_check(
    N: int,
    n: int,
    r: int,
    budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> FolkmanCertificate:
    """Decide whether every r-coloring of [1, N] has a monochromatic FS(S), |S| = n.

    Colorings are enumerated canonically (1 gets color 0, each element opens at
    most one new color); a prefix that already holds a monochromatic witness is a
    satisfied leaf and is not extended.
    """
    for name, value in (("N", N), ("n", n), ("r", r)):
        if value < 1:
            raise InputFormatError(f"{name} must be >= 1, got {value}")
    roots = _root_branches(N, r)
    # the shared root (element 1) is counted once when it is split into two branches
    nodes = 1 if len(roots) > 1 else 0
    if len(roots) > 1 and _leaf_witness((0,), n) is not None:
        roots = [(0,)]
        nodes = 0
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            branches = list(pool.map(_search_task, [(p, N, n, r, budget) for p in roots]))
    else:
        branches = []
        for p in roots:
            branch = _search(p, N, n, r, max(budget - nodes - sum(b.nodes for b in branches), 0))
            branches.append(branch)
            if branch.counter is not None or branch.exceeded:
                break
    leaves: list[Leaf] = []
    for branch in branches:
        nodes += branch.nodes
        if branch.exceeded or nodes > budget:
            raise BudgetExceededError(nodes, budget)
        leaves.extend(branch.leaves)
        if branch.counter is not None:
            logger.info(f"[folkman] N={N} n={n} r={r} counter-coloring after {nodes} nodes")
            return FolkmanCertificate(COUNTER_COLORING, N, n, r, nodes, coloring=Coloring.of(branch.counter))
    logger.info(f"[folkman] N={N} n={n} r={r} bound holds, {len(leaves)} leaves, {nodes} nodes")
    return FolkmanCertificate(BOUND_HOLDS, N, n, r, nodes, leaves=leaves)


def _leaf_is_valid(leaf: Leaf, n: int) -> bool:
    if len(leaf.elements) != n or not leaf.prefix or leaf.prefix[-1] != leaf.color:
        return False
    members = frozenset(i + 1 for i, c in enumerate(leaf.prefix) if c == leaf.color)
    try:
        FSWitness(leaf.elements, WindowSet(len(leaf.prefix), members))
    except MathPreconditionError:
        return False
    return True


def verify_certificate(cert: FolkmanCertificate) -> bool:
    """Re-check a certificate without trusting how it was produced."""
    if cert.kind == COUNTER_COLORING:
        c = cert.coloring
        if c is None or c.n != cert.N or any(color >= cert.r for color in c.colors):
            return False
        return mono_fs_witness(c, cert.n) is None
    if cert.kind != BOUND_HOLDS:
        return False
    leaves = {leaf.prefix: leaf for leaf in cert.leaves}
    if not all(_leaf_is_valid(leaf, cert.n) for leaf in cert.leaves):
        return False

    def covered(p: tuple[int, ...]) -> bool:
        if p in leaves:
            return True
        if len(p) == cert.N:
            return False
        return all(covered(p + (color,)) for color in range(min(max(p) + 2, cert.r)))

    return covered((0,))


@dataclass
class FolkmanResult:
    n: int
    r: int
    N: int | None
    bound: FolkmanCertificate | None = None
    counter: FolkmanCertificate | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "N": self.N,
            "bound": self.bound.to_dict() if self.bound else None,
            "counter": self.counter.to_dict() if self.counter else None,
        }


def folkman_number(
    n: int,
    r: int,
    N_max: int,
    budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> FolkmanResult:
    """Least N <= N_max where the bound holds, with the counter-coloring at N - 1 when N > 1."""
    counter: FolkmanCertificate | None = None
    for N in range(1, N_max + 1):
        cert = folkman_check(N, n, r, budget=budget, workers=workers)
        if cert.holds:
            return FolkmanResult(n, r, N, bound=cert, counter=counter)
        counter = cert
    return FolkmanResult(n, r, None, counter=counter)


@dataclass
class ProbeReport:
    r: int
    k: int
    trials: int
    seed: int
    folkman_bound: int
    dilation: int
    successes: int = 0
    violations: List[list[int]] = field(default_factory=list)
    witnesses: List[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "trials": self.trials,
            "seed": self.seed,
            "folkman_bound": self.folkman_bound,
            "dilation": self.dilation,
            "successes": self.successes,
            "violations": self.violations,
            "witnesses": self.witnesses,
        }


def _dilation(A: WindowSet, N: int) -> int | None:
    for d in range(1, A.horizon // N + 1):
        if all(h * d in A.members for h in range(1, N + 1)):
            return d
    return None


def fal_partition_regularity_probe(
    A: WindowSet,
    r: int,
    k: int,
    trials: int,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_NODE_BUDGET,
) -> ProbeReport:
    """Sample r-partitions of A and confirm some piece still holds a k-witness.

    The precondition is a dilated copy {d, 2d, ..., N d} of [1, N] inside A,
    with N the Folkman number for (k, r).
    """
    if r < 1 or k < 1 or trials < 0:
        raise InputFormatError(f"need r >= 1, k >= 1, trials >= 0; got r={r}, k={k}, trials={trials}")
    result = folkman_number(k, r, A.horizon, budget=budget)
    if result.N is None:
        raise PreconditionNotEstablishedError(f"no Folkman bound for k={k}, r={r} within horizon {A.horizon}")
    d = _dilation(A, result.N)
    if d is None:
        raise PreconditionNotEstablishedError(f"A holds no dilated copy of [1, {result.N}]")
    report = ProbeReport(r, k, trials, seed, result.N, d)
    members = np.asarray(A.sorted(), dtype=np.int64)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        labels = rng.integers(0, r, size=len(members))
        for color in range(r):
            piece = WindowSet(A.horizon, frozenset(int(m) for m in members[labels == color]))
            witness = fal_level(piece, k)
            if witness is not None:
                report.successes += 1
                report.witnesses.append({"trial": trial, "color": color, "elements": list(witness.elements)})
                break
        else:
            report.violations.append([int(v) for v in labels])
            logger.error(f"[probe] trial={trial}: no piece holds a {k}-witness")
    return report
