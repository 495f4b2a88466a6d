"""Hochschild-Mitchell homology of finite free Z-linear categories.

A category is given by free hom modules with named bases and integer
structure constants for composition.  The bar complex in degree n is spanned
by cyclic composable tuples (f_n, ..., f_0) of basis morphisms with
f_k : x_k -> x_(k+1) for k < n and f_n : x_n -> x_0; its differential
composes neighbours with alternating signs and closes the cycle with the term
(-1)^n f_0 f_n (x) f_(n-1) (x) ... (x) f_1.
"""

from __future__ import annotations

import json
import os
from collections import defaultdict
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from itertools import product

from .snf import elementary_divisors, smith_normal_form

DEFAULT_MAX_ENTRIES = 2_000_000
DEFAULT_MAXDEG = 5


class CategoryError(ValueError):
    pass


class SizeGuardError(RuntimeError):
    pass


def max_entries() -> int:
    raw = os.environ.get("DECAT_MAX_ENTRIES")
    if raw is None:
        return DEFAULT_MAX_ENTRIES
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"DECAT_MAX_ENTRIES must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError("DECAT_MAX_ENTRIES must be positive")
    return value


# A basis morphism is (source, target, index) into homs[(source, target)].
Mor = tuple


@dataclass
class FinLinCat:
    objects: list
    homs: dict  # (x, y) -> list of basis names, for morphisms x -> y
    compose_table: dict  # (g, f) -> {h: coeff}, meaning g o f
    identities: dict  # x -> {m: coeff}
    # for additive closures: label -> tuple of summands, basis morphism -> (row, column, entry)
    summands: dict = field(default_factory=dict, repr=False)
    units: dict = field(default_factory=dict, repr=False)

    def basis(self, x, y) -> list[Mor]:
        return [(x, y, k) for k in range(len(self.homs.get((x, y), ())))]

    def all_basis(self) -> list[Mor]:
        return [m for (x, y) in self.homs for m in self.basis(x, y)]

    def rank(self, x, y) -> int:
        return len(self.homs.get((x, y), ()))

    def name(self, m: Mor) -> str:
        return self.homs[(m[0], m[1])][m[2]]

    def compose(self, g: Mor, f: Mor) -> dict:
        """g o f on basis morphisms, as {basis morphism: coeff}."""
        if f[1] != g[0]:
            raise CategoryError(f"{self.name(g)} o {self.name(f)} is not composable")
        return self.compose_table.get((g, f), {})

    def compose_elements(self, g: dict, f: dict) -> dict:
        out = defaultdict(int)
        for gm, gc in g.items():
            for fm, fc in f.items():
                for h, c in self.compose(gm, fm).items():
                    out[h] += gc * fc * c
        return {k: v for k, v in out.items() if v}

    def endomorphism_category(self, x) -> "FinLinCat":
        homs = {(x, x): list(self.homs.get((x, x), []))}
        table = {k: v for k, v in self.compose_table.items() if k[0][:2] == (x, x) and k[1][:2] == (x, x)}
        return FinLinCat([x], homs, table, {x: dict(self.identities[x])})

    def validate(self) -> "FinLinCat":
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise CategoryError("duplicate object names")
        for (x, y) in self.homs:
            if x not in objs or y not in objs:
                raise CategoryError(f"hom space {x}->{y} mentions an unknown object")
        for x in self.objects:
            if x not in self.identities:
                raise CategoryError(f"object {x} has no identity")
            for m in self.identities[x]:
                if m[:2] != (x, x):
                    raise CategoryError(f"identity of {x} uses {self.name(m)} outside End({x})")
        for (g, f), res in self.compose_table.items():
            for h in res:
                if h[:2] != (f[0], g[1]):
                    raise CategoryError(
                        f"{self.name(g)} o {self.name(f)} has a term {self.name(h)} in the wrong hom space"
                    )
        for f in self.all_basis():
            x, y, _ = f
            if self.compose_elements(self.identities[y], {f: 1}) != {f: 1}:
                raise CategoryError(f"identity law fails: id_{y} o {self.name(f)} != {self.name(f)}")
            if self.compose_elements({f: 1}, self.identities[x]) != {f: 1}:
                raise CategoryError(f"identity law fails: {self.name(f)} o id_{x} != {self.name(f)}")
        for (x, y) in self.homs:
            for z in self.objects:
                for w in self.objects:
                    for f, g, h in product(self.basis(x, y), self.basis(y, z), self.basis(z, w)):
                        left = self.compose_elements({h: 1}, self.compose(g, f))
                        right = self.compose_elements(self.compose(h, g), {f: 1})
                        if left != right:
                            raise CategoryError(
                                "associativity fails on the triple "
                                f"({self.name(h)}, {self.name(g)}, {self.name(f)})"
                            )
        return self


def _resolve(names: dict, ref: str):
    if ref not in names:
        raise CategoryError(f"unknown basis morphism {ref!r}")
    return names[ref]


def load_category(description) -> FinLinCat:
    """Build and validate a category from its JSON description (dict or string)."""
    if isinstance(description, str):
        description = json.loads(description)
    try:
        objects = list(description["objects"])
        raw_homs = description.get("homs", {})
        raw_compose = description.get("compose", [])
        raw_ids = description["identities"]
    except (KeyError, TypeError) as exc:
        raise CategoryError(f"malformed category description: {exc}") from None
    homs, names = {}, {}
    for key, spec in raw_homs.items():
        if "->" not in key:
            raise CategoryError(f"hom key {key!r} must look like 'x->y'")
        x, y = (s.strip() for s in key.split("->", 1))
        basis = list(spec.get("basis", []))
        if spec.get("rank", len(basis)) != len(basis):
            raise CategoryError(f"hom {key}: rank {spec['rank']} but {len(basis)} basis names")
        homs[(x, y)] = basis
        for k, nm in enumerate(basis):
            if nm in names:
                raise CategoryError(f"basis name {nm!r} used twice")
            names[nm] = (x, y, k)

    def lincomb(terms):
        out = defaultdict(int)
        for t in terms:
            out[_resolve(names, t["basis"])] += int(t["coeff"])
        return {k: v for k, v in out.items() if v}

    table = {}
    for entry in raw_compose:
        g, f = _resolve(names, entry["g"]), _resolve(names, entry["f"])
        if f[1] != g[0]:
            raise CategoryError(f"compose entry {entry['g']} o {entry['f']} is not composable")
        if (g, f) in table:
            raise CategoryError(f"compose entry {entry['g']} o {entry['f']} given twice")
        table[(g, f)] = lincomb(entry.get("result", []))
    ids = {}
    for x, terms in raw_ids.items():
        if isinstance(terms, str):
            terms = [{"basis": terms, "coeff": 1}]
        ids[x] = lincomb(terms)
    return FinLinCat(objects, homs, table, ids).validate()


def category_to_json(C: FinLinCat) -> dict:
    homs = {f"{x}->{y}": {"rank": len(b), "basis": list(b)} for (x, y), b in C.homs.items()}
    compose = [
        {
            "g": C.name(g),
            "f": C.name(f),
            "result": [{"basis": C.name(h), "coeff": c} for h, c in sorted(res.items())],
        }
        for (g, f), res in sorted(C.compose_table.items())
        if res
    ]
    ids = {x: [{"basis": C.name(m), "coeff": c} for m, c in sorted(t.items())] for x, t in C.identities.items()}
    return {"objects": list(C.objects), "homs": homs, "compose": compose, "identities": ids}


def poset_category(objects, relations) -> FinLinCat:
    """Z-linear category of a poset: C(x, y) = Z when x <= y, given generating relations x < y."""
    objects = list(objects)
    le = {(x, x) for x in objects} | {tuple(r) for r in relations}
    changed = True
    while changed:
        changed = False
        for (a, b) in list(le):
            for (c, d) in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    for (a, b) in le:
        if a != b and (b, a) in le:
            raise CategoryError(f"relations are not antisymmetric at {a}, {b}")
    homs = {(x, y): [f"{x}<{y}" if x != y else f"id_{x}"] for x in objects for y in objects if (x, y) in le}
    table = {}
    for (x, y) in homs:
        for z in objects:
            if (y, z) in homs:
                table[((y, z, 0), (x, y, 0))] = {(x, z, 0): 1}
    ids = {x: {(x, x, 0): 1} for x in objects}
    return FinLinCat(objects, homs, table, ids).validate()


def path_category(objects, arrows) -> FinLinCat:
    """Z-linear path category of an acyclic quiver; arrows are (name, source, target)."""
    objects = list(objects)
    out = defaultdict(list)
    for name, s, t in arrows:
        out[s].append((name, t))
    paths = defaultdict(list)  # (x, y) -> list of arrow-name tuples, first arrow first
    for x in objects:
        paths[(x, x)].append(())
        stack = [(x, ())]
        while stack:
            v, p = stack.pop()
            if len(p) > len(arrows) * len(objects):
                raise CategoryError("quiver has an oriented cycle")
            for name, t in out[v]:
                q = p + (name,)
                if t == x:
                    raise CategoryError("quiver has an oriented cycle")
                paths[(x, t)].append(q)
                stack.append((t, q))
    homs, index = {}, {}
    for (x, y), ps in paths.items():
        ps = sorted(ps, key=lambda p: (len(p), p))
        homs[(x, y)] = ["id_" + x if not p else "*".join(reversed(p)) for p in ps]
        for k, p in enumerate(ps):
            index[(x, y, p)] = (x, y, k)
    table = {}
    for (x, y), ps in paths.items():
        for z in objects:
            for q in paths.get((y, z), ()):
                for p in ps:
                    table[(index[(y, z, q)], index[(x, y, p)])] = {index[(x, z, p + q)]: 1}
    ids = {x: {index[(x, x, ())]: 1} for x in objects}
    return FinLinCat(objects, dict(homs), table, ids).validate()


def dual_numbers() -> FinLinCat:
    """One object whose endomorphism ring is Z[e]/(e^2)."""
    homs = {("*", "*"): ["1", "e"]}
    one, eps = ("*", "*", 0), ("*", "*", 1)
    table = {(one, one): {one: 1}, (one, eps): {eps: 1}, (eps, one): {eps: 1}, (eps, eps): {}}
    return FinLinCat(["*"], homs, table, {"*": {one: 1}}).validate()


def additive_closure(C: FinLinCat, max_summands: int = 2) -> FinLinCat:
    """Full subcategory of the additive closure on sums of at most ``max_summands`` objects.

    Objects are tuples of objects of C, labelled "x+y"; a morphism X -> Y is
    a matrix whose (j, i) entry lies in C(X_i, Y_j), and basis morphisms are
    matrix units.  ``units`` remembers (j, i, entry) for each of them.
    """
    if max_summands < 1:
        raise ValueError("max_summands must be at least 1")
    objs = [()]
    sums = []
    for _ in range(max_summands):
        objs = [X + (x,) for X in objs for x in C.objects]
        sums.extend(objs)
    label = {X: "+".join(map(str, X)) for X in sums}
    homs, unit = {}, {}
    for X in sums:
        for Y in sums:
            names = []
            for j, y in enumerate(Y):
                for i, x in enumerate(X):
                    for m in C.basis(x, y):
                        unit[(X, Y, len(names))] = (j, i, m)
                        names.append(f"{C.name(m)}[{j},{i}]:{label[X]}->{label[Y]}")
            if names:
                homs[(label[X], label[Y])] = names
    lookup = {}
    for (X, Y, k), (j, i, m) in unit.items():
        lookup[(X, Y, j, i, m)] = (label[X], label[Y], k)
    table = {}
    for X in sums:
        for Y in sums:
            for Z in sums:
                for kf in range(_rank_sum(C, X, Y)):
                    jf, i_, mf = unit[(X, Y, kf)]
                    for kg in range(_rank_sum(C, Y, Z)):
                        jg, ig, mg = unit[(Y, Z, kg)]
                        f = (label[X], label[Y], kf)
                        g = (label[Y], label[Z], kg)
                        if ig != jf:
                            table[(g, f)] = {}
                            continue
                        table[(g, f)] = {lookup[(X, Z, jg, i_, h)]: c for h, c in C.compose(mg, mf).items()}
    ids = {}
    for X in sums:
        ids[label[X]] = {
            lookup[(X, X, i, i, m)]: c for i, x in enumerate(X) for m, c in C.identities[x].items()
        }
    out = FinLinCat([label[X] for X in sums], homs, table, ids)
    out.summands = {label[X]: X for X in sums}
    out.units = {(label[X], label[Y], k): u for (X, Y, k), u in unit.items()}
    return out.validate()


def _rank_sum(C: FinLinCat, X, Y) -> int:
    return sum(C.rank(x, y) for x in X for y in Y)


# --- bar complex ---------------------------------------------------------


def chain_basis(C: FinLinCat, n: int) -> list[tuple]:
    """Cyclic composable tuples (f_n, ..., f_0) of basis morphisms, sorted."""
    out = []
    nonzero = {k for k, v in C.homs.items() if v}

    def extend(objs):
        # objs = [x_0, ..., x_k]; the tuple closes with x_n -> x_0
        if len(objs) == n + 1:
            if (objs[-1], objs[0]) in nonzero:
                pieces = [C.basis(objs[-1], objs[0])]
                pieces += [C.basis(objs[k], objs[k + 1]) for k in range(n - 1, -1, -1)]
                out.extend(product(*pieces))
            return
        for y in C.objects:
            if (objs[-1], y) in nonzero:
                extend(objs + [y])

    for x in C.objects:
        extend([x])
    out.sort()
    return out


def _boundary_columns(C: FinLinCat, n: int, src: list, tgt_index: dict) -> list[dict]:
    cols = []
    for chain in src:
        col = defaultdict(int)
        # chain = (f_n, f_(n-1), ..., f_0); position p holds f_(n-p)
        for i in range(n):
            g, f = chain[i], chain[i + 1]
            for h, c in C.compose(g, f).items():
                col[tgt_index[chain[:i] + (h,) + chain[i + 2:]]] += (-1) ** i * c
        for h, c in C.compose(chain[-1], chain[0]).items():
            col[tgt_index[(h,) + chain[1:-1]]] += (-1) ** n * c
        cols.append({r: v for r, v in col.items() if v})
    return cols


@dataclass
class ChainComplex:
    ranks: list[int]  # rank of C_0 .. C_top
    boundaries: list[list[dict]]  # boundaries[n] = columns of d_n : C_n -> C_(n-1), for n >= 1; [] for n = 0

    def dense(self, n: int) -> list[list[int]]:
        rows, cols = self.ranks[n - 1], self.ranks[n]
        M = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.boundaries[n]):
            for i, v in col.items():
                M[i][j] = v
        return M

    def check_dd(self) -> int | None:
        """First n with d_(n-1) d_n != 0, or None."""
        for n in range(2, len(self.ranks)):
            prev = self.boundaries[n - 1]
            for col in self.boundaries[n]:
                acc = defaultdict(int)
                for r, v in col.items():
                    for r2, w in prev[r].items():
                        acc[r2] += v * w
                if any(acc.values()):
                    return n
        return None


def bar_complex(C: FinLinCat, top: int, guard: int | None = None) -> ChainComplex:
    """C_0 .. C_top with all boundaries.

    The guard bounds the number of stored (nonzero) boundary entries plus
    chain basis elements, and is checked while the complex is being built.
    """
    guard = max_entries() if guard is None else guard
    used = 0
    bases, boundaries = [], [[]]
    for n in range(top + 1):
        bases.append(chain_basis(C, n))
        used += len(bases[n])
        if used > guard:
            raise SizeGuardError(f"C_{n} has rank {len(bases[n])}; the complex exceeds the limit of {guard} entries")
        if n:
            index = {c: k for k, c in enumerate(bases[n - 1])}
            cols = _boundary_columns(C, n, bases[n], index)
            used += sum(map(len, cols))
            if used > guard:
                raise SizeGuardError(f"d_{n} pushes the complex over the limit of {guard} entries")
            boundaries.append(cols)
    return ChainComplex([len(b) for b in bases], boundaries)


@dataclass(frozen=True)
class HomologyGroup:
    free: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.free == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free": self.free, "torsion": [str(t) for t in self.torsion]}

    def __str__(self) -> str:
        parts = [f"Z^{self.free}"] if self.free else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def homology(K: ChainComplex, degrees: int, strategy: str = "min") -> list[HomologyGroup]:
    """H_0 .. H_(degrees-1); needs boundaries up to d_degrees."""
    if degrees < 1 or degrees >= len(K.ranks):
        raise ValueError("need 1 <= degrees <= top degree of the complex")
    divisors = [[]]
    for n in range(1, degrees + 1):
        divisors.append(elementary_divisors(K.boundaries[n], K.ranks[n - 1], strategy))
    out = []
    for n in range(degrees):
        rank_out = len(divisors[n])
        rank_in = len(divisors[n + 1])
        tors = tuple(d for d in divisors[n + 1] if d > 1)
        out.append(HomologyGroup(K.ranks[n] - rank_out - rank_in, tors))
    return out


def hh(C: FinLinCat, d: int = DEFAULT_MAXDEG, strategy: str = "min", guard: int | None = None) -> list[HomologyGroup]:
    """HH_0 .. HH_(d-1) from the bar complex truncated at C_d."""
    if d < 1:
        raise ValueError("d must be at least 1")
    K = bar_complex(C, d, guard)
    bad = K.check_dd()
    if bad is not None:
        raise AssertionError(f"d_{bad - 1} o d_{bad} != 0")
    return homology(K, d, strategy)


def hh_dense(C: FinLinCat, d: int) -> list[HomologyGroup]:
    """Same groups through ranks of dense kernels and images (no sparse elimination)."""
    K = bar_complex(C, d)
    snfs = [None] + [smith_normal_form(K.dense(n), "first") for n in range(1, d + 1)]
    out = []
    for n in range(d):
        rank_out = snfs[n].rank if n else 0
        img = snfs[n + 1]
        out.append(HomologyGroup(K.ranks[n] - rank_out - img.rank, tuple(x for x in img.diagonal if x > 1)))
    return out


# --- the trace -------------------------------------------------------------


@dataclass
class Trace:
    """Tr(C) = C_0 / d_1(C_1) with a coordinate map on C_0."""

    C: FinLinCat
    basis0: list  # basis of C_0: endomorphism basis morphisms
    left: list  # U with U d_1 V = D
    divisors: list[int]

    @property
    def group(self) -> HomologyGroup:
        rank = len(self.divisors)
        return HomologyGroup(len(self.basis0) - rank, tuple(d for d in self.divisors if d > 1))

    def _coords(self, vec: list[int]) -> tuple[int, ...]:
        w = [sum(u * v for u, v in zip(row, vec) if u) for row in self.left]
        rank = len(self.divisors)
        tors = [w[i] % d for i, d in enumerate(self.divisors) if d > 1]
        return tuple(w[rank:]) + tuple(tors)

    def class_of(self, element: dict) -> tuple[int, ...]:
        """Coordinates of the class of an endomorphism, given as {basis morphism: coeff}."""
        index = {m: k for k, m in enumerate(self.basis0)}
        vec = [0] * len(self.basis0)
        for m, c in element.items():
            if m[0] != m[1]:
                raise ValueError(f"{self.C.name(m)} is not an endomorphism")
            if (m,) not in index:
                raise ValueError(f"{m} is not a basis morphism of the category")
            vec[index[(m,)]] += c
        return self._coords(vec)

    def add(self, a: tuple, b: tuple) -> tuple:
        free = self.group.free
        tors = self.group.torsion
        out = [x + y for x, y in zip(a[:free], b[:free])]
        out += [(x + y) % d for x, y, d in zip(a[free:], b[free:], tors)]
        return tuple(out)


def trace0(C: FinLinCat, strategy: str = "min") -> Trace:
    K = bar_complex(C, 1)
    basis0 = chain_basis(C, 0)
    snf = smith_normal_form(K.dense(1), strategy, track_left=True)
    return Trace(C, basis0, snf.left, snf.diagonal)


def blocks_of(closure: FinLinCat, element: dict, C: FinLinCat):
    """Split an endomorphism of the closure into the block matrix over C."""
    X = None
    for m in element:
        if m[0] != m[1] or (X is not None and m[0] != X):
            raise ValueError("expected an endomorphism of a single object")
        X = m[0]
    objs = list(closure.summands[X]) if X is not None else []
    blocks = [[{} for _ in objs] for _ in objs]
    for m, c in element.items():
        j, i, entry = closure.units[m]
        blocks[j][i][entry] = blocks[j][i].get(entry, 0) + c
    return objs, blocks


def matrix_trace(T: Trace, objects: list, blocks) -> tuple[int, ...]:
    """Class of the endomorphism of objects[0] + ... + objects[k-1] whose (a, b) block maps objects[b] -> objects[a]."""
    k = len(objects)
    if len(blocks) != k or any(len(row) != k for row in blocks):
        raise ValueError(f"expected a {k}x{k} block matrix")
    for a in range(k):
        for b in range(k):
            for m in blocks[a][b]:
                if m[:2] != (objects[b], objects[a]):
                    raise ValueError(f"block ({a},{b}) holds {T.C.name(m)}, not a map {objects[b]}->{objects[a]}")
    total = T.class_of({})
    for a in range(k):
        total = T.add(total, T.class_of(blocks[a][a]))
    return total


# --- upper triangularity ---------------------------------------------------


@dataclass
class TriangularityResult:
    order: list | None
    cycle: list | None

    @property
    def upper_triangular(self) -> bool:
        return self.order is not None


def check_upper_triangular(C: FinLinCat) -> TriangularityResult:
    """A linear order compatible with nonzero homs, or a cycle of distinct objects with nonzero homs."""
    ts = TopologicalSorter({x: set() for x in C.objects})
    for (x, y), basis in C.homs.items():
        if basis and x != y:
            ts.add(y, x)
    try:
        return TriangularityResult(list(ts.static_order()), None)
    except CycleError as exc:
        # graphlib reports [v, ..., v] with each node a predecessor of the next
        return TriangularityResult(None, list(exc.args[1]))


def cycle_witness(C: FinLinCat, cycle: list) -> list[str]:
    """Basis morphisms along a reported cycle, one per step."""
    return [C.homs[(a, b)][0] for a, b in zip(cycle, cycle[1:])]


def _primary(group: HomologyGroup) -> tuple:
    parts = []
    for t in group.torsion:
        p = 2
        while t > 1:
            if t % p == 0:
                q = 1
                while t % p == 0:
                    t //= p
                    q *= p
                parts.append(q)
            p += 1
    return group.free, tuple(sorted(parts))


def direct_sum(groups: list[HomologyGroup]) -> HomologyGroup:
    return HomologyGroup(sum(g.free for g in groups), tuple(sorted(t for g in groups for t in g.torsion)))


def isomorphic(a: HomologyGroup, b: HomologyGroup) -> bool:
    return _primary(a) == _primary(b)


def decompose(C: FinLinCat, d: int = DEFAULT_MAXDEG) -> dict:
    """Compare HH(C) with the sum of HH(End(x)) degree by degree."""
    tri = check_upper_triangular(C)
    if not tri.upper_triangular:
        raise CategoryError(f"not upper-triangular: cycle {tri.cycle}")
    whole = hh(C, d)
    parts = {x: hh(C.endomorphism_category(x), d) for x in C.objects}
    summed = [direct_sum([parts[x][n] for x in C.objects]) for n in range(d)]
    return {
        "order": tri.order,
        "whole": whole,
        "summands": parts,
        "holds": all(isomorphic(a, b) for a, b in zip(whole, summed)),
    }


def is_strongly_upper_triangular(C: FinLinCat) -> bool:
    return check_upper_triangular(C).upper_triangular and all(C.rank(x, x) == 1 for x in C.objects)


def homology_json(groups: list[HomologyGroup]) -> dict:
    return {str(n): g.to_json() for n, g in enumerate(groups)}
