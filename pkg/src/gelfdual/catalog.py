"""Pair recipes, the shipped catalogs and the dual-pair search.

Recipe grammar (one per line in catalog files, ``#`` starts a comment)::

    symmetric N            S_N on N points
    alt N                  A_N on N points
    cyclic N               Z_N acting regularly
    abelian N1 N2 ...      Z_N1 x Z_N2 x ... acting regularly
    wreath N K             S_N wr S_K on N*K points
    diagonal sym|alt|cyclic N
                           G x G acting on G by (a, b).x = a x b^-1
    semidirect D1 .. Dm ; M1 , M2 , ...
                           A = Z_D1 x .. x Z_Dm with H generated by the
                           integer matrices Mi (row-major) acting on A
    young K N              S_N on K-subsets
    twisted_square RECIPE  (P x P) : Z2 on two copies of the points of P
    file PATH              a pair file (relative paths: the catalog file's
                           directory, else the working directory, else the
                           shipped data directory)
    sporadic NAME          embedded generator data (psl32, m11, m12, m11_22, m12_144)
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from .cyclo import CycNum
from .perm import GroupPair, PermError, PermGroup, Permutation, parse_pair_text, product_action
from .scheme import build_scheme
from .spectral import CharacterTriple, NotGelfand, build_triple, canonical_form
from .triples import (TripleIsomorphism, abelian_invariants, dual_triple, find_isomorphism, galois_part,
                      integrality_test, self_duality, splitting_field, symmetry_group, tensor_decompose)

__all__ = [
    "PairRecipe",
    "SemidirectData",
    "InvalidRecipe",
    "parse_recipe",
    "instantiate",
    "predicted_degree",
    "dual_recipe",
    "antiautomorphism_candidates",
    "load_catalog",
    "mini_catalog",
    "extended_catalog",
    "full_catalog",
    "recipe_triple",
    "dual_search",
    "DualSearchReport",
    "SPORADIC",
    "formula_L",
    "formula_M",
    "formula_E",
    "formula_nonexample",
    "name_triple",
    "TableEntry",
    "TableRow",
    "build_table",
    "format_table",
]


class InvalidRecipe(ValueError):
    pass


@dataclass(frozen=True)
class SporadicEntry:
    filename: str
    group_order: int
    stabilizer_order: int
    description: str


SPORADIC = {
    "psl32": SporadicEntry("psl32.pair", 168, 24, "PSL(3,2) on the 7 points of the Fano plane"),
    "m11": SporadicEntry("m11.pair", 7920, 720, "M11 on 11 points"),
    "m12": SporadicEntry("m12.pair", 95040, 7920, "M12 on 12 points"),
    "m11_22": SporadicEntry("m11_22.pair", 7920, 360, "M11 on the 22 cosets of A6"),
    "m12_144": SporadicEntry("m12_144.pair", 95040, 660, "M12 on the 144 cosets of PSL2(11)"),
}


@dataclass(frozen=True)
class SemidirectData:
    cyclic_orders: tuple[int, ...]
    h_gens: tuple[tuple[tuple[int, ...], ...], ...]   # m x m integer matrices

    def encode(self, a: Sequence[int]) -> int:
        idx = 0
        for ai, d in zip(a, self.cyclic_orders):
            idx = idx * d + ai % d
        return idx

    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(d) for d in self.cyclic_orders)))

    def apply(self, h, a: Sequence[int]) -> tuple[int, ...]:
        m, d = len(a), self.cyclic_orders
        return tuple(sum(h[i][j] * a[j] for j in range(m)) % d[i] for i in range(m))

    def validate(self) -> None:
        d, m = self.cyclic_orders, len(self.cyclic_orders)
        if not d or any(x < 1 for x in d):
            raise InvalidRecipe("cyclic orders must be positive")
        els = self.elements()
        for h in self.h_gens:
            if len(h) != m or any(len(row) != m for row in h):
                raise InvalidRecipe(f"matrix must be {m}x{m}")
            for i in range(m):
                for j in range(m):
                    if (d[j] * h[i][j]) % d[i]:
                        raise InvalidRecipe(f"matrix entry ({i+1},{j+1}) is not compatible with the cyclic orders")
            if len({self.apply(h, a) for a in els}) != len(els):
                raise InvalidRecipe("matrix is not invertible on A")

    def dual(self) -> "SemidirectData":
        """The adjoint action on the character group: h acts on a character
        c by c -> c o h^-1, written in the same coordinates."""
        d, m = self.cyclic_orders, len(self.cyclic_orders)
        unit = [tuple(1 if i == j else 0 for i in range(m)) for j in range(m)]
        out = []
        for h in self.h_gens:
            inv = _matrix_inverse_on(self, h)
            g = [inv[e] for e in unit]            # g[j] = h^-1 e_j
            D = tuple(tuple((d[j] * g[j][i] // d[i]) % d[j] for i in range(m)) for j in range(m))
            out.append(D)
        return SemidirectData(d, tuple(out))

    def text(self) -> str:
        mats = " , ".join(" ".join(str(v) for row in h for v in row) for h in self.h_gens)
        return "semidirect " + " ".join(map(str, self.cyclic_orders)) + " ; " + mats


def _matrix_inverse_on(data: SemidirectData, h) -> dict:
    els = data.elements()
    return {data.apply(h, a): a for a in els}


@dataclass(frozen=True)
class PairRecipe:
    kind: str
    params: tuple
    base_dir: Optional[str] = field(default=None, compare=False)

    @property
    def text(self) -> str:
        k, p = self.kind, self.params
        if k == "semidirect":
            return p[0].text()
        if k == "twisted_square":
            return "twisted_square " + p[0].text
        if k == "diagonal":
            return f"diagonal {p[0]} {p[1]}"
        return " ".join([k] + [str(x) for x in p])

    def __str__(self):
        return self.text


def parse_recipe(text: str, base_dir: Optional[str] = None) -> PairRecipe:
    toks = text.split("#", 1)[0].split()
    if not toks:
        raise InvalidRecipe("empty recipe")
    kind, args = toks[0], toks[1:]

    def ints(n=None):
        try:
            vals = tuple(int(a) for a in args)
        except ValueError:
            raise InvalidRecipe(f"{kind}: integer arguments expected, got {' '.join(args)!r}") from None
        if n is not None and len(vals) != n:
            raise InvalidRecipe(f"{kind}: expected {n} integer arguments")
        return vals

    if kind in ("symmetric", "cyclic"):
        (n,) = ints(1)
        if n < 1:
            raise InvalidRecipe(f"{kind}: degree must be at least 1")
        return PairRecipe(kind, (n,))
    if kind == "alt":
        (n,) = ints(1)
        if n < 3:
            raise InvalidRecipe("alt: A_n is transitive only for n >= 3")
        return PairRecipe(kind, (n,))
    if kind == "abelian":
        vals = ints()
        if not vals or any(v < 1 for v in vals):
            raise InvalidRecipe("abelian: positive orders expected")
        return PairRecipe(kind, vals)
    if kind == "wreath":
        n, k = ints(2)
        if n < 1 or k < 1:
            raise InvalidRecipe("wreath: parameters must be positive")
        return PairRecipe(kind, (n, k))
    if kind == "young":
        k, n = ints(2)
        if not 1 <= k < n:
            raise InvalidRecipe("young: need 1 <= k < n")
        return PairRecipe(kind, (k, n))
    if kind == "diagonal":
        if len(args) != 2 or args[0] not in ("sym", "alt", "cyclic"):
            raise InvalidRecipe("diagonal: expected 'sym|alt|cyclic N'")
        try:
            n = int(args[1])
        except ValueError:
            raise InvalidRecipe("diagonal: N must be an integer") from None
        if n < 1 or (args[0] == "alt" and n < 3):
            raise InvalidRecipe("diagonal: degree too small")
        return PairRecipe(kind, (args[0], n))
    if kind == "semidirect":
        body = " ".join(args)
        if ";" not in body:
            raise InvalidRecipe("semidirect: expected 'D1 .. Dm ; matrix , matrix'")
        head, mats = body.split(";", 1)
        try:
            d = tuple(int(x) for x in head.split())
            gens = []
            for chunk in mats.split(","):
                vals = [int(x) for x in chunk.split()]
                if not vals:
                    continue
                m = len(d)
                if len(vals) != m * m:
                    raise InvalidRecipe(f"semidirect: each matrix needs {m * m} entries")
                gens.append(tuple(tuple(vals[i * m:(i + 1) * m]) for i in range(m)))
        except ValueError:
            raise InvalidRecipe("semidirect: integer entries expected") from None
        data = SemidirectData(d, tuple(gens))
        data.validate()
        return PairRecipe(kind, (data,))
    if kind == "twisted_square":
        inner = parse_recipe(" ".join(args), base_dir)
        return PairRecipe(kind, (inner,), base_dir)
    if kind == "file":
        if len(args) != 1:
            raise InvalidRecipe("file: expected one path")
        return PairRecipe(kind, (args[0],), base_dir)
    if kind == "sporadic":
        if len(args) != 1 or args[0] not in SPORADIC:
            raise InvalidRecipe(f"sporadic: expected one of {', '.join(sorted(SPORADIC))}")
        return PairRecipe(kind, (args[0],))
    raise InvalidRecipe(f"unknown recipe kind {kind!r}")


def _data_text(name: str) -> str:
    return resources.files("gelfdual").joinpath("data", name).read_text()


def _file_path(recipe: PairRecipe) -> str:
    path = recipe.params[0]
    if os.path.isabs(path):
        return path
    if recipe.base_dir:
        return os.path.join(recipe.base_dir, path)
    if not os.path.exists(path):
        shipped = os.path.join(str(resources.files("gelfdual").joinpath("data")), path)
        if os.path.exists(shipped):
            return shipped
    return path


def predicted_degree(recipe: PairRecipe) -> int:
    k, p = recipe.kind, recipe.params
    if k in ("symmetric", "cyclic", "alt"):
        return p[0]
    if k == "abelian":
        return math.prod(p)
    if k == "wreath":
        return p[0] * p[1]
    if k == "young":
        return math.comb(p[1], p[0])
    if k == "semidirect":
        return math.prod(p[0].cyclic_orders)
    if k == "diagonal":
        kind, n = p
        return {"sym": math.factorial(n), "alt": math.factorial(n) // 2, "cyclic": n}[kind]
    if k == "twisted_square":
        return 2 * predicted_degree(p[0])
    return instantiate(recipe).degree


def _cycle(n: int, pts: Sequence[int]) -> Permutation:
    return Permutation.from_cycles(n, [tuple(pts)])


def _symmetric_gens(n: int) -> list[Permutation]:
    gens = []
    if n >= 2:
        gens.append(_cycle(n, (0, 1)))
    if n >= 3:
        gens.append(_cycle(n, range(n)))
    return gens


def _alt_gens(n: int) -> list[Permutation]:
    return [_cycle(n, (0, 1, i)) for i in range(2, n)]


def _regular_abelian(orders: Sequence[int]) -> list[Permutation]:
    data = SemidirectData(tuple(orders), ())
    els = data.elements()
    gens = []
    for i in range(len(orders)):
        if orders[i] == 1:
            continue
        step = [1 if j == i else 0 for j in range(len(orders))]
        gens.append(Permutation([data.encode([a + s for a, s in zip(x, step)]) for x in els]))
    return gens


def _base_group(kind: str, n: int) -> PermGroup:
    gens = {"sym": _symmetric_gens, "alt": _alt_gens, "cyclic": lambda m: [_cycle(m, range(m))] if m > 1 else []}[kind](n)
    return PermGroup(n, gens)


@lru_cache(maxsize=None)
def _instantiate_cached(recipe: PairRecipe) -> GroupPair:
    k, p = recipe.kind, recipe.params
    name = recipe.text
    if k == "symmetric":
        return GroupPair(PermGroup(p[0], _symmetric_gens(p[0])), 0, name)
    if k == "alt":
        return GroupPair(PermGroup(p[0], _alt_gens(p[0])), 0, name)
    if k == "cyclic":
        return GroupPair(PermGroup(p[0], _regular_abelian((p[0],))), 0, name)
    if k == "abelian":
        return GroupPair(PermGroup(math.prod(p), _regular_abelian(p)), 0, name)
    if k == "wreath":
        n, kk = p
        deg = n * kk
        gens = [Permutation.from_cycles(deg, [tuple(c)]) for c in
                ([(0, 1)] if n >= 2 else []) + ([tuple(range(n))] if n >= 3 else [])]

        def block_perm(cyc):
            img = list(range(deg))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                for i in range(n):
                    img[a * n + i] = b * n + i
            return Permutation(img)

        if kk >= 2:
            gens.append(block_perm((0, 1)))
        if kk >= 3:
            gens.append(block_perm(tuple(range(kk))))
        return GroupPair(PermGroup(deg, gens), 0, name)
    if k == "young":
        kk, n = p
        subsets = list(itertools.combinations(range(n), kk))
        index = {s: i for i, s in enumerate(subsets)}
        gens = []
        for g in _symmetric_gens(n):
            gens.append(Permutation([index[tuple(sorted(g(x) for x in s))] for s in subsets]))
        return GroupPair(PermGroup(len(subsets), gens), 0, name)
    if k == "diagonal":
        G = _base_group(p[0], p[1])
        els = sorted(G.elements())
        index = {g: i for i, g in enumerate(els)}
        gens = []
        for g in G.generators:
            gi = g.inverse()
            gens.append(Permutation([index[g * x] for x in els]))
            gens.append(Permutation([index[x * gi] for x in els]))
        ident = index[Permutation.identity(p[1])]
        return GroupPair(PermGroup(len(els), gens), ident, name)
    if k == "semidirect":
        data: SemidirectData = p[0]
        els = data.elements()
        gens = _regular_abelian(data.cyclic_orders)
        for h in data.h_gens:
            gens.append(Permutation([data.encode(data.apply(h, a)) for a in els]))
        return GroupPair(PermGroup(len(els), gens), 0, name)
    if k == "twisted_square":
        inner = _instantiate_cached(p[0])
        return product_action(inner, inner, twist=True, name=name)
    if k == "file":
        path = _file_path(recipe)
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise InvalidRecipe(f"cannot read pair file {path}: {e}") from None
        return parse_pair_text(text, name=os.path.basename(path))
    if k == "sporadic":
        entry = SPORADIC[p[0]]
        pair = parse_pair_text(_data_text(entry.filename))
        if pair.group.order() != entry.group_order or pair.stabilizer.order() != entry.stabilizer_order:
            raise InvalidRecipe(f"embedded data for {p[0]} failed its order check")
        return pair
    raise InvalidRecipe(f"unknown recipe kind {k!r}")


def instantiate(recipe: PairRecipe | str) -> GroupPair:
    if isinstance(recipe, str):
        recipe = parse_recipe(recipe)
    try:
        pair = _instantiate_cached(recipe)
    except PermError as e:
        raise InvalidRecipe(f"{recipe.text}: {e}") from e
    if recipe.kind not in ("file", "sporadic") and pair.degree != predicted_degree(recipe):
        raise InvalidRecipe(f"{recipe.text}: degree {pair.degree} differs from the predicted {predicted_degree(recipe)}")
    return pair


def antiautomorphism_candidates(recipe: PairRecipe) -> list[Permutation]:
    """Extra permutations for :func:`scheme.antiautomorphism_certificate`:
    for semidirect pairs, negation on A (g -> -g composed with inversion)."""
    if recipe.kind != "semidirect":
        return []
    data: SemidirectData = recipe.params[0]
    return [Permutation([data.encode(tuple(-x for x in a)) for a in data.elements()])]


def dual_recipe(recipe: PairRecipe) -> Optional[PairRecipe]:
    k, p = recipe.kind, recipe.params
    if k == "wreath":
        return PairRecipe("wreath", (p[1], p[0]))
    if k == "semidirect":
        return PairRecipe("semidirect", (p[0].dual(),))
    if k in ("symmetric", "cyclic", "abelian", "alt"):
        return recipe
    if k == "sporadic" and p[0] == "m11_22":
        return PairRecipe("twisted_square", (PairRecipe("sporadic", ("m11",)),))
    if k == "twisted_square" and p[0] == PairRecipe("sporadic", ("m11",)):
        return PairRecipe("sporadic", ("m11_22",))
    if k == "sporadic" and p[0] in ("m12_144", "psl32"):
        return recipe
    return None


# ---- catalogs -----------------------------------------------------------------------

def load_catalog(path: str) -> list[PairRecipe]:
    base = os.path.dirname(os.path.abspath(path))
    with open(path) as fh:
        return parse_catalog_text(fh.read(), base)


def parse_catalog_text(text: str, base_dir: Optional[str] = None) -> list[PairRecipe]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_recipe(line, base_dir))
    return out


def _shipped(name: str) -> list[PairRecipe]:
    base = str(resources.files("gelfdual").joinpath("data"))
    return parse_catalog_text(_data_text(name), base)


def mini_catalog() -> list[PairRecipe]:
    """Every transitive action of degree <= 7, one recipe per conjugacy class."""
    return _shipped("mini_catalog.txt")


def extended_catalog() -> list[PairRecipe]:
    """Larger family members and the sporadic pairs."""
    return _shipped("extended_catalog.txt")


def full_catalog() -> list[PairRecipe]:
    return mini_catalog() + extended_catalog()


@lru_cache(maxsize=None)
def recipe_triple(recipe: PairRecipe) -> Optional[CharacterTriple]:
    """The triple of a recipe's pair, or None when the pair is not Gelfand."""
    scheme = build_scheme(instantiate(recipe))
    if not scheme.is_gelfand():
        return None
    return build_triple(scheme)


# ---- dual search --------------------------------------------------------------------

@dataclass
class DualSearchReport:
    target: CharacterTriple
    prefilter_passed: bool
    found: list[tuple[PairRecipe, TripleIsomorphism]] = field(default_factory=list)
    skipped: list[tuple[PairRecipe, str]] = field(default_factory=list)

    @property
    def realizations(self) -> int:
        """r(C) of the dual triple among the searched sources (a lower bound)."""
        return len(self.found)


def dual_search(target: CharacterTriple, sources: Sequence[PairRecipe], *,
                prefilter: bool = True) -> DualSearchReport:
    """Sources whose triple is isomorphic to the dual of ``target``.

    Witnesses carry the dual triple onto the source triple:
    C_source[sigma(i)][tau(j)] = C_dual[i][j].
    """
    integral = integrality_test(target).passed
    report = DualSearchReport(target, integral)
    if prefilter and not integral:
        return report
    dual = dual_triple(target)
    degree = sum(target.B)
    for recipe in sources:
        try:
            if predicted_degree(recipe) != degree:
                report.skipped.append((recipe, "degree"))
                continue
            t = recipe_triple(recipe)
        except (InvalidRecipe, PermError, NotGelfand, ArithmeticError, AssertionError) as e:
            report.skipped.append((recipe, f"error: {e}"))
            continue
        if t is None:
            report.skipped.append((recipe, "not Gelfand"))
            continue
        iso = find_isomorphism(t, dual)
        if iso is not None:
            report.found.append((recipe, iso))
    return report


# ---- reference triples ----------------------------------------------------------------

def _from_C(x: int, C, mu=None, pi=None) -> CharacterTriple:
    r = len(C)
    C = tuple(tuple(c if isinstance(c, CycNum) else CycNum(c) for c in row) for row in C)
    A = tuple(x * C[i][0].to_fraction() for i in range(r))
    B = tuple(C[0][j].to_fraction() for j in range(r))
    mu = tuple(mu or range(r))
    pi = tuple(pi or range(r))
    k = math.lcm(1, *(c.k for row in C for c in row))
    return canonical_form(CharacterTriple(x, k, A, B, C, mu, pi)).check()


def formula_L(n: int) -> CharacterTriple:
    return _from_C(n, [[1, n - 1], [n - 1, -(n - 1)]])


def formula_M(n: int, k: int) -> CharacterTriple:
    C = [[1, k - 1, k * (n - 1)],
         [n - 1, (k - 1) * (n - 1), -k * (n - 1)],
         [(k - 1) * n, (1 - k) * n, 0]]
    return _from_C(n * k, C)


def formula_E(n: int) -> CharacterTriple:
    C = [[CycNum.zeta(n, i * j) for j in range(n)] for i in range(n)]
    neg = [(-i) % n for i in range(n)]
    return _from_C(n, C, neg, neg)


def formula_nonexample(m: int) -> CharacterTriple:
    """The 3x3 family attached to S_2 x S_m inside S_(m+2)."""
    h = Fraction(1, 2)
    C = [[1, m + 1, h * (m - 1) * (m + 2)],
         [2 * m, (m - 2) * (m + 1), -(m - 1) * (m + 2)],
         [h * (m - 1) * m, -(m - 1) * (m + 1), h * (m - 1) * (m + 2)]]
    return _from_C((m + 2) * (m + 1) // 2, C)


def name_triple(t: CharacterTriple) -> Optional[str]:
    """A family name (L_n, E_n, M_{n,k}) when t is isomorphic to one."""
    x, r = t.x_size, t.rank
    if r == 2 and find_isomorphism(t, formula_L(x)):
        return f"L_{x}"
    if r == x and x > 1 and all(a == x for a in t.A) and find_isomorphism(t, formula_E(x)):
        return f"E_{x}"
    if r == 3:
        for n in range(2, x):
            if x % n == 0 and x // n >= 2 and find_isomorphism(t, formula_M(n, x // n)):
                return f"M_{{{n},{x // n}}}"
    return None


# ---- classification table ---------------------------------------------------------------

@dataclass
class TableEntry:
    triple: CharacterTriple
    name: Optional[str]
    realizations: list[PairRecipe]
    symmetry_galois: str
    galois: str
    self_dual: bool = False
    starred: bool = False
    dual_of: Optional[int] = None       # position of the dual entry in the same row

    @property
    def label(self) -> str:
        return self.name or "C"


@dataclass
class TableRow:
    degree: int
    entries: list[TableEntry]
    omitted: list[tuple[TableEntry, str]]


def _describe_classes(classes: Sequence[int], sf) -> str:
    k, hset = sf.conductor, sf.fixing_subgroup
    if k == 1 or len(classes) <= 1:
        return "{1}"

    def op(a, b):
        return min((a * b * h) % k for h in hset)

    inv = abelian_invariants(list(classes), op, min(hset))
    return "{1}" if not inv else " x ".join(f"Z{d}" for d in inv)


def _entry(t: CharacterTriple, recipes: list[PairRecipe]) -> TableEntry:
    sf = splitting_field(t)
    natural = symmetry_group(t, convention="natural")
    return TableEntry(t, name_triple(t), recipes, _describe_classes(galois_part(natural, sf), sf), sf.describe())


def build_table(max_degree: int, catalog: Optional[Sequence[PairRecipe]] = None) -> list[TableRow]:
    """Distinct triples of each degree, grouped with their duals.

    Decomposable triples and triples whose dual has no realization in the
    catalog go to ``omitted``.  Realization counts are counts of catalog
    entries, so they are lower bounds for r(C) unless the catalog lists every
    transitive action of that degree.
    """
    catalog = list(catalog if catalog is not None else mini_catalog())
    rows = []
    for degree in range(1, max_degree + 1):
        classes: list[tuple[CharacterTriple, list[PairRecipe]]] = []
        for recipe in catalog:
            try:
                if predicted_degree(recipe) != degree:
                    continue
            except InvalidRecipe:
                continue
            t = recipe_triple(recipe)
            if t is None:
                continue
            for known, recs in classes:
                if known.rank == t.rank and find_isomorphism(known, t):
                    recs.append(recipe)
                    break
            else:
                classes.append((t, [recipe]))
        classes.sort(key=lambda c: (c[0].rank, c[0].conductor, c[0].serialize()))
        entries, omitted = [], []
        for t, recs in classes:
            e = _entry(t, recs)
            if len(tensor_decompose(t)) > 1:
                omitted.append((e, "tensor product of smaller triples"))
            else:
                entries.append(e)
        kept = []
        for e in entries:
            dual = dual_triple(e.triple)
            match = next((i for i, f in enumerate(entries) if f.triple.rank == dual.rank
                          and find_isomorphism(f.triple, dual)), None)
            if match is None:
                omitted.append((e, "no dual realized in the catalog"))
                continue
            e.dual_of = match
            if entries[match] is e:
                e.self_dual = True
                e.starred = self_duality(e.triple).nontrivial
            kept.append(e)
        # reindex dual positions after dropping entries without duals
        pos = {id(e): i for i, e in enumerate(kept)}
        for e in kept:
            e.dual_of = pos[id(entries[e.dual_of])]
        if degree >= 2 and (kept or omitted):
            rows.append(TableRow(degree, kept, omitted))
    return rows


def format_table(rows: Sequence[TableRow], *, machine: bool = False, details: bool = False) -> str:
    out = []
    if machine:
        for row in rows:
            for i, e in enumerate(row.entries):
                out.append(" ".join([
                    f"degree={row.degree}", f"entry={i + 1}", f"name={e.label}",
                    f"realizations={len(e.realizations)}", f"self_dual={int(e.self_dual)}",
                    f"starred={int(e.starred)}", f"dual={e.dual_of + 1}",
                    f"symmetry_galois={e.symmetry_galois.replace(' ', '')}", f"galois={e.galois.replace(' ', '')}",
                    "C=" + ";".join(",".join(c.serialize().replace(" ", "") for c in r) for r in e.triple.C)]))
        return "\n".join(out) + ("\n" if out else "")
    out.append("# exponent = number of catalog pairs realizing C (a lower bound for r(C))")
    out.append("# columns: Galois part of the symmetry group, Gal(L/Q); * = nontrivial self-duality")
    for row in rows:
        out.append(f"|X| = {row.degree}")
        done = set()
        for i, e in enumerate(row.entries):
            if i in done:
                continue
            group = [i] if e.self_dual else [i, e.dual_of]
            done.update(group)
            parts = []
            for j in group:
                f = row.entries[j]
                parts.append(f"[{j + 1}] {f.label}^{len(f.realizations)}{'*' if f.starred else ''}"
                             f"  {f.symmetry_galois}, {f.galois}")
            out.append("  " + "  |  ".join(parts))
            for j in group:
                f = row.entries[j]
                if f.name is None:
                    out.extend(f"      [{j + 1}] {line}" for line in f.triple.render_matrix().splitlines())
                if details:
                    out.append(f"      [{j + 1}] realized by: " + "; ".join(r.text for r in f.realizations))
        for e, why in row.omitted:
            if details:
                out.append(f"  omitted {e.label} (rank {e.triple.rank}): {why}")
    return "\n".join(out) + "\n"
