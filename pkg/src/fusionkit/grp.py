"""Finite permutation group kernel.

Elements are permutations of {1..n} stored 0-based; groups carry their full,
canonically sorted element table.  Every "choose one" operation picks the
lexicographic minimum so that repeated runs give identical answers.
"""

from __future__ import annotations

import itertools

from .errors import (
    ClosureTooLarge,
    InvalidPermutation,
    NotAPGroup,
    NotASubgroup,
    TooLarge,
)

DEFAULT_CLOSURE_CAP = 10_000
DEFAULT_AUT_CAP = 1000
MAX_DEGREE = 64


class Perm:
    """A permutation of {0..n-1} given by its tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        self.images = tuple(images)
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> "Perm":
        """Build from disjoint cycles in 1-based notation, e.g. [(1,2),(3,4)]."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a - 1] = b - 1
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        # (a*b)(x) = a(b(x)); composition right-to-left.
        a = self.images
        return Perm(tuple(a[j] for j in other.images))

    def inv(self) -> "Perm":
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Perm(images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        n = 1
        g = self
        while not g.is_identity():
            g = g * self
            n += 1
        return n

    def cycles(self):
        """Nontrivial cycles, 1-based, each rotated to start at its minimum."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(p + 1 for p in cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Perm"):
        return self.images < other.images

    def __le__(self, other: "Perm"):
        return self.images <= other.images

    def __repr__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def conj(g: Perm, x: Perm) -> Perm:
    """Left-handed conjugate g x g^-1."""
    return g * x * g.inv()


def _validate_perm(p: Perm, degree: int) -> None:
    if not isinstance(p, Perm):
        raise InvalidPermutation(f"not a Perm: {p!r}")
    if len(p.images) != degree:
        raise InvalidPermutation(f"degree mismatch: {p!r} on {degree} points")
    if sorted(p.images) != list(range(degree)):
        raise InvalidPermutation(f"not a bijection: {p!r}")


def mulclose(gens, identity, cap=None):
    """BFS closure of a generator set under multiplication."""
    els = {identity}
    els.update(gens)
    frontier = list(els)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if cap is not None and len(els) > cap:
                        raise ClosureTooLarge(f"closure exceeds cap {cap}")
        frontier = new
    return els


class FiniteGroup:
    """A permutation group with its full element table, canonically sorted."""

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(self.elements)
        self.order = len(self.elements)
        self.identity = Perm.identity(degree)
        self._key = (degree, tuple(g.images for g in self.elements))
        self._cache = {}

    @classmethod
    def from_generators(cls, degree, gens, cap=DEFAULT_CLOSURE_CAP) -> "FiniteGroup":
        if not 1 <= degree <= MAX_DEGREE:
            raise InvalidPermutation(f"degree {degree} outside 1..{MAX_DEGREE}")
        for g in gens:
            _validate_perm(g, degree)
        els = mulclose(tuple(gens), Perm.identity(degree), cap=cap)
        return cls(degree, gens, els)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __contains__(self, g: Perm):
        return g in self.element_set

    def __repr__(self):
        return f"FiniteGroup(degree={self.degree}, order={self.order})"

    def element_order(self, g: Perm) -> int:
        tab = self._cache.get("orders")
        if tab is None:
            tab = {x: x.order() for x in self.elements}
            self._cache["orders"] = tab
        return tab[g]

    def subgroup(self, members) -> "Subgroup":
        return Subgroup(self, members)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.elements, _checked=True)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), _checked=True)

    def closure_subgroup(self, seed) -> "Subgroup":
        """Subgroup generated by the given elements."""
        els = mulclose(tuple(seed), self.identity, cap=self.order)
        return Subgroup(self, els, _checked=True)


class Subgroup:
    """A subgroup of a fixed ambient FiniteGroup, stored as its element set."""

    __slots__ = ("parent", "members", "member_set", "_hash")

    def __init__(self, parent: FiniteGroup, members, _checked=False):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self.member_set = frozenset(self.members)
        if not _checked:
            if not self.member_set <= parent.element_set:
                raise NotASubgroup("members not inside the parent group")
            if parent.identity not in self.member_set:
                raise NotASubgroup("missing identity")
            for a in self.members:
                if a.inv() not in self.member_set:
                    raise NotASubgroup(f"not closed under inverse at {a!r}")
                for b in self.members:
                    if a * b not in self.member_set:
                        raise NotASubgroup(f"not closed under product at {a!r}*{b!r}")
        self._hash = hash((parent._key, self.members))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: Perm):
        return g in self.member_set

    def __le__(self, other: "Subgroup"):
        return self.member_set <= other.member_set

    def __lt__(self, other: "Subgroup"):
        return self.member_set < other.member_set

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent._key == other.parent._key
            and self.members == other.members
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Subgroup(order={self.order}, gens={generating_sequence(self)!r})"

    def sort_key(self):
        return (len(self.members), tuple(g.images for g in self.members))

    def conjugate_by(self, g: Perm) -> "Subgroup":
        return Subgroup(self.parent, (conj(g, x) for x in self.members), _checked=True)

    def is_normal_in(self, ambient: "Subgroup") -> bool:
        return all(conj(g, x) in self.member_set for g in ambient.members for x in self.members)

    def is_abelian(self) -> bool:
        ms = self.members
        return all(a * b == b * a for a, b in itertools.combinations(ms, 2))

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.member_set & other.member_set, _checked=True)

    def join(self, other: "Subgroup") -> "Subgroup":
        return self.parent.closure_subgroup(self.members + other.members)

    def as_finite_group(self) -> FiniteGroup:
        gens = generating_sequence(self)
        return FiniteGroup(self.parent.degree, gens or (self.parent.identity,), self.members)


def generating_sequence(H: Subgroup):
    """Greedy lexicographically minimal generating sequence of a subgroup."""
    gens = []
    have = {H.parent.identity}
    for g in H.members:
        if g in have:
            continue
        gens.append(g)
        have = mulclose(tuple(gens), H.parent.identity)
        if len(have) == H.order:
            break
    return tuple(gens)


def p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def _cached(G: FiniteGroup, key, fn):
    if key not in G._cache:
        G._cache[key] = fn()
    return G._cache[key]


# ---------------------------------------------------------------------------
# normalizers, centralizers, transporter sets


def normalizer(G, X: Subgroup, within: Subgroup | None = None) -> Subgroup:
    """N_G(X), or N_within(X) when an ambient subgroup is given."""
    amb = within.members if within is not None else _amb(G, X)
    ms = X.member_set
    members = [g for g in amb if all(conj(g, x) in ms for x in X.members)]
    return Subgroup(X.parent, members, _checked=True)


def centralizer(G, X: Subgroup, within: Subgroup | None = None) -> Subgroup:
    amb = within.members if within is not None else _amb(G, X)
    members = [g for g in amb if all(conj(g, x) == x for x in X.members)]
    return Subgroup(X.parent, members, _checked=True)


def _amb(G, X: Subgroup):
    if isinstance(G, Subgroup):
        if not X.member_set <= G.member_set:
            raise NotASubgroup("X not contained in the ambient subgroup")
        return G.members
    if X.parent is not G and X.parent != G:
        raise NotASubgroup("X does not live in G")
    return G.elements


def center(X: Subgroup) -> Subgroup:
    return centralizer(X, X)


def transporter_set(G, P: Subgroup, Q: Subgroup):
    """N_G(P,Q) = {g : gPg^-1 <= Q}, as a sorted tuple."""
    amb = G.elements if isinstance(G, FiniteGroup) else G.members
    qs = Q.member_set
    return tuple(g for g in amb if all(conj(g, x) in qs for x in P.members))


# ---------------------------------------------------------------------------
# subgroup / normal-subgroup / class enumeration


def conjugacy_classes(G: FiniteGroup):
    def build():
        classes = []
        seen = set()
        for g in G.elements:
            if g in seen:
                continue
            cls = sorted({conj(h, g) for h in G.elements})
            seen.update(cls)
            classes.append(tuple(cls))
        return tuple(classes)

    return _cached(G, "conjclasses", build)


def subgroups(G: FiniteGroup):
    """All subgroups, by closing cyclic subgroups under joins. Memoized."""

    def build():
        cyclics = {}
        for g in G.elements:
            H = frozenset(mulclose((g,), G.identity))
            cyclics[H] = g
        found = {frozenset((G.identity,))}
        found.update(cyclics)
        frontier = list(found)
        while frontier:
            new = []
            for H in frontier:
                for C, g in cyclics.items():
                    if g in H:
                        continue
                    J = frozenset(mulclose(tuple(H | {g}), G.identity))
                    if J not in found:
                        found.add(J)
                        new.append(J)
            frontier = new
        subs = [Subgroup(G, H, _checked=True) for H in found]
        return tuple(sorted(subs, key=Subgroup.sort_key))

    return _cached(G, "subgroups", build)


def subgroups_of(H: Subgroup):
    """All subgroups of a subgroup, as Subgroups of the same parent."""
    inner = subgroups(H.as_finite_group())
    return tuple(Subgroup(H.parent, K.members, _checked=True) for K in inner)


def normal_subgroups(G: FiniteGroup):
    """All normal subgroups: joins of normal closures of single elements."""

    def build():
        atoms = set()
        for cls in conjugacy_classes(G):
            atoms.add(frozenset(mulclose(cls, G.identity)))
        found = {frozenset((G.identity,))} | atoms
        frontier = list(found)
        while frontier:
            new = []
            for N in frontier:
                for A in atoms:
                    if A <= N:
                        continue
                    J = frozenset(mulclose(tuple(N | A), G.identity))
                    if J not in found:
                        found.add(J)
                        new.append(J)
            frontier = new
        subs = [Subgroup(G, N, _checked=True) for N in found]
        return tuple(sorted(subs, key=Subgroup.sort_key))

    return _cached(G, "normalsubgroups", build)


# ---------------------------------------------------------------------------
# Sylow subgroups and cores


def _p_subgroup_layers(G: FiniteGroup, p: int):
    """All p-subgroups, layered by order, via cyclic extension."""
    target = p_part(G.order, p)
    p_elements = {
        g
        for g in G.elements
        if not g.is_identity() and p_part(G.element_order(g), p) == G.element_order(g)
    }
    layer = {frozenset((G.identity,))}
    layers = [layer]
    size = 1
    while size < target:
        nxt = set()
        for H in layer:
            Hsub = Subgroup(G, H, _checked=True)
            N = normalizer(G, Hsub)
            for x in N.members:
                if x in H or x not in p_elements:
                    continue
                # walk x -> x^p until the p-th power lands in H; the last
                # stop outside H extends H by exactly index p
                y = x
                while True:
                    yp = y
                    for _ in range(p - 1):
                        yp = yp * y
                    if yp in H:
                        break
                    y = yp
                J = frozenset(mulclose(tuple(H | {y}), G.identity))
                if len(J) == size * p:
                    nxt.add(J)
        if not nxt:
            break
        layer = nxt
        layers.append(layer)
        size *= p
    return layers


def sylow(G: FiniteGroup, p: int) -> Subgroup:
    """A canonical Sylow p-subgroup (lexicographically minimal)."""

    def build():
        layers = _p_subgroup_layers(G, p)
        top = layers[-1]
        best = min(sorted(H) for H in top)
        return Subgroup(G, best, _checked=True)

    return _cached(G, ("sylow", p), build)


def all_maximal_p_subgroups(G: FiniteGroup, p: int):
    layers = _p_subgroup_layers(G, p)
    return tuple(
        sorted(
            (Subgroup(G, H, _checked=True) for H in layers[-1]),
            key=Subgroup.sort_key,
        )
    )


def cores(G: FiniteGroup, p: int):
    """(O_p(G), O_{p'}(G)): the largest normal p- and p'-subgroups."""

    def build():
        normals = normal_subgroups(G)
        p_ones = [N for N in normals if N.is_p_group(p)]
        pp_ones = [N for N in normals if N.order % p != 0]
        Op = max(p_ones, key=Subgroup.sort_key)
        Opp = max(pp_ones, key=Subgroup.sort_key)
        # maximality: the candidates are closed under join, so max contains all
        for N in p_ones:
            if not N <= Op:
                raise NotASubgroup("normal p-subgroups not directed")
        for N in pp_ones:
            if not N <= Opp:
                raise NotASubgroup("normal p'-subgroups not directed")
        return (Op, Opp)

    return _cached(G, ("cores", p), build)


def is_characteristic_p(N, p: int) -> bool:
    """Whether C_N(O_p(N)) <= O_p(N)."""
    if isinstance(N, Subgroup):
        N = N.as_finite_group()
    Op = cores(N, p)[0]
    C = centralizer(N, Op)
    return C.member_set <= Op.member_set


# ---------------------------------------------------------------------------
# group homomorphisms


class GroupHom:
    """A homomorphism between subgroups, stored as an explicit value map."""

    __slots__ = ("domain", "codomain", "mapping", "_key", "_hash")

    def __init__(self, domain: Subgroup, codomain: Subgroup, mapping, _checked=False):
        self.domain = domain
        self.codomain = codomain
        self.mapping = dict(mapping)
        if not _checked:
            if set(self.mapping) != domain.member_set:
                raise NotASubgroup("mapping not defined on the whole domain")
            if not set(self.mapping.values()) <= codomain.member_set:
                raise NotASubgroup("mapping leaves the codomain")
            for a in domain.members:
                for b in domain.members:
                    if self.mapping[a * b] != self.mapping[a] * self.mapping[b]:
                        raise NotASubgroup("not multiplicative")
        self._key = (
            domain.members,
            codomain.members,
            tuple(self.mapping[a].images for a in domain.members),
        )
        self._hash = hash(self._key)

    @classmethod
    def identity(cls, P: Subgroup) -> "GroupHom":
        return cls(P, P, {x: x for x in P.members}, _checked=True)

    @classmethod
    def inclusion(cls, P: Subgroup, Q: Subgroup) -> "GroupHom":
        if not P <= Q:
            raise NotASubgroup("inclusion needs P <= Q")
        return cls(P, Q, {x: x for x in P.members}, _checked=True)

    @classmethod
    def conjugation(cls, g: Perm, P: Subgroup, Q: Subgroup) -> "GroupHom":
        mapping = {x: conj(g, x) for x in P.members}
        if not set(mapping.values()) <= Q.member_set:
            raise NotASubgroup("conjugation does not land in the target")
        return cls(P, Q, mapping, _checked=True)

    def __call__(self, x: Perm) -> Perm:
        return self.mapping[x]

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "GroupHom"):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (
            tuple(g.images for g in self.domain.members),
            tuple(g.images for g in self.codomain.members),
            self._key[2],
        )

    def __repr__(self):
        return f"GroupHom({self.domain.order}->{self.codomain.order})"

    def value_map(self):
        return self._key[2]

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == self.domain.order

    def image(self) -> Subgroup:
        return Subgroup(self.domain.parent, self.mapping.values(), _checked=True)

    def then(self, other: "GroupHom") -> "GroupHom":
        """other o self; requires image(self) inside other's domain."""
        if not set(self.mapping.values()) <= other.domain.member_set:
            raise NotASubgroup("not composable")
        return GroupHom(
            self.domain,
            other.codomain,
            {x: other.mapping[y] for x, y in self.mapping.items()},
            _checked=True,
        )

    def inverse(self) -> "GroupHom":
        if not self.is_injective() or self.image() != self.codomain:
            raise NotASubgroup("not invertible onto codomain")
        return GroupHom(
            self.codomain, self.domain, {y: x for x, y in self.mapping.items()}, _checked=True
        )

    def restrict(self, P0: Subgroup, Q0: Subgroup) -> "GroupHom":
        if not P0 <= self.domain:
            raise NotASubgroup("restriction domain too big")
        mapping = {x: self.mapping[x] for x in P0.members}
        if not set(mapping.values()) <= Q0.member_set:
            raise NotASubgroup("restriction leaves target")
        return GroupHom(P0, Q0, mapping, _checked=True)


def compose(g: GroupHom, f: GroupHom) -> GroupHom:
    """g o f."""
    return f.then(g)


# ---------------------------------------------------------------------------
# quotients via the coset action, for groups whose elements are any hashables


def coset_quotient(elements, mult, normal_members, sort_key=None):
    """Left-multiplication action on cosets of a normal subgroup.

    Returns (FiniteGroup isomorphic to the quotient, element -> Perm map).
    Elements may be arbitrary hashables; `mult` is the group operation.
    """
    if sort_key is None:
        sort_key = lambda x: x  # noqa: E731
    normal = list(normal_members)
    coset_of = {}
    cosets = []
    for g in elements:
        if g in coset_of:
            continue
        cs = frozenset(mult(g, n) for n in normal)
        idx = len(cosets)
        cosets.append(cs)
        for h in cs:
            coset_of[h] = idx
    order = sorted(range(len(cosets)), key=lambda i: sorted(sort_key(x) for x in cosets[i]))
    rank = {old: new for new, old in enumerate(order)}
    coset_of = {g: rank[i] for g, i in coset_of.items()}
    cosets = [cosets[i] for i in order]
    n = len(cosets)
    if n > MAX_DEGREE:
        raise TooLarge(f"quotient of index {n} exceeds the degree cap {MAX_DEGREE}")
    reps = [min(cs, key=sort_key) for cs in cosets]
    elem_to_perm = {}
    for g in elements:
        images = tuple(coset_of[mult(g, reps[i])] for i in range(n))
        elem_to_perm[g] = Perm(images)
    perms = set(elem_to_perm.values())
    gens = sorted(perms)
    Q = FiniteGroup(n, tuple(gens), perms)
    if Q.order != n:
        raise NotASubgroup("coset action not regular; was the subgroup normal?")
    return Q, elem_to_perm


def quotient_by(H: Subgroup, N: Subgroup):
    """Quotient H/N as a permutation group, with the projection map."""
    if not N <= H or not N.is_normal_in(H):
        raise NotASubgroup("need N normal in H")
    return coset_quotient(H.members, lambda a, b: a * b, N.members, sort_key=lambda g: g.images)


# ---------------------------------------------------------------------------
# automorphism groups


class AutomorphismGroup:
    """Aut(G) as explicit value maps, with inner subgroup and outer classes."""

    def __init__(self, group, automorphisms, inner, outer_classes):
        self.group = group
        self.automorphisms = tuple(automorphisms)
        self.inner = tuple(inner)
        self.outer_classes = tuple(outer_classes)

    @property
    def order(self):
        return len(self.automorphisms)

    @property
    def outer_order(self):
        return len(self.outer_classes)


def automorphism_group(G: FiniteGroup, cap: int = DEFAULT_AUT_CAP) -> AutomorphismGroup:
    def build():
        if G.order > cap:
            raise TooLarge(f"|G| = {G.order} exceeds the automorphism cap {cap}")
        full = G.full_subgroup()
        gens = list(generating_sequence(full))
        if not gens:
            aut = GroupHom.identity(full)
            return AutomorphismGroup(G, (aut,), (aut,), ((aut,),))
        class_size = {}
        for cls in conjugacy_classes(G):
            for x in cls:
                class_size[x] = len(cls)
        sig = lambda x: (G.element_order(x), class_size[x])  # noqa: E731
        candidates = [sorted(x for x in G.elements if sig(x) == sig(g)) for g in gens]
        autos = []
        for images in itertools.product(*candidates):
            mapping = _extend_hom(G, gens, images)
            if mapping is None:
                continue
            if len(set(mapping.values())) != G.order:
                continue
            autos.append(GroupHom(full, full, mapping, _checked=True))
        autos = sorted(set(autos))
        inner = sorted({GroupHom.conjugation(g, full, full) for g in G.elements})
        inner_set = set(inner)
        classes = []
        seen = set()
        for a in autos:
            if a in seen:
                continue
            cls = sorted(a.then(i) for i in inner)
            if set(cls) - set(autos):
                raise NotASubgroup("inner coset leaves Aut(G); hom search incomplete")
            seen.update(cls)
            classes.append(tuple(cls))
        assert inner_set <= set(autos)
        return AutomorphismGroup(G, autos, inner, classes)

    return _cached(G, "autgroup", build)


def _extend_hom(G: FiniteGroup, gens, images):
    """Extend gens -> images to a hom on all of G; None if inconsistent."""
    hom = {G.identity: G.identity}
    for g, im in zip(gens, images):
        if hom.get(g, im) != im:
            return None
        hom[g] = im
    frontier = list(hom)
    while frontier:
        new = []
        for g, img in zip(gens, images):
            for b in frontier:
                c = g * b
                val = img * hom[b]
                if c in hom:
                    if hom[c] != val:
                        return None
                else:
                    hom[c] = val
                    new.append(c)
        frontier = new
    if len(hom) != G.order:
        # generators of the source do not generate; cannot happen for gens of G
        return None
    return hom


# ---------------------------------------------------------------------------
# Thompson subgroup


class ThompsonData:
    """J(P) together with d(P) = max order of abelian subgroups of P."""

    def __init__(self, subgroup: Subgroup, d: int):
        self.subgroup = subgroup
        self.d = d


def thompson_J(P: Subgroup, p: int | None = None) -> ThompsonData:
    if p is None:
        n = P.order
        p = next((q for q in range(2, n + 1) if n % q == 0), 2)
    if not P.is_p_group(p):
        raise NotAPGroup("Thompson subgroup needs a p-group")
    abelians = [A for A in subgroups_of(P) if A.is_abelian()]
    d = max(A.order for A in abelians)
    gens = []
    for A in abelians:
        if A.order == d:
            gens.extend(A.members)
    J = P.parent.closure_subgroup(gens)
    return ThompsonData(J, d)


def j_less(Q: ThompsonData, P: ThompsonData) -> bool:
    """Q <_J P: d(Q) < d(P), or equal d and |J(Q)| < |J(P)|."""
    if Q.d != P.d:
        return Q.d < P.d
    return Q.subgroup.order < P.subgroup.order


# ---------------------------------------------------------------------------
# group input files


def load_group_file(path) -> FiniteGroup:
    """Parse the text format: line 1 = degree, then one generator per line
    as whitespace-separated 1-based images.  '#' starts a comment line."""
    lines = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            lines.append(line)
    if not lines:
        raise InvalidPermutation(f"{path}: empty group file")
    try:
        degree = int(lines[0])
    except ValueError as exc:
        raise InvalidPermutation(f"{path}: bad degree line {lines[0]!r}") from exc
    gens = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != degree:
            raise InvalidPermutation(f"{path}: generator {line!r} has wrong length")
        try:
            images = [int(t) - 1 for t in parts]
        except ValueError as exc:
            raise InvalidPermutation(f"{path}: bad image in {line!r}") from exc
        if sorted(images) != list(range(degree)):
            raise InvalidPermutation(f"{path}: generator {line!r} is not a permutation")
        gens.append(Perm(images))
    return FiniteGroup.from_generators(degree, gens)


def subgroup_label(H: Subgroup) -> str:
    """Stable human-readable label: order plus canonical generators."""
    gens = generating_sequence(H)
    if not gens:
        return "1"
    return f"{H.order}:" + ",".join(repr(g) for g in gens)
