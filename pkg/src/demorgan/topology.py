"""Grothendieck topologies on a finite category.

A topology assigns to each object a set of covering sieves subject to
four axioms (maximality, stability under pullback, transitivity,
superset closure).  On top of validation and generation this module
provides the lattice structure of topologies, the dense and De Morgan
topologies, reduction of a site to the objects not covered by the empty
sieve, and the decision procedures for whether the sheaf topos on a
site satisfies De Morgan's law or the law of excluded middle.

Internally covering families are kept as frozensets of sieve bitmasks,
one per object, in the indexing of the underlying category.
"""

from __future__ import annotations

import itertools
from math import prod
from typing import Iterable, Mapping, Optional

from .errors import (
    BoundExceeded,
    CategoryMismatch,
    EmptyReduction,
    Error,
    InputError,
    NotMaximalClosed,
    NotStable,
    NotSupersetClosed,
    NotTransitive,
    UnknownObject,
)
from .fincat import FiniteCategory, right_ore
from .sieves import Sieve, _b_mask, _m_mask, _to_mask, check_sieve


class GrothendieckTopology:
    """A validated Grothendieck topology; construct via the module API."""

    __slots__ = ("category", "_masks", "_key")

    def __init__(self, category: FiniteCategory, masks):
        self.category = category
        self._masks = tuple(frozenset(s) for s in masks)
        self._key = None

    # -- queries --------------------------------------------------------

    def covers(self, c: str) -> frozenset:
        """The covering sieves on object ``c``."""
        C = self.category
        ci = C._object_index(c)
        return frozenset(
            Sieve(c, C._mask_to_members(m)) for m in self._masks[ci]
        )

    def contains(self, S: Sieve) -> bool:
        C = self.category
        ci, mask = _to_mask(C, S)
        return mask in self._masks[ci]

    def covers_map(self) -> dict:
        return {c: self.covers(c) for c in self.category.objects}

    def has_empty_cover(self, c: str) -> bool:
        return 0 in self._masks[self.category._object_index(c)]

    @property
    def _empty_covered_by_name(self) -> dict:
        return {
            c: (0 in self._masks[ci])
            for ci, c in enumerate(self.category.objects)
        }

    def _canonical_key(self):
        if self._key is None:
            C = self.category
            self._key = frozenset(
                (c, frozenset(C._mask_to_members(m) for m in self._masks[ci]))
                for ci, c in enumerate(C.objects)
            )
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GrothendieckTopology):
            return NotImplemented
        if self.category is other.category:
            return self._masks == other._masks
        return (
            self.category == other.category
            and self._canonical_key() == other._canonical_key()
        )

    def __hash__(self):
        return hash((self.category, self._canonical_key()))

    def __repr__(self):
        sizes = ", ".join(
            f"{c}:{len(self._masks[ci])}"
            for ci, c in enumerate(self.category.objects)
        )
        return f"GrothendieckTopology({sizes})"


def _same_category(C: FiniteCategory, J: GrothendieckTopology) -> FiniteCategory:
    if C is not J.category and C != J.category:
        raise CategoryMismatch("topology does not live on the given category")
    return J.category


def _covers_in(C: FiniteCategory, J: GrothendieckTopology):
    """J's cover masks re-expressed in the arrow indexing of ``C``."""
    if J.category is C:
        return J._masks
    if J.category != C:
        raise CategoryMismatch("topologies live on different categories")
    out = []
    JC = J.category
    for ci, c in enumerate(C.objects):
        ji = JC._object_index(c)
        out.append(
            frozenset(
                C._members_to_mask(JC._mask_to_members(m))
                for m in J._masks[ji]
            )
        )
    return tuple(out)


# -- axiom checking ----------------------------------------------------------

def _stability_witness(C, masks):
    for ci in range(len(masks)):
        for S in masks[ci]:
            for f in C._into[ci]:
                if C._pull(f, S) not in masks[C._dom[f]]:
                    return ci, S, f
    return None


def _transitivity_witness(C, masks, all_sieves):
    for ci in range(len(masks)):
        cset = masks[ci]
        for R in all_sieves[ci]:
            if R in cset:
                continue
            for S in cset:
                rest = S
                ok = True
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    h = bit.bit_length() - 1
                    if C._pull(h, R) not in masks[C._dom[h]]:
                        ok = False
                        break
                if ok:
                    return ci, R, S
    return None


def _superset_witness(C, masks, all_sieves):
    for ci in range(len(masks)):
        cset = masks[ci]
        for T in all_sieves[ci]:
            if T in cset:
                continue
            for S in cset:
                if not S & ~T:
                    return ci, T, S
    return None


def _check_axioms(C, masks, all_sieves):
    """Raise the first violated topology axiom with a witness."""
    for ci in range(len(masks)):
        if C._into_mask[ci] not in masks[ci]:
            raise NotMaximalClosed(
                f"the maximal sieve on {C.objects[ci]!r} is not covering",
                witness=(C.objects[ci],),
            )
    w = _stability_witness(C, masks)
    if w is not None:
        ci, S, f = w
        raise NotStable(
            f"pullback of a covering sieve on {C.objects[ci]!r} along "
            f"{C._anames[f]!r} is not covering",
            witness=(
                C.objects[ci],
                Sieve(C.objects[ci], C._mask_to_members(S)),
                C._anames[f],
            ),
        )
    w = _transitivity_witness(C, masks, all_sieves)
    if w is not None:
        ci, R, S = w
        raise NotTransitive(
            f"a sieve on {C.objects[ci]!r} is locally covering but not "
            f"covering",
            witness=(
                C.objects[ci],
                Sieve(C.objects[ci], C._mask_to_members(R)),
                Sieve(C.objects[ci], C._mask_to_members(S)),
            ),
        )
    w = _superset_witness(C, masks, all_sieves)
    if w is not None:
        ci, T, S = w
        raise NotSupersetClosed(
            f"a superset of a covering sieve on {C.objects[ci]!r} is not "
            f"covering",
            witness=(
                C.objects[ci],
                Sieve(C.objects[ci], C._mask_to_members(T)),
                Sieve(C.objects[ci], C._mask_to_members(S)),
            ),
        )


def _all_sieves(C: FiniteCategory, max_arrows_into: int):
    return [
        C._sieve_masks(ci, max_arrows_into) for ci in range(len(C.objects))
    ]


def validate_topology(
    C: FiniteCategory,
    covers,
    *,
    max_arrows_into: int = 16,
) -> GrothendieckTopology:
    """Check a raw covering assignment against the four topology axioms.

    ``covers`` maps object names to iterables of sieves, each given
    either as a :class:`Sieve` or as an iterable of arrow names (taken
    literally, not as generators).  The first violated axiom is raised
    with a witness.
    """
    masks = [set() for _ in C.objects]
    if isinstance(covers, GrothendieckTopology):
        covers = covers.covers_map()
    for c, sieve_list in covers.items():
        ci = C._object_index(c)
        for entry in sieve_list:
            S = entry if isinstance(entry, Sieve) else Sieve(c, entry)
            if S.base != c:
                raise UnknownObject(
                    f"sieve on {S.base!r} listed under object {c!r}"
                )
            check_sieve(C, S)
            masks[ci].add(C._members_to_mask(S.members))
    all_sieves = _all_sieves(C, max_arrows_into)
    _check_axioms(C, masks, all_sieves)
    return GrothendieckTopology(C, masks)


def trivial_topology(C: FiniteCategory) -> GrothendieckTopology:
    """The least topology: only maximal sieves cover."""
    return GrothendieckTopology(
        C, [{C._into_mask[ci]} for ci in range(len(C.objects))]
    )


def _generate_masks(C, seeds, max_arrows_into):
    """Saturate seed cover masks into the least topology containing them."""
    all_sieves = _all_sieves(C, max_arrows_into)
    masks = [
        {C._into_mask[ci]} | set(seeds[ci]) for ci in range(len(C.objects))
    ]
    into, dom = C._into, C._dom
    changed = True
    while changed:
        changed = False
        for ci in range(len(masks)):
            cset = masks[ci]
            for T in all_sieves[ci]:
                if T in cset:
                    continue
                if any(not S & ~T for S in cset):
                    cset.add(T)
                    changed = True
        for ci in range(len(masks)):
            for S in list(masks[ci]):
                for f in into[ci]:
                    pm = C._pull(f, S)
                    dset = masks[dom[f]]
                    if pm not in dset:
                        dset.add(pm)
                        changed = True
        for ci in range(len(masks)):
            cset = masks[ci]
            for R in all_sieves[ci]:
                if R in cset:
                    continue
                for S in cset:
                    rest = S
                    ok = True
                    while rest:
                        bit = rest & -rest
                        rest ^= bit
                        if C._pull(bit.bit_length() - 1, R) not in masks[
                            dom[bit.bit_length() - 1]
                        ]:
                            ok = False
                            break
                    if ok:
                        cset.add(R)
                        changed = True
                        break
    return tuple(frozenset(s) for s in masks)


def generate_topology(
    C: FiniteCategory,
    seeds: Iterable[Sieve],
    *,
    max_arrows_into: int = 16,
) -> GrothendieckTopology:
    """The smallest topology whose covers include every seed sieve."""
    seed_masks = [set() for _ in C.objects]
    for S in seeds:
        ci, mask = _to_mask(C, S)
        seed_masks[ci].add(mask)
    return GrothendieckTopology(
        C, _generate_masks(C, seed_masks, max_arrows_into)
    )


def leq_topology(J1: GrothendieckTopology, J2: GrothendieckTopology) -> bool:
    """Whether every J1-covering sieve is J2-covering."""
    C = J1.category
    m2 = _covers_in(C, J2)
    return all(a <= b for a, b in zip(J1._masks, m2))


def meet_topology(
    J1: GrothendieckTopology, J2: GrothendieckTopology
) -> GrothendieckTopology:
    """Objectwise intersection of cover sets."""
    C = J1.category
    m2 = _covers_in(C, J2)
    return GrothendieckTopology(
        C, [a & b for a, b in zip(J1._masks, m2)]
    )


def join_topology(
    J1: GrothendieckTopology,
    J2: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> GrothendieckTopology:
    """Least topology containing the covers of both arguments."""
    C = J1.category
    m2 = _covers_in(C, J2)
    seeds = [a | b for a, b in zip(J1._masks, m2)]
    return GrothendieckTopology(C, _generate_masks(C, seeds, max_arrows_into))


def _closure_mask(C, cov_masks, ci, mask):
    out = 0
    for f in C._into[ci]:
        if C._pull(f, mask) in cov_masks[C._dom[f]]:
            out |= 1 << f
    return out


def closure_of_sieve(
    C: FiniteCategory, J: GrothendieckTopology, R: Sieve
) -> Sieve:
    """Arrows whose pullback of ``R`` is covering; always a closed sieve."""
    C = _same_category(C, J)
    ci, mask = _to_mask(C, R)
    return Sieve(
        R.base, C._mask_to_members(_closure_mask(C, J._masks, ci, mask))
    )


def is_closed(C: FiniteCategory, J: GrothendieckTopology, R: Sieve) -> bool:
    C = _same_category(C, J)
    ci, mask = _to_mask(C, R)
    return _closure_mask(C, J._masks, ci, mask) == mask


def no_empty_covers(J: GrothendieckTopology) -> bool:
    """Whether the empty sieve covers no object."""
    return all(0 not in s for s in J._masks)


def dense_topology(
    C: FiniteCategory, *, max_arrows_into: int = 16
) -> GrothendieckTopology:
    """The topology whose covers are exactly the stably non-empty sieves."""
    gen = C._gen
    masks = []
    for ci in range(len(C.objects)):
        incoming = C._into[ci]
        masks.append(
            {
                m
                for m in C._sieve_masks(ci, max_arrows_into)
                if all(m & gen[f] for f in incoming)
            }
        )
    _check_axioms(C, masks, _all_sieves(C, max_arrows_into))
    return GrothendieckTopology(C, masks)


def demorgan_topology(
    C: FiniteCategory, *, max_arrows_into: int = 16
) -> GrothendieckTopology:
    """The topology generated by the sieves ``m_sieve(R)`` for every sieve R."""
    seeds = []
    for ci in range(len(C.objects)):
        seeds.append(
            {
                _m_mask(C, ci, m)
                for m in C._sieve_masks(ci, max_arrows_into)
            }
        )
    return GrothendieckTopology(C, _generate_masks(C, seeds, max_arrows_into))


def _r_masks(C, cov_masks):
    empty = [0 in cov_masks[ci] for ci in range(len(C.objects))]
    out = []
    for ci in range(len(C.objects)):
        mask = 0
        for f in C._into[ci]:
            if empty[C._dom[f]]:
                mask |= 1 << f
        out.append(mask)
    return out


def _closed_masks(C, cov_masks, ci, max_arrows_into):
    return [
        m
        for m in C._sieve_masks(ci, max_arrows_into)
        if _closure_mask(C, cov_masks, ci, m) == m
    ]


def reduced_site(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
):
    """Restrict the site to the objects not covered by the empty sieve.

    Returns ``(C, J)`` unchanged when there are no empty covers.  The
    induced topology covers a reduced sieve S on c iff the original
    sieve generated by S, together with every arrow from an
    empty-covered object, covers c.
    """
    C = _same_category(C, J)
    empty = [0 in J._masks[ci] for ci in range(len(C.objects))]
    if not any(empty):
        return C, J
    kept = [o for o, e in zip(C.objects, empty) if not e]
    if not kept:
        raise EmptyReduction("every object is covered by the empty sieve")
    keep = set(kept)
    arrows = [
        (name, dom, cod)
        for name, (dom, cod) in C.arrows.items()
        if not C.is_identity(name) and dom in keep and cod in keep
    ]
    names = {a[0] for a in arrows}
    compose = {
        (f, g): C.compose(f, g)
        for f in names
        for g in names
        if C.composable(f, g)
    }
    Ct = FiniteCategory(kept, arrows, compose)
    rmask = _r_masks(C, J._masks)
    masks_t = []
    for o in Ct.objects:
        ci = C._object_index(o)
        cov = set()
        for St in Ct._sieve_masks(Ct._object_index(o), max_arrows_into):
            members = Ct._mask_to_members(St)
            cmask = 0
            for name in members:
                cmask |= C._gen[C._arrow_index(name)]
            if (cmask | rmask[ci]) in J._masks[ci]:
                cov.add(St)
        masks_t.append(cov)
    try:
        _check_axioms(Ct, masks_t, _all_sieves(Ct, max_arrows_into))
    except InputError as exc:  # pragma: no cover - guards the construction
        raise Error(f"induced topology failed validation: {exc}") from exc
    return Ct, GrothendieckTopology(Ct, masks_t)


def _demorgan_general_witness(C, J, max_arrows_into):
    rmask = _r_masks(C, J._masks)
    cov_masks = J._masks
    for ci in range(len(C.objects)):
        cov = cov_masks[ci]
        for R in _closed_masks(C, cov_masks, ci, max_arrows_into):
            V = 0
            for f in C._into[ci]:
                d = C._dom[f]
                fR = C._pull(f, R)
                if fR == rmask[d]:
                    V |= 1 << f
                    continue
                ok = True
                for g in C._into[d]:
                    if C._pull(g, fR) == rmask[C._dom[g]] and not (
                        rmask[d] >> g & 1
                    ):
                        ok = False
                        break
                if ok:
                    V |= 1 << f
            if V not in cov:
                return ci, R, V
    return None


def _boolean_general_witness(C, J, max_arrows_into):
    rmask = _r_masks(C, J._masks)
    cov_masks = J._masks
    for ci in range(len(C.objects)):
        cov = cov_masks[ci]
        for R in _closed_masks(C, cov_masks, ci, max_arrows_into):
            V = 0
            for f in C._into[ci]:
                if (R >> f & 1) or C._pull(f, R) == rmask[C._dom[f]]:
                    V |= 1 << f
            if V not in cov:
                return ci, R, V
    return None


def _witness_sieves(C, w) -> Optional[tuple]:
    if w is None:
        return None
    ci, R, V = w
    c = C.objects[ci]
    return (
        c,
        Sieve(c, C._mask_to_members(R)),
        Sieve(c, C._mask_to_members(V)),
    )


def demorgan_counterexample(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> Optional[tuple]:
    """None if the sheaf topos satisfies De Morgan's law, else a triple
    (object, closed sieve R, criterion sieve) with the criterion sieve
    not covering."""
    C = _same_category(C, J)
    return _witness_sieves(
        C, _demorgan_general_witness(C, J, max_arrows_into)
    )


def boolean_counterexample(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> Optional[tuple]:
    C = _same_category(C, J)
    return _witness_sieves(
        C, _boolean_general_witness(C, J, max_arrows_into)
    )


def is_demorgan_general(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> bool:
    """De Morgan test via the subobject-classifier criterion.

    For every object c and closed sieve R on c, the sieve of arrows f
    with f*(R) = R_d, or with every further pullback hitting R_e only
    inside R_d, must cover c.  Works for arbitrary topologies, empty
    covers included.
    """
    C = _same_category(C, J)
    return _demorgan_general_witness(C, J, max_arrows_into) is None


def is_boolean_general(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> bool:
    """Excluded-middle test: for every closed sieve R on every object,
    the arrows with f*(R) = R_d or f in R must form a covering sieve."""
    C = _same_category(C, J)
    return _boolean_general_witness(C, J, max_arrows_into) is None


def is_demorgan_reduced(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> bool:
    """De Morgan test via reduction: the De Morgan topology of the
    reduced site must be below the induced topology."""
    try:
        Ct, Jt = reduced_site(C, J, max_arrows_into=max_arrows_into)
    except EmptyReduction:
        # sheaves on the empty site form the degenerate topos
        return True
    return leq_topology(
        demorgan_topology(Ct, max_arrows_into=max_arrows_into), Jt
    )


def is_boolean_reduced(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> bool:
    """Excluded-middle test on the reduced site: b_sieve(R) must cover
    for every closed sieve R.

    When the reduced category satisfies the right Ore condition the
    result is cross-checked against the shortcut "the only non-empty
    closed sieves are maximal".
    """
    try:
        Ct, Jt = reduced_site(C, J, max_arrows_into=max_arrows_into)
    except EmptyReduction:
        # sheaves on the empty site form the degenerate topos
        return True
    cov_masks = Jt._masks
    result = True
    for ci in range(len(Ct.objects)):
        for R in _closed_masks(Ct, cov_masks, ci, max_arrows_into):
            if _b_mask(Ct, ci, R) not in cov_masks[ci]:
                result = False
                break
        if not result:
            break
    if right_ore(Ct):
        shortcut = all(
            R == 0 or R == Ct._into_mask[ci]
            for ci in range(len(Ct.objects))
            for R in _closed_masks(Ct, cov_masks, ci, max_arrows_into)
        )
        if shortcut != result:  # pragma: no cover - theorem guard
            raise Error(
                "right-Ore Boolean shortcut disagrees with b-sieve criterion"
            )
    return result


def demorganize_site(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> GrothendieckTopology:
    """Smallest topology above the (reduced) input whose sheaf topos
    satisfies De Morgan's law; lives on the reduced category."""
    Ct, Jt = reduced_site(C, J, max_arrows_into=max_arrows_into)
    return join_topology(
        Jt,
        demorgan_topology(Ct, max_arrows_into=max_arrows_into),
        max_arrows_into=max_arrows_into,
    )


def booleanize_site(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> GrothendieckTopology:
    """Smallest topology above the (reduced) input whose sheaf topos is
    Boolean; lives on the reduced category.

    Also verifies that the dense topology coincides with the topology
    generated by all b-sieves.
    """
    Ct, Jt = reduced_site(C, J, max_arrows_into=max_arrows_into)
    dense = dense_topology(Ct, max_arrows_into=max_arrows_into)
    seeds = []
    for ci in range(len(Ct.objects)):
        seeds.append(
            {
                _b_mask(Ct, ci, m)
                for m in Ct._sieve_masks(ci, max_arrows_into)
            }
        )
    from_b = GrothendieckTopology(
        Ct, _generate_masks(Ct, seeds, max_arrows_into)
    )
    if from_b != dense:  # pragma: no cover - theorem guard
        raise Error("dense topology differs from the b-sieve generated one")
    return join_topology(Jt, dense, max_arrows_into=max_arrows_into)


def _upsets_containing_top(sieves, top):
    """All upward-closed (under inclusion) subsets containing the top."""
    order = sorted(sieves, key=lambda m: (-bin(m).count("1"), m))
    strict_sup = [
        [j for j, y in enumerate(order) if y != x and not x & ~y]
        for x in order
    ]
    results = []
    chosen = [False] * len(order)

    def rec(i):
        if i == len(order):
            results.append(
                frozenset(x for x, c in zip(order, chosen) if c)
            )
            return
        # include order[i] if all its strict supersets are in
        if all(chosen[j] for j in strict_sup[i]):
            chosen[i] = True
            rec(i + 1)
            chosen[i] = False
        if order[i] != top:
            rec(i + 1)

    rec(0)
    return results


def enumerate_topologies(
    C: FiniteCategory,
    *,
    max_nonidentity_arrows: int = 6,
    max_arrows_into: int = 16,
) -> tuple:
    """All Grothendieck topologies on ``C``.

    Candidates are products of per-object superset-closed families
    containing the maximal sieve, filtered by stability and
    transitivity.
    """
    nonid = len(C.arrows) - len(C.objects)
    if nonid > max_nonidentity_arrows:
        raise BoundExceeded(
            f"category has {nonid} non-identity arrows, above the "
            f"enumeration bound {max_nonidentity_arrows}"
        )
    all_sieves = _all_sieves(C, max_arrows_into)
    per_object = [
        _upsets_containing_top(all_sieves[ci], C._into_mask[ci])
        for ci in range(len(C.objects))
    ]
    if prod(len(u) for u in per_object) > 2_000_000:
        raise BoundExceeded("the lattice of topologies is too large")
    out = []
    for combo in itertools.product(*per_object):
        if _stability_witness(C, combo) is not None:
            continue
        if _transitivity_witness(C, combo, all_sieves) is not None:
            continue
        out.append(GrothendieckTopology(C, combo))
    return tuple(out)


def countroc_witness(
    C: FiniteCategory,
    J: GrothendieckTopology,
    *,
    max_arrows_into: int = 16,
) -> Optional[tuple]:
    """A witness (c, f, g) that the site cannot satisfy De Morgan's law:
    an object whose only cover is maximal, with f*((g)) empty.

    Requires a topology with no empty covers.
    """
    C = _same_category(C, J)
    if not no_empty_covers(J):
        raise InputError("countroc_witness requires no empty covers")
    for ci in range(len(C.objects)):
        if J._masks[ci] != frozenset({C._into_mask[ci]}):
            continue
        incoming = C._into[ci]
        for f in incoming:
            for g in incoming:
                if not C._pull(f, C._gen[g]):
                    return C.objects[ci], C._anames[f], C._anames[g]
    return None
