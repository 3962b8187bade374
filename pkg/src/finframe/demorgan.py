"""Booleanization, DeMorganization and the predicates around them.

The constructions compute every defining formula they have and assert the
formulas agree, so a disagreement surfaces as IntegrityError instead of a
silently wrong answer.  The oracle_* functions recompute the same objects
by brute-force enumeration over all sublocales and assert the structural
guarantees (existence and uniqueness of the extrema) along the way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntegrityError, NotDense, OracleFailure
from .frame import Frame, iter_bits
from .sublocales import (
    Sublocale,
    enumerate_sublocales,
    induced_frame,
    is_dense,
    is_fitted,
    is_sublocale,
    nucleus_of,
)

__all__ = [
    "booleanization",
    "booleanization_via_dense_opens",
    "demorganization",
    "is_extremally_disconnected",
    "is_boolean",
    "oracle_least_dense",
    "oracle_largest_dense_ed",
    "oracle_unique_boolean_dense",
    "verify_nearly_open",
    "NearlyOpenReport",
]


def booleanization(frame: Frame) -> Sublocale:
    """The set of regular elements a = a**, equal to the pseudocomplement image."""
    bot = frame.bottom
    hey = frame.heyting_table
    regulars = 0
    image = 0
    for a in range(frame.size):
        star = hey[a][bot]
        image |= 1 << star
        if hey[star][bot] == a:
            regulars |= 1 << a
    if regulars != image:
        raise IntegrityError("regular elements differ from the pseudocomplement image")
    s = Sublocale(frame, regulars)
    if not is_sublocale(frame, regulars):
        raise IntegrityError("regular elements do not form a sublocale")
    if not is_dense(s):
        raise IntegrityError("the Booleanization is not dense")
    return s


def booleanization_via_dense_opens(frame: Frame) -> Sublocale:
    """Intersection of all dense open sublocales; cross-checked against
    the intersection of the opens at a ∨ a*."""
    omasks = frame.open_masks()
    bot = frame.bottom
    hey = frame.heyting_table
    join = frame.join_table
    acc_dense = frame.full_mask
    for a in range(frame.size):
        if hey[a][bot] == bot:
            acc_dense &= omasks[a]
    acc_form = frame.full_mask
    for a in range(frame.size):
        acc_form &= omasks[join[a][hey[a][bot]]]
    if acc_dense != acc_form:
        raise IntegrityError(
            "dense-open intersection differs from the a ∨ a* intersection")
    return Sublocale(frame, acc_dense)


def demorganization(frame: Frame) -> Sublocale:
    """Intersection of the opens at a* ∨ a**, deduplicated over generators.

    The result is checked to be dense, fitted, and extremally disconnected
    as a frame in its own right.
    """
    bot = frame.bottom
    hey = frame.heyting_table
    join = frame.join_table
    omasks = frame.open_masks()
    gens = set()
    for a in range(frame.size):
        star = hey[a][bot]
        gens.add(join[star][hey[star][bot]])
    acc = frame.full_mask
    for g in gens:
        acc &= omasks[g]
    s = Sublocale(frame, acc)
    if not is_dense(s):
        raise IntegrityError("the DeMorganization is not dense")
    if not is_fitted(s):
        raise IntegrityError("the DeMorganization is not fitted")
    if not is_extremally_disconnected(induced_frame(s)):
        raise IntegrityError("the DeMorganization is not extremally disconnected")
    return s


def is_extremally_disconnected(frame: Frame) -> bool:
    """a* ∨ a** = 1 for every a; cross-checked against closures of opens being open."""
    bot = frame.bottom
    top = frame.top
    hey = frame.heyting_table
    join = frame.join_table
    by_elements = True
    for a in range(frame.size):
        star = hey[a][bot]
        if join[star][hey[star][bot]] != top:
            by_elements = False
            break
    opens = set(frame.open_masks())
    by_closures = True
    for a in range(frame.size):
        # closure of o(a) is the closed sublocale at the meet of o(a), which is a*
        if frame.up[hey[a][bot]] not in opens:
            by_closures = False
            break
    if by_elements != by_closures:
        raise IntegrityError(
            "elementwise and closure-of-opens characterizations disagree")
    return by_elements


def is_boolean(frame: Frame) -> bool:
    """a ∨ a* = 1 for every a."""
    bot = frame.bottom
    top = frame.top
    hey = frame.heyting_table
    join = frame.join_table
    return all(join[a][hey[a][bot]] == top for a in range(frame.size))


def oracle_least_dense(frame: Frame, subs=None) -> Sublocale:
    """Enumerate all sublocales and return the unique inclusion-least dense one."""
    if subs is None:
        subs = enumerate_sublocales(frame)
    dense = [s.members for s in subs if is_dense(s)]
    if not dense:
        raise OracleFailure("no dense sublocale found")
    inter = frame.full_mask
    for m in dense:
        inter &= m
    if inter not in dense:
        raise OracleFailure("the dense sublocales have no least member")
    return Sublocale(frame, inter)


def oracle_largest_dense_ed(frame: Frame, subs=None) -> Sublocale:
    """Enumerate and return the unique inclusion-largest dense sublocale that is
    extremally disconnected as a frame."""
    if subs is None:
        subs = enumerate_sublocales(frame)
    cands = [s.members for s in subs
             if is_dense(s) and is_extremally_disconnected(induced_frame(s))]
    if not cands:
        raise OracleFailure("no dense extremally disconnected sublocale found")
    union = 0
    for m in cands:
        union |= m
    if union not in cands:
        raise OracleFailure(
            "the dense extremally disconnected sublocales have no largest member")
    return Sublocale(frame, union)


def oracle_unique_boolean_dense(frame: Frame, subs=None) -> Sublocale:
    """Enumerate and return the unique sublocale that is dense and Boolean."""
    if subs is None:
        subs = enumerate_sublocales(frame)
    matches = [s.members for s in subs
               if is_dense(s) and is_boolean(induced_frame(s))]
    if len(matches) != 1:
        raise OracleFailure(
            f"expected exactly one Boolean dense sublocale, found {len(matches)}")
    if matches[0] != booleanization(frame).members:
        raise OracleFailure(
            "the unique Boolean dense sublocale differs from the Booleanization")
    return Sublocale(frame, matches[0])


@dataclass(frozen=True)
class NearlyOpenReport:
    passed: bool
    witnesses: tuple  # (a, nu(a*), pseudocomplement of nu(a) in the sublocale frame)

    def __bool__(self):
        return self.passed


def verify_nearly_open(frame: Frame, s: Sublocale) -> NearlyOpenReport:
    """Check that the surjection onto a dense sublocale commutes with
    pseudocomplementation, computing the inner one in the induced frame."""
    if not is_dense(s):
        raise NotDense("near-openness is only guaranteed for dense sublocales")
    nu = nucleus_of(s).table
    ind = induced_frame(s)
    bot = frame.bottom
    hey = frame.heyting_table
    witnesses = []
    for a in range(frame.size):
        lhs = nu[hey[a][bot]]
        local = ind.from_ambient(nu[a])
        rhs = ind.to_ambient(ind.heyting_table[local][ind.bottom])
        if lhs != rhs:
            witnesses.append((a, lhs, rhs))
    return NearlyOpenReport(not witnesses, tuple(witnesses))
