"""Finite matrix families for ``Aut(Lei3)`` and the end-to-end verification."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .algebra import derived_subalgebra, left_center
from .catalog import (AutParams, d_matrix, factor_sd, factor_tj, general_aut_matrix,
                      j_matrix, make_lei3, s_matrix, t_matrix)
from .errors import NotFiniteField
from .groups import (DEFAULT_BUDGET, MatrixGroup, centralizer_of_quotient,
                     enumerate_automorphisms, is_group, is_internal_semidirect, is_normal,
                     witness_iso_to_additive_pairs, witness_iso_to_multiplicative)
from .linalg import Field

FAMILIES = ("G", "S", "T", "J", "D")


def _members(kind: str, f: Field):
    els, units = f.elements(), f.units()
    if kind == "G":
        for a1, a2, a3, b3 in itertools.product(units, els, els, els):
            if f.add(a1, a2) != 0:
                yield general_aut_matrix(AutParams(f, a1, a2, a3, b3))
    elif kind == "S":
        for a2, a3, b3 in itertools.product(els, repeat=3):
            if f.add(f.one, a2) != 0:
                yield s_matrix(f, a2, a3, b3)
    elif kind == "T":
        for a3, b3 in itertools.product(els, repeat=2):
            yield t_matrix(f, a3, b3)
    elif kind == "J":
        for lam in els:
            if f.add(f.one, lam) != 0:
                yield j_matrix(f, lam)
    elif kind == "D":
        for sigma in units:
            yield d_matrix(f, sigma)
    else:
        raise ValueError(f"unknown family {kind!r}; choose from {', '.join(FAMILIES)}")


def family(kind: str, field: Field) -> MatrixGroup:
    """Every matrix of the named family over a finite field, validated as a group."""
    if not field.is_finite:
        raise NotFiniteField(f"family {kind} is infinite over {field}")
    group = MatrixGroup(field, 3, frozenset(_members(kind, field)))
    if not is_group(group):
        raise AssertionError(f"family {kind} over {field} is not closed")
    return group


CLAIMS = (
    ("claim_1", "brute-force Aut(Lei3) equals the general family"),
    ("claim_2", "S equals C_G(L / left center) and is normal in G"),
    ("claim_3", "G is the internal semidirect product of S and D"),
    ("claim_4", "S is the internal semidirect product of T and J"),
    ("claim_5", "T is normal in G"),
    ("claim_6", "T meets J and S meets D trivially"),
    ("claim_7", "T ~ (F,+)^2, J ~ F^x and D ~ F^x"),
    ("claim_8", "factor_sd and factor_tj reproduce every element"),
)


@dataclass
class TheoremReport:
    field: Field
    claims: dict[str, bool] = dc_field(default_factory=dict)
    orders: dict[str, int] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return len(self.claims) == len(CLAIMS) and all(self.claims.values())

    def lines(self) -> list[tuple[str, str]]:
        out = [("field", str(self.field))]
        out += [(k, "pass" if v else "fail") for k, v in self.claims.items()]
        out += [(f"{k.lower()}_order", str(v)) for k, v in self.orders.items()]
        return out


def verify_theorem(field: Field, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Check every claim about ``Aut(Lei3)`` over a prime field against brute force."""
    if not field.is_finite:
        raise NotFiniteField(f"cannot verify by enumeration over {field}")
    alg = make_lei3(field)
    aut = enumerate_automorphisms(alg, budget)
    g, s, t, j, d = (family(k, field) for k in FAMILIES)
    report = TheoremReport(field)
    ident = {g.identity}

    report.claims["claim_1"] = aut.elements == g.elements
    report.claims["claim_2"] = (
        centralizer_of_quotient(aut, left_center(alg)).elements == s.elements and is_normal(s, aut))
    report.claims["claim_3"] = is_internal_semidirect(aut, s, d)
    report.claims["claim_4"] = is_internal_semidirect(s, t, j)
    report.claims["claim_5"] = (
        is_normal(t, aut)
        and centralizer_of_quotient(aut, derived_subalgebra(alg)).elements == t.elements)
    report.claims["claim_6"] = (t.elements & j.elements) == ident and (s.elements & d.elements) == ident
    report.claims["claim_7"] = (
        witness_iso_to_additive_pairs(t)
        and witness_iso_to_multiplicative(j, "J")
        and witness_iso_to_multiplicative(d, "D"))
    report.claims["claim_8"] = all(_sd_round_trip(x, s, d) for x in aut) and all(
        _tj_round_trip(x, t, j) for x in s)

    report.orders = {"G": aut.order, "S": s.order, "T": t.order, "J": j.order, "D": d.order}
    return report


def _sd_round_trip(x, s, d) -> bool:
    sx, dx = factor_sd(x)
    return sx in s and dx in d and sx @ dx == x


def _tj_round_trip(x, t, j) -> bool:
    tx, jx = factor_tj(x)
    return tx in t and jx in j and tx @ jx == x
