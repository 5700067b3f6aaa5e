"""The four particular-case relations tying the q-families together."""

from __future__ import annotations

from ..arith import qfactorial, qpochhammer
from ..engine import Erratum, register, simple
from ..families import RELATIONS, FamilyId, ParamPoint, family_poly, related_poly

G = "rel"


def _rel(key):
    return lambda n, k, th: related_poly(key, n, th)


def rel42_fixed(n, k, th):
    # the little q-Laguerre parameter must be 1/t, not t
    t, q = th["t"], th["q"]
    lhs = family_poly(FamilyId.lqL, n, ParamPoint(a=1 / t, q=1 / q))
    ql = family_poly(FamilyId.qL, n, ParamPoint(t=t, q=q))
    rhs = ql.subst_affine(-1).scale(qfactorial(q, n) / qpochhammer(t * q, q, n))
    return lhs, rhs


register(
    simple("rel.eq4.1", G, "Eq (4.1)", RELATIONS["4.1"].text, "bqL", _rel("4.1"), kind="relation"),
    simple("rel.eq4.2", G, "Eq (4.2)", RELATIONS["4.2"].text, "qL", _rel("4.2"), kind="relation",
           erratum=Erratum("the little q-Laguerre parameter on the left must be a = 1/t = q^(-alpha); "
                           "with a = t the two sides differ from n = 1 on", rel42_fixed)),
    simple("rel.eq4.3", G, "Eq (4.3)", RELATIONS["4.3"].text, "qL", _rel("4.3"), kind="relation"),
    simple("rel.eq4.4", G, "Eq (4.4)", RELATIONS["4.4"].text, "0LB", _rel("4.4"), kind="relation"),
)
