"""Family-independent identities: the structure relation in n and its two
Sturm-Liouville rewrites, one variant per family branch with a registered
degree-one Pearson polynomial."""

from __future__ import annotations

from ..characterization import pearson_branches, structure_relation_sides, sturm_liouville_sides
from ..engine import Erratum, Identity, Variant, register

G = "generic"


def _variants(make):
    return tuple(Variant(f"{fam.value}/{label}", fam, make(fam, label)) for fam, label in pearson_branches())


def _sr(fam, label):
    return lambda n, k, th: structure_relation_sides(fam, n, th, label)


def _sl(form, printed):
    return lambda fam, label: (lambda n, k, th: sturm_liouville_sides(fam, n, th, form, label, printed))


def _sl_fixed(form):
    def make(variant):
        fam, label = variant.family, variant.label.split("/", 1)[1]
        return lambda n, k, th: sturm_liouville_sides(fam, n, th, form, label)

    return make


SL1_NOTE = ("alpha_n and gamma_n are interchanged: with rho_n = gamma_n/alpha_(n-1) the printed form "
            "expands to gamma_n Delta p_n - rho_n gamma_(n-1) Delta p_(n-1), which is not the "
            "structure relation; d_n^2 nabla_n (alpha_n/d_n^2) Delta_n p_n is")
SL2_NOTE = ("alpha_n and gamma_n are interchanged: the printed form expands to "
            "(alpha_(n+1)/rho_(n+1)) Delta p_n - alpha_n nabla p_n; "
            "d_n^2 Delta_n (gamma_n/d_n^2) nabla_n p_n is the structure relation")


register(
    Identity("generic.sr1", G, "Lemma 3.3 Eq (sr1)",
             "phi(x) p_n(x) = alpha_n Delta_n p_n(x) - gamma_n Delta_n p_(n-1)(x), phi(x) = x - c",
             _variants(_sr), kind="structure"),
    Identity("generic.SL1", G, "Lemma 3.4 Eq (3.1)",
             "phi(x) p_n(x) = d_n^2 nabla_n (gamma_n/d_n^2) Delta_n p_n(x)",
             _variants(_sl("SL1", True)), kind="sturm-liouville",
             erratum=Erratum(SL1_NOTE, corrected_for=_sl_fixed("SL1"))),
    Identity("generic.SL2", G, "Lemma 3.4 Eq (3.2)",
             "phi(x) p_n(x) = d_n^2 Delta_n (alpha_n/d_n^2) nabla_n p_n(x)",
             _variants(_sl("SL2", True)), kind="sturm-liouville",
             erratum=Erratum(SL2_NOTE, corrected_for=_sl_fixed("SL2"))),
)
