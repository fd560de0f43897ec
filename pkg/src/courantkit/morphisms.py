"""The embedding of Hamiltonian forms into Courant sections, and its inverse on preserving sections."""

from __future__ import annotations

from .courant import (HALF, GeneralizedSection, SplitCourantModel, lie2_of_courant, pairing_minus,
                      preserves_splitting)
from .errors import NotPreserving, TwistMismatch
from .lie2 import Lie2Morphism
from .plectic import PlecticStructure, hamiltonian_vf, lie2_of_plectic
from .report import Report


def _check_twist(P: PlecticStructure, model: SplitCourantModel):
    if P.omega != model.twist:
        raise TwistMismatch(f"the model is twisted by {model.twist}, expected {P.omega}")


def embed(P: PlecticStructure, alpha) -> GeneralizedSection:
    """phi0(alpha) = s(v_alpha) + alpha."""
    return GeneralizedSection(hamiltonian_vf(P, alpha), alpha)


def main_morphism(P: PlecticStructure, model: SplitCourantModel) -> Lie2Morphism:
    """phi0(alpha) = (v_alpha, alpha), phi1 = id, Phi(a, b) = -1/2 <v_a + a, v_b + b>_-."""
    _check_twist(P, model)

    def Phi(a, b):
        return pairing_minus(embed(P, a), embed(P, b)).scale(-HALF)

    return Lie2Morphism(lambda a: embed(P, a), lambda f: f, Phi, name="embedding")


def main_pair(P: PlecticStructure, model: SplitCourantModel):
    """(morphism, source algebra, target algebra) ready for check_morphism."""
    return main_morphism(P, model), lie2_of_plectic(P), lie2_of_courant(model)


def iso_roundtrip(P: PlecticStructure, model: SplitCourantModel, e) -> Report:
    """Both directions of the correspondence between Hamiltonian forms and preserving sections.

    ``e`` is either a Hamiltonian 1-form or a section; a section that does not
    preserve the splitting raises NotPreserving.
    """
    _check_twist(P, model)
    r = Report("Hamiltonian forms vs preserving sections")
    if isinstance(e, GeneralizedSection):
        verdict = preserves_splitting(model, e)
        if not verdict:
            raise NotPreserving(verdict.certificate)
        alpha = e.alpha
        r.check("iso.vector-part", "v = v_alpha", lambda: e.v, lambda: hamiltonian_vf(P, alpha))
        r.check("iso.section-roundtrip", "phi0(alpha) = e", lambda: embed(P, alpha), lambda: e)
    else:
        image = embed(P, e)
        r.check("iso.image-preserves", "d alpha + i_v omega = 0 on phi0(alpha)",
                lambda: _certificate(model, image))
        r.check("iso.form-roundtrip", "form part of phi0(alpha) = alpha", lambda: image.alpha, lambda: e)
    return r


def _certificate(model, e):
    verdict = preserves_splitting(model, e)
    return model.chart.zero_form(2) if verdict else verdict.certificate


def is_injective_on(P: PlecticStructure, forms) -> bool:
    """phi0 separates the given distinct forms (its form part is the identity)."""
    images = {embed(P, a) for a in forms}
    return len(images) == len(set(forms))
