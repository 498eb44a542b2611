"""F(phi): the unique Leibniz morphism F(M) -> E extending an anchored map.

On words F(phi)(v1 (x) ... (x) vk) = [phi v1, [phi v2, ... phi vk]]' with
phi(x^alpha e_i) = x^alpha phi(e_i); memoized per word.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Tuple

from anchored_module import AnchoredMap, format_derivation, require_anchored
from free_leibniz import FreeElement, FreeLeibniz, FreeLeibnizInstance, Word
from axiom_checks import CheckReport, SampleGrid, element_slot, run_identity, scalar_slot

_logger = logging.getLogger(__name__)


class FreeExtension:
    def __init__(self, phi: AnchoredMap, free: FreeLeibniz) -> None:
        if phi.source != free.module:
            raise ValueError("the anchored map starts at a different module than F(M) is built on")
        self.phi = phi
        self.free = free
        self.target = phi.target
        self._words: Dict[Word, Any] = {}

    def of_word(self, word: Word) -> Any:
        cached = self._words.get(word)
        if cached is None:
            head = word[0]
            image = self.phi.image_of_generator(head.gen, self.free.algebra.evaluate_monomial(head.mono))
            if len(word) > 1:
                image = self.target.bracket(image, self.of_word(word[1:]))
            self._words[word] = cached = image
        return cached

    def __call__(self, u: FreeElement) -> Any:
        out = self.target.zero()
        for word, c in u.items():
            out = out + self.of_word(word) * c
        return out


def extend_to_free(phi: AnchoredMap, free: FreeLeibniz) -> FreeExtension:
    """Raises AnchorIncompatibility when phi does not intertwine the anchors."""
    require_anchored(phi)
    _logger.info(f"extending {list(free.module.generators)} -> {phi.target.name} to F(M)")
    return FreeExtension(phi, free)


def verify_free_extension(ext: FreeExtension, grid: SampleGrid) -> Tuple[CheckReport, ...]:
    """F(phi) preserves brackets, the A-action and the anchor on sampled words."""
    source = FreeLeibnizInstance(ext.free)
    target = ext.target
    U = element_slot(source)
    F = scalar_slot(source)
    fmt = target.format_element

    def bracket(u, v):
        return ext(source.bracket(u, v)) - target.bracket(ext(u), ext(v))

    def linear(f, u):
        return ext(source.scalar_mult(f, u)) - target.scalar_mult(f, ext(u))

    def anchor(u):
        return target.anchor(ext(u)) - source.anchor(u)

    return (
        run_identity("free_bracket", grid, [U, U], bracket, fmt),
        run_identity("free_linear", grid, [F, U], linear, fmt),
        run_identity("free_anchor", grid, [U], anchor, format_derivation),
    )
