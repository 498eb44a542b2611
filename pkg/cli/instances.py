"""Builders that turn an EngineConfig into instances, value modules and maps."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

from anchored_module import AnchoredMap, AnchoredModule
from coeff_algebra import CoefficientAlgebra
from free_leibniz import FreeLeibniz, FreeLeibnizInstance, parse_free_element
from pseudoalgebra_core import (
    AdjointModule,
    AnchorModule,
    DorfmanInstance,
    PseudoalgebraInstance,
    RightAnchor,
    StructureConstantInstance,
    StructureConstants,
    ValueModule,
    pairing_right_anchor,
    parse_dorfman_element,
    parse_sc_element,
    unsymmetrized_right_anchor,
    zero_right_anchor,
)
from sym_leibniz import SymLeibnizQuotient, build_quotient
from cli.config import EngineConfig, _require_dict, load_yaml

_logger = logging.getLogger(__name__)

ElementParser = Callable[[str], Any]


def build_free(cfg: EngineConfig) -> FreeLeibniz:
    return FreeLeibniz(cfg.require_module("the free Leibniz pseudoalgebra"), cfg.bounds.bounds)


def build_symmetric(cfg: EngineConfig, free: Optional[FreeLeibniz] = None) -> SymLeibnizQuotient:
    return build_quotient(free or build_free(cfg), cfg.saturation)


def load_structure_constants(path: str) -> StructureConstants:
    raw = load_yaml(path)
    if "sc" in raw:
        raw = _require_dict(raw["sc"], "sc")
    return StructureConstants.from_mapping(raw)


def resolve_path(cfg: EngineConfig, path: str) -> str:
    """A path as given if it exists, else relative to the config directory."""
    if os.path.isabs(path) or os.path.exists(path):
        return os.path.abspath(path)
    candidate = os.path.join(cfg.base_dir, path)
    if not os.path.exists(candidate):
        raise FileNotFoundError(f"file not found: {path}")
    return candidate


def build_structure_constants(cfg: EngineConfig) -> StructureConstantInstance:
    icfg = cfg.instance
    if icfg.sc is not None:
        constants = StructureConstants.from_mapping(icfg.sc)
    elif icfg.sc_file is not None:
        constants = load_structure_constants(icfg.sc_file)
    else:
        raise ValueError("instance.type 'sc' needs either dim/table or sc_file")
    return StructureConstantInstance(constants)


def build_dorfman(cfg: EngineConfig) -> DorfmanInstance:
    icfg = cfg.instance
    if icfg.vars is not None:
        algebra = CoefficientAlgebra(icfg.vars)
    else:
        algebra = cfg.require_module("the Dorfman instance variables").algebra
    return DorfmanInstance(
        algebra,
        pairing_scale=icfg.pairing_scale,
        d_scale=icfg.d_scale,
        sample_degree=icfg.sample_degree,
    )


def build_instance(cfg: EngineConfig) -> PseudoalgebraInstance:
    kind = cfg.instance.type
    if kind == "free":
        instance: PseudoalgebraInstance = FreeLeibnizInstance(build_free(cfg))
    elif kind == "symmetric":
        instance = build_symmetric(cfg)
    elif kind == "dorfman":
        instance = build_dorfman(cfg)
    else:
        instance = build_structure_constants(cfg)
    _logger.info(f"instance built: type={kind} name={instance.name}")
    return instance


def build_values(cfg: EngineConfig, instance: PseudoalgebraInstance) -> ValueModule:
    if cfg.instance.values == "adjoint":
        return AdjointModule(instance)
    return AnchorModule(instance)


def build_right_anchor(cfg: EngineConfig, instance: PseudoalgebraInstance) -> RightAnchor:
    kind = cfg.instance.right_anchor
    if kind == "unsymmetrized":
        if not isinstance(instance, DorfmanInstance):
            raise ValueError("instance.right_anchor 'unsymmetrized' only applies to the Dorfman instance")
        return unsymmetrized_right_anchor(instance)
    if kind == "pairing" and instance.has_pairing:
        return pairing_right_anchor(instance)
    return zero_right_anchor(instance)


# -- universal targets -------------------------------------------------------------


@dataclass(frozen=True)
class MapSpec:
    """Generator images as text in the target's element grammar."""

    images: Dict[str, str]
    pairing: str = "standard"

    @classmethod
    def from_mapping(cls, raw: Dict[str, Any]) -> "MapSpec":
        if "images" not in raw:
            raise ValueError("map file missing keys: ['images']")
        images = _require_dict(raw["images"], "images")
        pairing = str(raw.get("pairing", "standard")).lower()
        if pairing not in ("standard", "perturbed"):
            raise ValueError(f"map file 'pairing' must be standard or perturbed, got {pairing!r}")
        return cls({str(k): str(v) for k, v in images.items()}, pairing)


@dataclass(frozen=True)
class TargetSpec:
    kind: str
    path: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "TargetSpec":
        if text in ("dorfman", "self"):
            return cls(text)
        if text.startswith("sc:") and len(text) > 3:
            return cls("sc", text[3:])
        raise ValueError(f"--target must be dorfman, self or sc:<file>, got {text!r}")


def target_instance(
    target: TargetSpec, cfg: EngineConfig, quotient: SymLeibnizQuotient
) -> Tuple[PseudoalgebraInstance, ElementParser]:
    if target.kind == "self":
        free = quotient.free
        return quotient, lambda text: quotient.project(parse_free_element(free, text))
    if target.kind == "dorfman":
        instance = DorfmanInstance(quotient.algebra)
        return instance, lambda text: parse_dorfman_element(instance, text)
    sc = StructureConstantInstance(load_structure_constants(resolve_path(cfg, target.path)))
    return sc, lambda text: parse_sc_element(sc, text)


def anchored_map(module: AnchoredModule, target: PseudoalgebraInstance, parser: ElementParser, spec: MapSpec) -> AnchoredMap:
    missing = [g for g in module.generators if g not in spec.images]
    extra = sorted(set(spec.images) - set(module.generators))
    if missing or extra:
        raise ValueError(f"map file images: missing generators {missing}, unknown generators {extra}")
    images = tuple(parser(spec.images[g]) for g in module.generators)
    return AnchoredMap(module, target, images)
