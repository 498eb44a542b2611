"""The six CLI commands. Each returns a RunReport; none of them prints."""

from __future__ import annotations

import logging
import os
from collections import Counter
from typing import Tuple

from anchored_module import AnchorIncompatibility, format_derivation, validate_anchored_map
from axiom_checks import (
    SampleGrid,
    check_courant,
    check_generalized_courant,
    check_leibniz,
    check_loday,
    check_module,
    check_square_lemmas,
    check_symmetric,
    report_from_defects,
)
from courant import (
    GenCourantData,
    SymmetryViolation,
    build_associated_courant,
    dorfman_courant_data,
    perturbed_dorfman_courant,
)
from free_leibniz import evaluate_expression, format_free_element
from pseudoalgebra_core import DorfmanInstance, FiniteInstance, PseudoalgebraInstance
from sym_leibniz import SymLeibnizQuotient
from universal_maps import NonVanishingOnIdeal, NonVanishingOnInv, build_extended_morphism
from cli.config import EngineConfig, load_yaml
from cli.instances import (
    MapSpec,
    TargetSpec,
    anchored_map,
    build_free,
    build_instance,
    build_right_anchor,
    build_symmetric,
    build_values,
    resolve_path,
    target_instance,
)
from cli.reporting import RunReport, Section, dimension_lines

_logger = logging.getLogger(__name__)


def _header(cfg: EngineConfig, config_name: str, *extra: Tuple[str, str]) -> Tuple[Tuple[str, str], ...]:
    return (
        ("config", os.path.basename(config_name)),
        ("wmax", str(cfg.bounds.wmax)),
        ("pmax", str(cfg.bounds.pmax)),
        ("seed", str(cfg.seed)),
    ) + tuple(extra)


def _grid(cfg: EngineConfig, instance: PseudoalgebraInstance) -> SampleGrid:
    return SampleGrid.for_instance(instance, limit=cfg.checks.sample_limit, seed=cfg.seed)


def run_expand(
    cfg: EngineConfig, expression: str, *, config_name: str = "", ascii: bool = False, in_quotient: bool = False
) -> RunReport:
    free = build_free(cfg)
    u = evaluate_expression(free, expression)
    lines = [f"input={expression}", f"normal_form={format_free_element(free, u, ascii=ascii)}"]
    if in_quotient:
        quotient = build_symmetric(cfg, free)
        lines.append(f"class={format_free_element(free, quotient.project(u), ascii=ascii)}")
    return RunReport("expand", _header(cfg, config_name), (Section("expand", tuple(lines)),))


def _suite_section(cfg: EngineConfig, suite: str, instance: PseudoalgebraInstance, grid: SampleGrid) -> Section:
    title = f"{suite} [{instance.name}]"
    if suite == "leibniz":
        return Section(title, checks=check_leibniz(instance, grid))
    if suite == "symmetric":
        return Section(title, checks=check_symmetric(instance, grid))
    if suite == "loday":
        D = build_right_anchor(cfg, instance)
        return Section(title, (f"right_anchor={cfg.instance.right_anchor}",), check_loday(instance, D, grid))
    if suite == "module":
        values = build_values(cfg, instance)
        return Section(title, (f"values={values.name}",), check_module(values, instance, grid))
    if not instance.has_pairing:
        return Section(title, (f"no scalar product on {instance.name}; run the courant command for C({instance.name})",))
    checks = check_courant(instance, grid)
    if isinstance(instance, DorfmanInstance):
        checks = checks + check_generalized_courant(dorfman_courant_data(instance), grid)
    return Section(title, checks=checks)


def run_check(cfg: EngineConfig, *, config_name: str = "") -> RunReport:
    instance = build_instance(cfg)
    grid = _grid(cfg, instance)
    sections = tuple(_suite_section(cfg, suite, instance, grid) for suite in cfg.checks.suites)
    header = _header(cfg, config_name, ("instance", cfg.instance.type), ("suites", ",".join(cfg.checks.suites)))
    return RunReport("check", header, sections)


def run_dims(cfg: EngineConfig, *, config_name: str = "") -> RunReport:
    quotient = build_symmetric(cfg)
    lines = dimension_lines(quotient.dimensions_by_weight(), delta=quotient.saturation.delta)
    return RunReport("dims", _header(cfg, config_name), (Section("dimensions", lines),))


def _saturation_lines(quotient: SymLeibnizQuotient) -> Tuple[str, ...]:
    result = quotient.saturation
    kinds = Counter(gen.kind for gen, _ in quotient.generators)
    return (
        f"saturation delta={result.delta} rank_history={list(result.rank_history)} discarded={result.discarded}",
        f"relation_rank={result.subspace.rank} nonzero_generators J1={kinds.get('J1', 0)} J2={kinds.get('J2', 0)}",
    )


def run_quotient(cfg: EngineConfig, *, config_name: str = "") -> RunReport:
    quotient = build_symmetric(cfg)
    dims = Section("dimensions", dimension_lines(quotient.dimensions_by_weight()))
    history = Section("saturation", _saturation_lines(quotient))
    defects = quotient.anchor_defects()
    checked = len(quotient.generators) + quotient.relations.relations.rank
    anchor = report_from_defects(
        "anchor_on_relations", checked, [((desc,), format_derivation(D)) for desc, D in defects]
    )
    symmetric = check_symmetric(quotient, _grid(cfg, quotient))
    checks = Section(f"checks [{quotient.name}]", checks=(anchor,) + symmetric)
    return RunReport("quotient", _header(cfg, config_name), (dims, history, checks))


def _square_lines(data: GenCourantData) -> Tuple[str, ...]:
    reduced = data.values
    balanced = data.balanced
    lines = [
        f"pair_bounds=({reduced.bounds.wmax},{reduced.bounds.pmax}) pairs={reduced.piece.size}",
        f"balanced_relations={balanced.quotient.relations.rank} balanced_dim={len(balanced.quotient.cobasis)}",
        f"inv_generators={len(reduced.generators)} relations={reduced.quotient.relations.rank} "
        f"dim={len(reduced.quotient.cobasis)}",
    ]
    return tuple(lines) + dimension_lines(reduced.dimensions_by_weight())


def associated_courant_sections(
    cfg: EngineConfig, instance: FiniteInstance
) -> Tuple[Tuple[Section, ...], GenCourantData | None]:
    """S1/S2 on the base, then C(E) with its dimension data, or a refusal."""
    symmetry = check_symmetric(instance, _grid(cfg, instance))
    sections = [Section(f"symmetric [{instance.name}]", checks=symmetry)]
    try:
        data = build_associated_courant(
            instance, cfg.saturation, pair_bounds=cfg.bounds.pair_bounds(), symmetry_reports=symmetry
        )
    except SymmetryViolation as exc:
        _logger.warning(f"associated courant refused: {exc}")
        sections.append(Section(f"C({instance.name})", (f"not built: {exc}",), refused=True))
        return tuple(sections), None
    sections.append(Section(data.values.name, _square_lines(data)))
    return tuple(sections), data


def run_courant(cfg: EngineConfig, *, config_name: str = "") -> RunReport:
    instance = build_instance(cfg)
    header = _header(cfg, config_name, ("instance", cfg.instance.type))
    if isinstance(instance, DorfmanInstance):
        grid = _grid(cfg, instance)
        data = dorfman_courant_data(instance)
        sections = (
            Section(f"courant [{instance.name}]", checks=check_courant(instance, grid)),
            Section(f"generalized courant [{data.name}]", checks=check_generalized_courant(data, grid)),
            Section(f"module [{data.values.name}]", checks=check_module(data.values, instance, grid)),
        )
        return RunReport("courant", header, sections)
    if not isinstance(instance, FiniteInstance):
        raise ValueError(f"courant needs a finite instance or Dorfman, got {instance.name}")
    sections, data = associated_courant_sections(cfg, instance)
    if data is None:
        return RunReport("courant", header, sections)
    square = data.values
    pair_grid = SampleGrid(square.sample_bounds, limit=cfg.checks.sample_limit, seed=cfg.seed)
    sections = sections + (
        Section(f"generalized courant [{data.name}]", checks=check_generalized_courant(data, pair_grid)),
        Section(f"module [{square.name}]", checks=check_module(square, instance, pair_grid)),
        Section(f"square lemmas [{data.balanced.name}]", checks=check_square_lemmas(data.balanced, pair_grid)),
    )
    return RunReport("courant", header, sections)


def _target_courant(
    cfg: EngineConfig, target: TargetSpec, spec: MapSpec, instance: PseudoalgebraInstance, source: GenCourantData
) -> Tuple[Tuple[Section, ...], GenCourantData | None]:
    if target.kind == "self":
        return (), source
    if isinstance(instance, DorfmanInstance):
        data = perturbed_dorfman_courant(instance) if spec.pairing == "perturbed" else dorfman_courant_data(instance)
        return (), data
    sections, data = associated_courant_sections(cfg, instance)
    return sections, data


def run_universal(cfg: EngineConfig, target: str, map_path: str, *, config_name: str = "") -> RunReport:
    tspec = TargetSpec.parse(target)
    spec = MapSpec.from_mapping(load_yaml(resolve_path(cfg, map_path)))
    module = cfg.require_module("the universal command")
    quotient = build_symmetric(cfg, build_free(cfg))
    header = _header(cfg, config_name, ("target", target))

    target_inst, parser = target_instance(tspec, cfg, quotient)
    phi = anchored_map(module, target_inst, parser, spec)
    anchor_report = validate_anchored_map(phi)
    anchor = Section(f"anchored map into {target_inst.name}", anchor_report.lines(), refused=not anchor_report.verdict)
    if not anchor_report.verdict:
        return RunReport("universal", header, (anchor,))

    source_sections, source = associated_courant_sections(cfg, quotient)
    if source is None:
        return RunReport("universal", header, (anchor,) + source_sections)
    target_sections, target_data = _target_courant(cfg, tspec, spec, target_inst, source)
    sections = (anchor,) + source_sections + target_sections
    if target_data is None:
        return RunReport("universal", header, sections)

    try:
        morphism = build_extended_morphism(
            phi, quotient, source, target_data, limit=cfg.checks.sample_limit, seed=cfg.seed
        )
    except NonVanishingOnIdeal as exc:
        refusal = Section("phi1", (f"F(phi) does not vanish on {exc.witness}", f"image={exc.image}"), refused=True)
        return RunReport("universal", header, sections + (refusal,))
    except NonVanishingOnInv as exc:
        refusal = Section("phi2", (f"phi2 does not vanish on {exc.witness}", f"image={exc.image}"), refused=True)
        return RunReport("universal", header, sections + (refusal,))
    except AnchorIncompatibility as exc:
        return RunReport("universal", header, sections + (Section("phi", (str(exc),), refused=True),))

    summary = (
        f"target={target_data.name} phi1_classes={len(morphism.phi1.table)} "
        f"phi2_classes={len(morphism.phi2.table)}",
    )
    return RunReport("universal", header, sections + (Section("universal morphism", summary, morphism.reports),))
