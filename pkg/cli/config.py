"""Run configuration: one YAML mapping, one frozen dataclass per block.

Top-level keys: module, bounds, saturation, instance, checks, seed, run.
Relative file references inside the config resolve against the config's
directory.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

import yaml

from anchored_module import AnchoredModule
from axiom_checks import DEFAULT_SAMPLE_LIMIT
from linquot import Bounds, SaturationConfig

INSTANCE_TYPES = ("free", "symmetric", "dorfman", "sc")
SUITES = ("leibniz", "symmetric", "loday", "module", "courant")
VALUE_MODULES = ("anchor", "adjoint")
RIGHT_ANCHORS = ("pairing", "unsymmetrized", "zero")

TOP_LEVEL_KEYS = {"module", "bounds", "saturation", "instance", "checks", "seed", "run"}


def _require_dict(d: Any, path: str) -> Dict[str, Any]:
    if not isinstance(d, dict):
        raise ValueError(f"Expected mapping at '{path}', got {type(d).__name__}")
    return d


def _reject_unknown(raw: Mapping[str, Any], known: set, path: str) -> None:
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ValueError(f"Unknown keys at '{path}': {unknown}")


def load_yaml(path: str) -> Dict[str, Any]:
    """Read a YAML (or JSON) mapping; syntax errors carry line and column."""
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark is not None else "unknown position"
        raise ValueError(f"{path}: {where}: {exc.problem}") from exc
    if data is None:
        return {}
    return _require_dict(data, "/")


@dataclass(frozen=True)
class BoundsConfig:
    wmax: int
    pmax: int
    delta_max: int = 6
    pair_wmax: Optional[int] = None
    pair_pmax: Optional[int] = None

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "BoundsConfig":
        _reject_unknown(raw, {"wmax", "pmax", "delta_max", "pair_wmax", "pair_pmax"}, "bounds")
        missing = [k for k in ("wmax", "pmax") if k not in raw]
        if missing:
            raise ValueError(f"bounds missing keys: {missing}")
        return cls(
            wmax=int(raw["wmax"]),
            pmax=int(raw["pmax"]),
            delta_max=int(raw.get("delta_max", 6)),
            pair_wmax=int(raw["pair_wmax"]) if raw.get("pair_wmax") is not None else None,
            pair_pmax=int(raw["pair_pmax"]) if raw.get("pair_pmax") is not None else None,
        )

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.wmax, self.pmax)

    def pair_bounds(self) -> Optional[Bounds]:
        """Explicit pair bounds, or None for the (wmax, pmax) default."""
        if self.pair_wmax is None and self.pair_pmax is None:
            return None
        wmax = self.pair_wmax if self.pair_wmax is not None else self.wmax
        pmax = self.pair_pmax if self.pair_pmax is not None else self.pmax
        return Bounds(wmax, pmax)


@dataclass(frozen=True)
class InstanceConfig:
    """Which pseudoalgebra the `check` and `courant` commands look at.

    ``sc`` takes its table inline (dim, table, names) or from ``sc_file``.
    ``dorfman`` uses the module's variables unless ``vars`` is given;
    ``pairing_scale`` and ``d_scale`` mutate its conventions.
    """

    type: str = "symmetric"
    vars: Optional[Tuple[str, ...]] = None
    sc: Optional[Mapping[str, Any]] = None
    sc_file: Optional[str] = None
    pairing_scale: str = "1/2"
    d_scale: str = "2"
    sample_degree: int = 3
    values: str = "anchor"
    right_anchor: str = "pairing"

    def __post_init__(self) -> None:
        if self.type not in INSTANCE_TYPES:
            raise ValueError(f"instance.type must be one of {list(INSTANCE_TYPES)}, got {self.type!r}")
        if self.values not in VALUE_MODULES:
            raise ValueError(f"instance.values must be one of {list(VALUE_MODULES)}, got {self.values!r}")
        if self.right_anchor not in RIGHT_ANCHORS:
            raise ValueError(f"instance.right_anchor must be one of {list(RIGHT_ANCHORS)}, got {self.right_anchor!r}")

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any], *, base_dir: str = ".") -> "InstanceConfig":
        known = {f.name for f in dataclasses.fields(cls)} | {"dim", "table", "names"}
        _reject_unknown(raw, known, "instance")
        sc = None
        if "table" in raw or "dim" in raw:
            sc = {k: raw[k] for k in ("dim", "table", "names") if k in raw}
        sc_file = raw.get("sc_file")
        if sc_file is not None:
            sc_file = str(sc_file)
            if not os.path.isabs(sc_file):
                sc_file = os.path.join(base_dir, sc_file)
        variables = raw.get("vars")
        return cls(
            type=str(raw.get("type", "symmetric")).lower(),
            vars=tuple(str(v) for v in variables) if variables is not None else None,
            sc=sc,
            sc_file=sc_file,
            pairing_scale=str(raw.get("pairing_scale", "1/2")),
            d_scale=str(raw.get("d_scale", "2")),
            sample_degree=int(raw.get("sample_degree", 3)),
            values=str(raw.get("values", "anchor")).lower(),
            right_anchor=str(raw.get("right_anchor", "pairing")).lower(),
        )


@dataclass(frozen=True)
class ChecksConfig:
    suites: Tuple[str, ...] = SUITES
    sample_limit: int = DEFAULT_SAMPLE_LIMIT

    def __post_init__(self) -> None:
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ValueError(f"checks.suites: unknown suites {bad}; valid: {list(SUITES)} or 'all'")
        if self.sample_limit < 1:
            raise ValueError(f"checks.sample_limit must be positive, got {self.sample_limit}")

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "ChecksConfig":
        _reject_unknown(raw, {"suites", "sample_limit"}, "checks")
        suites = raw.get("suites", "all")
        return cls(
            suites=expand_suites(suites),
            sample_limit=int(raw.get("sample_limit", DEFAULT_SAMPLE_LIMIT)),
        )


def expand_suites(raw: Any) -> Tuple[str, ...]:
    names = [raw] if isinstance(raw, str) else list(raw)
    names = [str(n).lower() for n in names]
    if "all" in names:
        return SUITES
    return tuple(s for s in SUITES if s in names) + tuple(n for n in names if n not in SUITES)


@dataclass(frozen=True)
class RunConfig:
    log_dir: Optional[str] = None
    file_debug: bool = False

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any]) -> "RunConfig":
        _reject_unknown(raw, {"log_dir", "file_debug"}, "run")
        log_dir = raw.get("log_dir")
        return cls(log_dir=str(log_dir) if log_dir else None, file_debug=bool(raw.get("file_debug", False)))


@dataclass(frozen=True)
class EngineConfig:
    bounds: BoundsConfig
    module: Optional[AnchoredModule] = None
    saturation: SaturationConfig = field(default_factory=SaturationConfig)
    instance: InstanceConfig = field(default_factory=InstanceConfig)
    checks: ChecksConfig = field(default_factory=ChecksConfig)
    seed: int = 0
    run: RunConfig = field(default_factory=RunConfig)
    base_dir: str = "."

    @classmethod
    def from_mapping(cls, raw: Mapping[str, Any], *, base_dir: str = ".") -> "EngineConfig":
        _reject_unknown(raw, TOP_LEVEL_KEYS, "/")
        if "bounds" not in raw:
            raise ValueError("config missing keys: ['bounds']")
        bounds = BoundsConfig.from_mapping(_require_dict(raw["bounds"], "bounds"))
        module = None
        if raw.get("module") is not None:
            module = AnchoredModule.from_mapping(_require_dict(raw["module"], "module"))
        sat_raw = dict(_require_dict(raw.get("saturation") or {}, "saturation"))
        sat_raw.setdefault("delta_max", bounds.delta_max)
        return cls(
            bounds=bounds,
            module=module,
            saturation=SaturationConfig.from_mapping(sat_raw),
            instance=InstanceConfig.from_mapping(_require_dict(raw.get("instance") or {}, "instance"), base_dir=base_dir),
            checks=ChecksConfig.from_mapping(_require_dict(raw.get("checks") or {}, "checks")),
            seed=int(raw.get("seed", 0)),
            run=RunConfig.from_mapping(_require_dict(raw.get("run") or {}, "run")),
            base_dir=base_dir,
        )

    def require_module(self, what: str) -> AnchoredModule:
        if self.module is None:
            raise ValueError(f"config needs a 'module' block for {what}")
        return self.module

    def with_overrides(
        self,
        *,
        wmax: Optional[int] = None,
        pmax: Optional[int] = None,
        seed: Optional[int] = None,
        suite: Optional[str] = None,
        instance: Optional[str] = None,
        log_dir: Optional[str] = None,
    ) -> "EngineConfig":
        """Apply command-line flags; None leaves the config value alone."""
        cfg = self
        if wmax is not None or pmax is not None:
            cfg = dataclasses.replace(
                cfg,
                bounds=dataclasses.replace(
                    cfg.bounds,
                    wmax=wmax if wmax is not None else cfg.bounds.wmax,
                    pmax=pmax if pmax is not None else cfg.bounds.pmax,
                ),
            )
        if seed is not None:
            cfg = dataclasses.replace(cfg, seed=seed)
        if suite is not None:
            cfg = dataclasses.replace(cfg, checks=dataclasses.replace(cfg.checks, suites=expand_suites(suite)))
        if instance is not None:
            cfg = dataclasses.replace(cfg, instance=dataclasses.replace(cfg.instance, type=instance))
        if log_dir is not None:
            cfg = dataclasses.replace(cfg, run=dataclasses.replace(cfg.run, log_dir=log_dir))
        return cfg


def load_config(path: str) -> EngineConfig:
    return EngineConfig.from_mapping(load_yaml(path), base_dir=os.path.dirname(os.path.abspath(path)))
