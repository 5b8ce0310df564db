"""Instance configuration files.

Instances are JSON documents whose numeric leaves may be plain numbers or
strings in decimal or fraction syntax ("0.25", "2/3").  Decimal literals in
the file are parsed as literal text, so exact mode round-trips "0.1" to the
rational 1/10 rather than the nearest binary float.

Schema::

    {
      "arm1":     {"atoms": [{"location": <num>, "weight": <num>}, ...]},
      "arm2":     {"atoms": [...]} | {"known": <num>} | (omitted),
      "discount": {"values": [<num>, ...]}
                  | {"family": "uniform", "n": <int>}
                  | {"family": "geometric", "n": <int>, "beta": <num>},
      "options":  {"mode": "float"|"exact", "tie_tol": <num>,
                   "memo_cap": <int>, "parallel": <bool>}   (optional)
    }

``{"known": lam}`` desugars to a unit point mass at lam; the flag recording
that arm 2 was declared known (or absent) is kept so one-armed commands can
enforce their precondition.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .discount import DiscountSeq, make_discount, make_truncated_geometric, make_uniform
from .errors import BanditError, ConfigError
from .measures import DiscreteMeasure, measure_from_records, point_mass
from .solver import BanditState, SolverOptions


@dataclass(frozen=True)
class InstanceConfig:
    arm1: DiscreteMeasure
    arm2: Optional[DiscreteMeasure]
    arm2_known: bool
    discount: DiscountSeq
    options: SolverOptions

    def state(self) -> BanditState:
        if self.arm2 is None:
            raise ConfigError("this instance has no arm2; a two-armed command needs one")
        return BanditState(self.arm1, self.arm2, self.discount)


def _number(v, exact: bool, where: str):
    if isinstance(v, bool) or not isinstance(v, (int, str, float)):
        raise ConfigError(f"{where}: expected a number, got {v!r}")
    try:
        f = Fraction(v) if not isinstance(v, float) else Fraction(v)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"{where}: cannot parse number {v!r}") from e
    return f if exact else float(f)


def _parse_measure(node, exact: bool, where: str):
    if not isinstance(node, dict):
        raise ConfigError(f"{where}: expected an object")
    if "known" in node:
        return point_mass(_number(node["known"], exact, where), exact=exact), True
    if "atoms" not in node:
        raise ConfigError(f"{where}: needs 'atoms' or 'known'")
    atoms = node["atoms"]
    if not isinstance(atoms, list) or not atoms:
        raise ConfigError(f"{where}: 'atoms' must be a nonempty list")
    records = []
    for i, rec in enumerate(atoms):
        if not isinstance(rec, dict) or "location" not in rec or "weight" not in rec:
            raise ConfigError(f"{where}: atom {i} needs 'location' and 'weight'")
        records.append(
            {
                "location": _number(rec["location"], exact, f"{where}.atoms[{i}]"),
                "weight": _number(rec["weight"], exact, f"{where}.atoms[{i}]"),
            }
        )
    try:
        return measure_from_records(records, exact=exact), False
    except BanditError as e:
        raise ConfigError(f"{where}: {e}") from e


def _parse_discount(node, exact: bool):
    if not isinstance(node, dict):
        raise ConfigError("discount: expected an object")
    try:
        if "values" in node:
            vals = node["values"]
            if not isinstance(vals, list) or not vals:
                raise ConfigError("discount.values must be a nonempty list")
            return make_discount(
                [_number(v, exact, "discount.values") for v in vals], exact=exact
            )
        family = node.get("family")
        if family == "uniform":
            return make_uniform(int(node["n"]), exact=exact)
        if family == "geometric":
            return make_truncated_geometric(
                _number(node["beta"], exact, "discount.beta"), int(node["n"]), exact=exact
            )
    except ConfigError:
        raise
    except (BanditError, KeyError, TypeError, ValueError) as e:
        raise ConfigError(f"discount: {e}") from e
    raise ConfigError("discount: needs 'values' or a family in {'uniform', 'geometric'}")


def _parse_options(node, force_mode: Optional[str]) -> SolverOptions:
    node = node or {}
    if not isinstance(node, dict):
        raise ConfigError("options: expected an object")
    mode = force_mode or node.get("mode", "float")
    if mode not in ("float", "exact"):
        raise ConfigError(f"options.mode must be 'float' or 'exact', got {mode!r}")
    try:
        tie_tol = float(_number(node.get("tie_tol", 1e-11), False, "options.tie_tol"))
        memo_cap = int(node.get("memo_cap", SolverOptions().memo_cap))
        parallel = bool(node.get("parallel", False))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"options: {e}") from e
    return SolverOptions(mode=mode, tie_tol=tie_tol, memo_cap=memo_cap, parallel=parallel)


def parse_instance(doc: dict, *, force_mode: Optional[str] = None) -> InstanceConfig:
    if not isinstance(doc, dict):
        raise ConfigError("top level must be an object")
    options = _parse_options(doc.get("options"), force_mode)
    exact = options.exact
    if "arm1" not in doc:
        raise ConfigError("missing 'arm1'")
    arm1, _ = _parse_measure(doc["arm1"], exact, "arm1")
    arm2 = None
    arm2_known = False
    if "arm2" in doc:
        arm2, arm2_known = _parse_measure(doc["arm2"], exact, "arm2")
    if "discount" not in doc:
        raise ConfigError("missing 'discount'")
    discount = _parse_discount(doc["discount"], exact)
    return InstanceConfig(arm1, arm2, arm2_known, discount, options)


def load_instance(path, *, force_mode: Optional[str] = None) -> InstanceConfig:
    """Load and validate an instance configuration file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            # parse_float=str keeps decimal literals as text so exact mode
            # can interpret them losslessly.
            doc = json.load(fh, parse_float=str)
    except json.JSONDecodeError as e:
        raise ConfigError(e.msg, line=e.lineno, column=e.colno) from e
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror}") from e
    return parse_instance(doc, force_mode=force_mode)
