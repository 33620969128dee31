"""Scenario files: JSON descriptions of a group action plus named collections.

A scenario resolves to a validated covering action, named subgroup
collections (with optional reference expectations used for discrepancy
checks), and engine options.  Presets for the bundled families are generated
here and also shipped as JSON under the package data directory, so the same
content is available both as files and programmatically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .covering import CoveringAction, CoveringError, validate_action
from .cyclotomic import Cyclotomic, is_prime
from .decomposition import ActionAnalysis
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    Permutation,
    Subgroup,
    UnknownGenerator,
    build_group,
    element_from_word,
    preset_dihedral,
    preset_elementary_abelian_2,
    preset_quaternion,
    subgroup_generate,
)


class ScenarioError(Exception):
    """Base error for scenario handling."""


class ParseError(ScenarioError):
    """The scenario document or preset reference cannot be parsed."""


class ValidationError(ScenarioError):
    """The scenario parsed but its action data failed validation."""


@dataclass
class CollectionSpec:
    """One named subgroup collection with optional reference expectations."""

    name: str
    word_lists: tuple[tuple[str, ...], ...]
    subgroups: tuple[Subgroup, ...]
    expect: dict = field(default_factory=dict)


@dataclass
class ScenarioFile:
    """A parsed scenario: group, validated action, named collections."""

    name: str
    raw: dict
    group: FiniteGroup
    action: CoveringAction
    genus: int
    collections: dict[str, CollectionSpec]
    schur_overrides: dict[int, int]


# -- preset scenario generators -------------------------------------------------


def make_dihedral_scenario(q: int) -> dict:
    """Bundled dihedral family: order 4q acting on a genus 4q-1 surface.

    Six branch points: two with reflection stabilizer of each conjugacy type
    and two with the full rotation stabilizer.  q must be an odd prime.
    """
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ParseError(f"the d2q family needs an odd prime q >= 3, got {q}")
    gq = 2 * q - 1
    reflections = [
        ["s"] if i == 0 else (["s*r"] if i == 1 else [f"s*r^{i}"])
        for i in range(2 * q)
    ]
    return {
        "name": f"d2q_q{q}",
        "description": (
            f"Dihedral group of order {4 * q} acting with six branch points "
            f"on a surface of genus {4 * q - 1}"
        ),
        "group": {"preset": "dihedral", "q": q},
        "action": {
            "orbit_genus": 0,
            "periods": [2, 2, 2, 2, 2 * q, 2 * q],
            "vector": ["s", "s", "s*r", "s*r", "r", "r^-1"],
            "handles": [],
        },
        "collections": {
            "main": {
                "subgroups": [["s"], ["s*r"], ["r"]],
                "expect": {
                    "admissible": True,
                    "genera": [gq, gq, 1],
                    "dim_p": 0,
                    "full": True,
                    "fixed_dims": {
                        "columns": ["V2", "V3", "V4", "V5", "V6"],
                        "rows": [
                            [0, 1, 0, 1, 1],
                            [0, 0, 1, 1, 1],
                            [1, 0, 0, 0, 0],
                        ],
                    },
                },
            },
            "h1": {
                "subgroups": [["s"]],
                "expect": {"admissible": True, "genera": [gq], "dim_p": 2 * q},
            },
            "h1h3": {
                "subgroups": [["s"], ["r"]],
                "expect": {
                    "admissible": True,
                    "genera": [gq, 1],
                    "dim_p": gq,
                    "full": False,
                },
            },
            "h1h4": {
                "subgroups": [["s"], [f"r^{q}"]],
                "expect": {
                    "admissible": True,
                    "join_admissible": False,
                    "genera": [gq, gq],
                    "complement_dim": 1,
                    "fixed_dims": {
                        "columns": ["V2", "V3", "V4", "V5", "V6"],
                        "rows": [
                            [0, 1, 0, 1, 1],
                            [1, 0, 0, 0, 1],
                        ],
                    },
                },
            },
            "partition": {
                "subgroups": [["r"]] + reflections,
                "expect": {"partition": True},
            },
        },
        "options": {},
    }


def make_fiber_scenario(genera: Sequence[int]) -> dict:
    """Bundled fiber-product family over an elementary abelian 2-group."""
    genera = [int(g) for g in genera]
    if len(genera) < 2:
        raise ParseError(f"fiber scenarios need at least two genera, got {genera}")
    if any(g < 1 for g in genera):
        raise ParseError(f"fiber scenario genera must be >= 1, got {genera}")
    t = len(genera)
    vector = []
    periods = []
    for i, g in enumerate(genera):
        vector.extend([f"e{i + 1}"] * (2 * g + 2))
        periods.extend([2] * (2 * g + 2))
    total = 1 - 2**t + 2 ** (t - 1) * (t + sum(genera))
    dim_p = 1 + 2 ** (t - 1) * t - 2**t + (2 ** (t - 1) - 1) * sum(genera)
    deck = [
        [f"e{j + 1}" for j in range(t) if j != i] for i in range(t)
    ]
    collections: dict = {
        "main": {
            "subgroups": deck,
            "expect": {
                "admissible": True,
                "genera": genera,
                "dim_p": dim_p,
                "full": dim_p == 0,
            },
        }
    }
    if t == 2:
        collections["partition"] = {
            "subgroups": [["e1"], ["e2"], ["e1*e2"]],
            "expect": {"partition": True},
        }
    tag = "_".join(str(g) for g in genera)
    return {
        "name": f"fiber_{tag}",
        "description": (
            f"Fiber product of {t} hyperelliptic double covers with factor "
            f"genera {genera}; total genus {total}"
        ),
        "group": {"preset": "elementary_abelian_2", "t": t},
        "action": {
            "orbit_genus": 0,
            "periods": periods,
            "vector": vector,
            "handles": [],
        },
        "collections": collections,
        "options": {},
    }


_PRESETS = {
    "d2q": lambda params: make_dihedral_scenario(int(params.get("q", 3))),
    "fiber": lambda params: make_fiber_scenario(
        [int(x) for x in str(params.get("genera", "1,1")).split(",")]
    ),
}


def bundled_scenario_names() -> tuple[str, ...]:
    files = resources.files("jacdecomp").joinpath("data")
    return tuple(
        sorted(p.name[: -len(".json")] for p in files.iterdir() if p.name.endswith(".json"))
    )


def load_bundled_scenario(name: str) -> dict:
    path = resources.files("jacdecomp").joinpath("data", f"{name}.json")
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError(f"no bundled scenario named {name!r}") from None
    return json.loads(text)


def _resolve_preset(reference: str) -> dict:
    name, _, query = reference.partition("?")
    params: dict[str, str] = {}
    if query:
        for part in query.split("&"):
            key, eq, value = part.partition("=")
            if not eq:
                raise ParseError(f"bad preset parameter {part!r} in {reference!r}")
            params[key.strip()] = value.strip()
    if name not in _PRESETS:
        raise ParseError(
            f"unknown preset {name!r}; available: {', '.join(sorted(_PRESETS))}"
        )
    try:
        return _PRESETS[name](params)
    except (ValueError, KeyError) as exc:
        raise ParseError(f"bad parameters for preset {name!r}: {exc}") from exc


# -- document -> ScenarioFile -----------------------------------------------------


def _build_group(spec, order_cap: int) -> FiniteGroup:
    if not isinstance(spec, dict):
        raise ParseError("group spec must be an object")
    if "preset" in spec:
        preset = spec["preset"]
        if preset == "dihedral":
            return preset_dihedral(int(spec["q"]), order_cap=order_cap)
        if preset == "elementary_abelian_2":
            return preset_elementary_abelian_2(int(spec["t"]), order_cap=order_cap)
        if preset == "quaternion":
            return preset_quaternion()
        raise ParseError(f"unknown group preset {preset!r}")
    if "generators" in spec:
        perms = [Permutation(tuple(images)) for images in spec["generators"]]
        names = spec.get("names")
        return build_group(perms, names, order_cap=order_cap)
    raise ParseError("group spec needs either 'preset' or 'generators'")


def _resolve_element(group: FiniteGroup, token) -> int:
    if isinstance(token, int):
        return group.check_index(token)
    if isinstance(token, str):
        return element_from_word(group, token)
    raise ParseError(f"element must be a word or index, got {token!r}")


def parse_scenario(
    source: str | Path | Mapping,
    max_order: int | None = None,
) -> ScenarioFile:
    """Load a scenario from a preset reference, JSON text, file path or dict.

    Raises ParseError for malformed documents, UnknownGenerator for bad
    words, and ValidationError wrapping any covering-data failure.  The
    order cap comes from the max_order argument, else the scenario's
    options, else the package default.
    """
    if isinstance(source, Mapping):
        raw = dict(source)
    elif isinstance(source, Path):
        raw = _load_json_text(source.read_text(encoding="utf-8"), str(source))
    elif isinstance(source, str):
        stripped = source.strip()
        if stripped.startswith("{"):
            raw = _load_json_text(stripped, "<text>")
        elif stripped.partition("?")[0] in _PRESETS:
            raw = _resolve_preset(stripped)
        elif Path(stripped).exists():
            raw = _load_json_text(Path(stripped).read_text(encoding="utf-8"), stripped)
        else:
            raise ParseError(
                f"{source!r} is neither a preset reference, a JSON object nor a file"
            )
    else:
        raise ParseError(f"cannot parse scenario from {type(source).__name__}")

    for key in ("group", "action"):
        if key not in raw:
            raise ParseError(f"scenario is missing the {key!r} section")

    options = raw.get("options") or {}
    order_cap = max_order or int(options.get("max_order", 0)) or DEFAULT_ORDER_CAP
    group = _build_group(raw["group"], order_cap)

    action_spec = raw["action"]
    handles = tuple(
        (_resolve_element(group, a), _resolve_element(group, b))
        for a, b in action_spec.get("handles", [])
    )
    vector = tuple(
        _resolve_element(group, token) for token in action_spec.get("vector", [])
    )
    action = CoveringAction(
        group=group,
        orbit_genus=int(action_spec.get("orbit_genus", 0)),
        periods=tuple(int(m) for m in action_spec.get("periods", [])),
        handles=handles,
        branch_elements=vector,
    )
    try:
        certificate = validate_action(action)
    except CoveringError as exc:
        raise ValidationError(f"action data invalid: {exc}") from exc

    collections: dict[str, CollectionSpec] = {}
    for name, body in (raw.get("collections") or {}).items():
        if isinstance(body, dict):
            word_lists = body.get("subgroups", [])
            expect = dict(body.get("expect") or {})
        else:
            word_lists = body
            expect = {}
        subgroups = []
        normalized = []
        for words in word_lists:
            seeds = tuple(_resolve_element(group, w) for w in words)
            subgroups.append(subgroup_generate(group, seeds))
            normalized.append(tuple(str(w) for w in words))
        collections[name] = CollectionSpec(
            name=name,
            word_lists=tuple(normalized),
            subgroups=tuple(subgroups),
            expect=expect,
        )

    overrides = {
        int(k): int(v) for k, v in (options.get("schur_overrides") or {}).items()
    }
    return ScenarioFile(
        name=str(raw.get("name", "scenario")),
        raw=raw,
        group=group,
        action=action,
        genus=certificate.total_genus,
        collections=collections,
        schur_overrides=overrides,
    )


def _load_json_text(text: str, origin: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{origin}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise ParseError(f"{origin}: scenario document must be a JSON object")
    return data


# -- labeling of the dihedral family's rational classes -----------------------------


def dihedral_class_labels(analysis: ActionAnalysis) -> dict[str, int] | None:
    """Map labels V1..V6 to rational-class indices for the d2q family.

    V1 is trivial; V2..V4 are the sign characters identified by their values
    on r and s; V5 carries the primitive 2q-th root on r and V6 the primitive
    q-th root.  Returns None when the group is not a 4q dihedral with the
    six-class structure.
    """
    group = analysis.group
    names = group.generator_names
    if set(names) != {"r", "s"}:
        return None
    r_idx, s_idx = names["r"], names["s"]
    two_q = group.element_order(r_idx)
    if two_q % 2 or group.order != 2 * two_q or group.exponent != two_q:
        return None
    classes = analysis.rational_classes
    if len(classes) != 6:
        return None
    e = group.exponent
    class_of = analysis.table.classes.class_of
    r_cls, s_cls = class_of[r_idx], class_of[s_idx]
    v5_value = Cyclotomic.from_terms({1: 1, -1: 1}, e)
    v6_value = Cyclotomic.from_terms({2: 1, -2: 1}, e)
    labels: dict[str, int] = {}
    for idx, rc in enumerate(classes):
        if rc.is_trivial():
            labels["V1"] = idx
        elif rc.degree == 1:
            try:
                vr = rc.character.values[r_cls].as_integer()
                vs = rc.character.values[s_cls].as_integer()
            except ValueError:
                return None
            key = {(1, -1): "V2", (-1, 1): "V3", (-1, -1): "V4"}.get((vr, vs))
            if key is None:
                return None
            labels[key] = idx
        elif rc.degree == 2:
            member_values = {
                analysis.table.irreducibles[j].values[r_cls]
                for j in rc.member_indices
            }
            if v5_value in member_values:
                labels["V5"] = idx
            elif v6_value in member_values:
                labels["V6"] = idx
    return labels if len(labels) == 6 else None


def class_labels(analysis: ActionAnalysis) -> tuple[str, ...]:
    """Display labels for the rational classes: V-labels for the dihedral
    family, generic W-labels otherwise."""
    named = dihedral_class_labels(analysis)
    if named is not None:
        by_index = {idx: label for label, idx in named.items()}
        return tuple(by_index[i] for i in range(len(analysis.rational_classes)))
    return tuple(f"W{i + 1}" for i in range(len(analysis.rational_classes)))
