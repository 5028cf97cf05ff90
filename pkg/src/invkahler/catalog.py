"""Named fixtures: the four-dimensional solvable families (with rational
parameter slots and their normal-form ranges), the registered complex
structures and compatible-form families, and the witness subspaces used by
the classification suite.

Parameter calibration.  The engine builds metrics literally as
g(x, y) = omega(Jx, y).  Each registered form family is stored with its
wedge combinations globally negated relative to the printed family so that
the user-facing parameters (a12, a13, s, ...) reproduce the published
metric matrices verbatim: for example d4_half's family is
a12 * -(e^12 - e^34), which makes `a12 = 1` give the metric diag(1,1,1,1).
Spans, closedness, compatibility and every classification verdict are
unaffected by this sign choice; it is purely a parameter labeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .complex_structure import AlmostComplexStructure, is_integrable, j_from_images
from .errors import ParamOutOfRange, UnknownName
from .exterior import TwoForm, two_form
from .lie import LieAlgebra, Subspace, new_lie_algebra, span_of_indices
from .scalars import as_scalar

F = Fraction


# -- value types ----------------------------------------------------------------

@dataclass(frozen=True)
class OmegaFamily:
    """Linear family of 2-forms with named coefficients and a side condition."""

    param_names: tuple[str, ...]
    basis: tuple[TwoForm, ...]
    condition: str
    check: Callable[[dict[str, Fraction]], bool]

    def build(self, params: Mapping[str, object]) -> TwoForm:
        values = {name: F(0) for name in self.param_names}
        for key, raw in params.items():
            if key not in values:
                raise ParamOutOfRange(key, raw, f"family parameters are {self.param_names}")
            values[key] = as_scalar(raw)
        if not self.check(values):
            raise ParamOutOfRange("omega", dict(params), self.condition)
        total = self.basis[0].scale(values[self.param_names[0]])
        for name, form in zip(self.param_names[1:], self.basis[1:]):
            total = total.add(form.scale(values[name]))
        return total


@dataclass(frozen=True)
class WitnessData:
    """Distinguished subspaces attached to a (algebra, J) row."""

    lagrangian_ideal: Subspace | None = None
    witness_params: tuple[tuple[str, Fraction], ...] = ()
    walker_planes: tuple[Subspace, ...] = ()
    orthogonal_model_ideal: Subspace | None = None


@dataclass(frozen=True)
class RegisteredStructure:
    j_id: str
    j: AlmostComplexStructure
    family: OmegaFamily | None = None
    witness: WitnessData | None = None
    integrable_expected: bool = True


@dataclass(frozen=True)
class ParamSpec:
    name: str
    admissible: str


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    params: tuple[tuple[str, Fraction], ...]
    algebra: LieAlgebra
    structures: tuple[RegisteredStructure, ...]

    def structure(self, j_id: str) -> RegisteredStructure:
        for s in self.structures:
            if s.j_id == j_id:
                return s
        raise UnknownName(f"no registered complex structure {j_id!r} on {self.name}")

    @property
    def structure_ids(self) -> tuple[str, ...]:
        return tuple(s.j_id for s in self.structures)


@dataclass(frozen=True)
class _EntryDef:
    name: str
    kind: str
    param_specs: tuple[ParamSpec, ...]
    brackets: Callable[[dict[str, Fraction]], list]
    validate: Callable[[dict[str, Fraction]], None]
    structures: Callable[[dict[str, Fraction]], tuple[RegisteredStructure, ...]]


# -- form families (calibrated to the published parameter names) ------------------

def _nonzero(*names: str) -> Callable[[dict[str, Fraction]], bool]:
    def check(values: dict[str, Fraction]) -> bool:
        prod = F(1)
        for n in names:
            prod *= values[n]
        return prod != 0

    return check


def _not_both_zero(n1: str, n2: str) -> Callable[[dict[str, Fraction]], bool]:
    return lambda values: values[n1] != 0 or values[n2] != 0


FAMILY_RH3 = OmegaFamily(
    ("a12", "a13", "a14"),
    (
        two_form(4, [(1, 2, -1)]),
        two_form(4, [(1, 3, -1), (2, 4, -1)]),
        two_form(4, [(1, 4, -1), (2, 3, 1)]),
    ),
    "a13^2 + a14^2 != 0",
    _not_both_zero("a13", "a14"),
)

FAMILY_R2XAFFR = OmegaFamily(
    ("a12", "a34"),
    (two_form(4, [(1, 2, -1)]), two_form(4, [(3, 4, -1)])),
    "a12 * a34 != 0",
    _nonzero("a12", "a34"),
)

FAMILY_RXE2 = OmegaFamily(
    ("a14", "a23"),
    (two_form(4, [(1, 4, -1)]), two_form(4, [(2, 3, -1)])),
    "a14 * a23 != 0",
    _nonzero("a14", "a23"),
)

FAMILY_R2R2 = FAMILY_R2XAFFR

FAMILY_AFFC_J1 = OmegaFamily(
    ("a13", "a14"),
    (
        two_form(4, [(1, 3, -1), (2, 4, 1)]),
        two_form(4, [(1, 4, -1), (2, 3, -1)]),
    ),
    "a13^2 + a14^2 != 0",
    _not_both_zero("a13", "a14"),
)

FAMILY_AFFC_J2 = OmegaFamily(
    ("s", "a13", "a14"),
    (
        two_form(4, [(1, 2, -1)]),
        two_form(4, [(1, 3, -1), (2, 4, 1)]),
        two_form(4, [(1, 4, -1), (2, 3, -1)]),
    ),
    "a13^2 + a14^2 != 0",
    _not_both_zero("a13", "a14"),
)

FAMILY_R4M1M1 = OmegaFamily(
    ("s", "a12", "a13"),
    (
        two_form(4, [(1, 4, -1)]),
        two_form(4, [(1, 2, -1), (3, 4, -1)]),
        two_form(4, [(1, 3, -1), (2, 4, 1)]),
    ),
    "a12^2 + a13^2 != 0",
    _not_both_zero("a12", "a13"),
)

FAMILY_R4P_J1 = OmegaFamily(
    ("a14", "a23"),
    (two_form(4, [(1, 4, -1)]), two_form(4, [(2, 3, -1)])),
    "a14 * a23 != 0",
    _nonzero("a14", "a23"),
)

FAMILY_R4P_J2 = OmegaFamily(
    ("a14", "a23"),
    (two_form(4, [(1, 4, 1)]), two_form(4, [(2, 3, 1)])),
    "a14 * a23 != 0",
    _nonzero("a14", "a23"),
)

FAMILY_D41 = OmegaFamily(
    ("a12", "a14"),
    (two_form(4, [(1, 2, -1), (3, 4, 1)]), two_form(4, [(1, 4, -1)])),
    "a12 != 0",
    lambda values: values["a12"] != 0,
)

FAMILY_D42_J1 = OmegaFamily(
    ("s", "a14"),
    (two_form(4, [(2, 4, -1)]), two_form(4, [(1, 4, -1), (2, 3, -1)])),
    "a14 != 0",
    lambda values: values["a14"] != 0,
)

FAMILY_D42_J2 = OmegaFamily(
    ("a14", "a23"),
    (two_form(4, [(1, 4, -1)]), two_form(4, [(2, 3, -1)])),
    "a14 * a23 != 0",
    _nonzero("a14", "a23"),
)

FAMILY_D4HALF = OmegaFamily(
    ("a12",),
    (two_form(4, [(1, 2, -1), (3, 4, 1)]),),
    "a12 != 0",
    lambda values: values["a12"] != 0,
)


def _family_d4p(delta: Fraction) -> OmegaFamily:
    return OmegaFamily(
        ("a12",),
        (two_form(4, [(1, 2, -1), (3, 4, delta)]),),
        "a12 != 0",
        lambda values: values["a12"] != 0,
    )


FAMILY_R4_STANDARD = OmegaFamily(
    ("a12", "a34"),
    (two_form(4, [(1, 2, -1)]), two_form(4, [(3, 4, -1)])),
    "a12 * a34 != 0",
    _nonzero("a12", "a34"),
)


# -- complex structures -------------------------------------------------------------

J_PAIR_12_34 = j_from_images(4, {1: [(2, 1)], 3: [(4, 1)]})  # e1->e2, e3->e4
J_RXE2 = j_from_images(4, {1: [(4, 1)], 2: [(3, 1)]})
J_AFFC_1 = j_from_images(4, {1: [(3, 1)], 2: [(4, 1)]})
J_AFFC_2 = j_from_images(4, {1: [(2, -1)], 3: [(4, 1)]})
J_AFFC_C = J_PAIR_12_34  # the complex-bracket structure of Remark on aff(C)
J_R4M1M1 = j_from_images(4, {4: [(1, 1)], 2: [(3, 1)]})
J_R4P_1 = j_from_images(4, {4: [(1, 1)], 2: [(3, 1)]})
J_R4P_2 = j_from_images(4, {4: [(1, 1)], 2: [(3, -1)]})
J_D41 = j_from_images(4, {1: [(4, 1)], 2: [(3, 1)]})
J_D42_1 = j_from_images(4, {1: [(3, 1)], 2: [(4, 1)]})
J_D42_2 = j_from_images(4, {4: [(1, -2)], 2: [(3, 1)]})
J_D4HALF_1 = j_from_images(4, {4: [(3, 1)], 1: [(2, 1)]})
J_D4HALF_2 = j_from_images(4, {4: [(3, 1)], 1: [(2, -1)]})
J_D4P_1 = j_from_images(4, {1: [(2, 1)], 4: [(3, 1)]})
J_D4P_2 = j_from_images(4, {1: [(2, 1)], 4: [(3, -1)]})
J_D4P_3 = j_from_images(4, {1: [(2, -1)], 4: [(3, -1)]})
J_D4P_4 = j_from_images(4, {1: [(2, -1)], 4: [(3, 1)]})
J_N4_1 = j_from_images(4, {4: [(1, 1)], 2: [(3, 1)]})
J_N4_2 = j_from_images(4, {1: [(2, 1)], 3: [(4, 1)]})
J_H4 = j_from_images(4, {1: [(3, -2)], 2: [(4, 1)]})


def _j_d4_lambda_generic(lam: Fraction) -> AlmostComplexStructure:
    # J e1 = e3/(lam-1), J e2 = e4; integrable for every lam != 1
    return j_from_images(4, {1: [(3, F(1) / (lam - 1))], 2: [(4, 1)]})


# -- witnesses -----------------------------------------------------------------------

def _w(params: Iterable[tuple[str, object]]) -> tuple[tuple[str, Fraction], ...]:
    return tuple((k, as_scalar(v)) for k, v in params)


WITNESS_RH3 = WitnessData(
    lagrangian_ideal=span_of_indices(4, (2, 3)),
    witness_params=_w([("a12", 0), ("a13", 0), ("a14", 1)]),
    walker_planes=(span_of_indices(4, (2, 3)),),
)

WITNESS_R4M1M1 = WitnessData(
    lagrangian_ideal=span_of_indices(4, (1, 3)),
    witness_params=_w([("s", 0), ("a12", 0), ("a13", 1)]),
    walker_planes=(span_of_indices(4, (1, 3)), span_of_indices(4, (2, 3))),
)

WITNESS_D42_J1 = WitnessData(
    lagrangian_ideal=span_of_indices(4, (2, 3)),
    witness_params=_w([("s", 0), ("a14", 1)]),
    walker_planes=(span_of_indices(4, (2, 3)), span_of_indices(4, (1, 3))),
)

WITNESS_AFFC_J2 = WitnessData(
    walker_planes=(span_of_indices(4, (3, 4)),),
)

WITNESS_R2R2 = WitnessData(
    lagrangian_ideal=span_of_indices(4, (2, 4)),
)

WITNESS_R2XAFFR = WitnessData(
    orthogonal_model_ideal=span_of_indices(4, (1, 2)),
)

WITNESS_RXE2 = WitnessData(
    orthogonal_model_ideal=span_of_indices(4, (2, 3)),
)

WITNESS_R4P = WitnessData(
    orthogonal_model_ideal=span_of_indices(4, (2, 3)),
)


# -- entry definitions -----------------------------------------------------------------

def _no_params(params: dict[str, Fraction]) -> None:
    return None


def _structures_rh3(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J", J_PAIR_12_34, FAMILY_RH3, WITNESS_RH3),)


def _structures_r2xaffr(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J", J_PAIR_12_34, FAMILY_R2XAFFR, WITNESS_R2XAFFR),)


def _structures_rxe2(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J", J_RXE2, FAMILY_RXE2, WITNESS_RXE2),)


def _structures_r2r2(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J", J_PAIR_12_34, FAMILY_R2R2, WITNESS_R2R2),)


def _structures_affc(_: dict) -> tuple[RegisteredStructure, ...]:
    return (
        RegisteredStructure("J1", J_AFFC_1, FAMILY_AFFC_J1),
        RegisteredStructure("J2", J_AFFC_2, FAMILY_AFFC_J2, WITNESS_AFFC_J2),
        RegisteredStructure("Jc", J_AFFC_C, None),
    )


def _structures_r4ab(params: dict) -> tuple[RegisteredStructure, ...]:
    if params.get("alpha") == F(-1) and params.get("beta") == F(-1):
        return (RegisteredStructure("J", J_R4M1M1, FAMILY_R4M1M1, WITNESS_R4M1M1),)
    return ()


def _structures_r4p(params: dict) -> tuple[RegisteredStructure, ...]:
    if params.get("gamma") == 0:
        return (
            RegisteredStructure("J1", J_R4P_1, FAMILY_R4P_J1, WITNESS_R4P),
            RegisteredStructure("J2", J_R4P_2, FAMILY_R4P_J2, WITNESS_R4P),
        )
    return ()


def _structures_d4_lambda(params: dict) -> tuple[RegisteredStructure, ...]:
    lam = params["lambda"]
    if lam == F(1, 2):
        return (
            RegisteredStructure("J1", J_D4HALF_1, FAMILY_D4HALF),
            RegisteredStructure("J2", J_D4HALF_2, FAMILY_D4HALF),
        )
    if lam == 1:
        return (RegisteredStructure("J", J_D41, FAMILY_D41),)
    if lam == 2:
        return (
            RegisteredStructure("J1", J_D42_1, FAMILY_D42_J1, WITNESS_D42_J1),
            RegisteredStructure("J2", J_D42_2, FAMILY_D42_J2),
        )
    return (RegisteredStructure("J1", _j_d4_lambda_generic(lam), None),)


def _structures_d4p(params: dict) -> tuple[RegisteredStructure, ...]:
    delta = params["delta"]
    if delta == 0:
        return ()
    family = _family_d4p(delta)
    return (
        RegisteredStructure("J1", J_D4P_1, family),
        RegisteredStructure("J2", J_D4P_2, family),
        RegisteredStructure("J3", J_D4P_3, family),
        RegisteredStructure("J4", J_D4P_4, family),
    )


def _structures_n4(_: dict) -> tuple[RegisteredStructure, ...]:
    return (
        RegisteredStructure("J1", J_N4_1, None, integrable_expected=False),
        RegisteredStructure("J2", J_N4_2, None, integrable_expected=False),
    )


def _structures_h4(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J1", J_H4, None),)


def _structures_abelian(_: dict) -> tuple[RegisteredStructure, ...]:
    return (RegisteredStructure("J", J_PAIR_12_34, FAMILY_R4_STANDARD),)


def _none_structures(_: dict) -> tuple[RegisteredStructure, ...]:
    return ()


def _check_rr3_lambda(params: dict[str, Fraction]) -> None:
    lam = params["lambda"]
    if not (F(-1) <= lam <= F(1)):
        raise ParamOutOfRange("lambda", lam, "lambda in [-1, 1]")


def _check_rr3p(params: dict[str, Fraction]) -> None:
    if params["gamma"] < 0:
        raise ParamOutOfRange("gamma", params["gamma"], "gamma >= 0")


def _check_r4ab(params: dict[str, Fraction]) -> None:
    a, b = params["alpha"], params["beta"]
    first = (F(-1) < a <= b <= F(1)) and a * b != 0
    second = (a == F(-1)) and (a <= b <= 0)
    if not (first or second):
        raise ParamOutOfRange(
            "alpha,beta", (a, b), "-1 < alpha <= beta <= 1 with alpha*beta != 0, or -1 = alpha <= beta <= 0"
        )


def _check_r4p(params: dict[str, Fraction]) -> None:
    if params["delta"] <= 0:
        raise ParamOutOfRange("delta", params["delta"], "delta > 0")


def _check_d4_lambda(params: dict[str, Fraction]) -> None:
    if params["lambda"] < F(1, 2):
        raise ParamOutOfRange("lambda", params["lambda"], "lambda >= 1/2")


def _check_d4p(params: dict[str, Fraction]) -> None:
    if params["delta"] < 0:
        raise ParamOutOfRange("delta", params["delta"], "delta >= 0")


_DEFS: dict[str, _EntryDef] = {}


def _define(
    name: str,
    kind: str,
    param_specs: tuple[ParamSpec, ...],
    brackets: Callable[[dict[str, Fraction]], list],
    structures: Callable[[dict[str, Fraction]], tuple[RegisteredStructure, ...]] = _none_structures,
    validate: Callable[[dict[str, Fraction]], None] = _no_params,
) -> None:
    _DEFS[name] = _EntryDef(name, kind, param_specs, brackets, validate, structures)


_define("rh3", "family", (), lambda p: [(1, 2, 3, 1)], _structures_rh3)
_define(
    "rr3",
    "family",
    (),
    lambda p: [(1, 2, 2, 1), (1, 3, 2, 1), (1, 3, 3, 1)],
)
_define(
    "rr3_lambda",
    "family",
    (ParamSpec("lambda", "lambda in [-1, 1]"),),
    lambda p: [(1, 2, 2, 1), (1, 3, 3, p["lambda"])],
    lambda p: _structures_r2xaffr(p) if p["lambda"] == 0 else (),
    _check_rr3_lambda,
)
_define(
    "rr3p_gamma",
    "family",
    (ParamSpec("gamma", "gamma >= 0"),),
    lambda p: [(1, 2, 2, p["gamma"]), (1, 2, 3, -1), (1, 3, 2, 1), (1, 3, 3, p["gamma"])],
    lambda p: _structures_rxe2(p) if p["gamma"] == 0 else (),
    _check_rr3p,
)
_define("r2r2", "family", (), lambda p: [(1, 2, 2, 1), (3, 4, 4, 1)], _structures_r2r2)
_define(
    "aff_C",
    "family",
    (),
    lambda p: [(1, 3, 3, 1), (1, 4, 4, 1), (2, 3, 4, 1), (2, 4, 3, -1)],
    _structures_affc,
)
_define("n4", "family", (), lambda p: [(1, 4, 2, -1), (2, 4, 3, -1)], _structures_n4)
_define(
    "r4",
    "family",
    (),
    lambda p: [(1, 4, 1, -1), (2, 4, 1, -1), (2, 4, 2, -1), (3, 4, 2, -1), (3, 4, 3, -1)],
)
_define(
    "r4_mu",
    "family",
    (ParamSpec("mu", "mu real"),),
    lambda p: [(1, 4, 1, -1), (2, 4, 2, -p["mu"]), (3, 4, 2, -1), (3, 4, 3, -p["mu"])],
)
_define(
    "r4_ab",
    "family",
    (ParamSpec("alpha", "see normal form"), ParamSpec("beta", "see normal form")),
    lambda p: [(1, 4, 1, -1), (2, 4, 2, -p["alpha"]), (3, 4, 3, -p["beta"])],
    _structures_r4ab,
    _check_r4ab,
)
_define(
    "r4p_gd",
    "family",
    (ParamSpec("gamma", "gamma real"), ParamSpec("delta", "delta > 0")),
    lambda p: [
        (1, 4, 1, -1),
        (2, 4, 2, -p["gamma"]),
        (2, 4, 3, p["delta"]),
        (3, 4, 2, -p["delta"]),
        (3, 4, 3, -p["gamma"]),
    ],
    _structures_r4p,
    _check_r4p,
)
_define(
    "d4",
    "family",
    (),
    lambda p: [(1, 2, 3, 1), (1, 4, 1, -1), (2, 4, 2, 1)],
)
_define(
    "d4_lambda",
    "family",
    (ParamSpec("lambda", "lambda >= 1/2"),),
    lambda p: [
        (1, 2, 3, 1),
        (3, 4, 3, -1),
        (1, 4, 1, -p["lambda"]),
        (2, 4, 2, -(1 - p["lambda"])),
    ],
    _structures_d4_lambda,
    _check_d4_lambda,
)
_define(
    "d4p_delta",
    "family",
    (ParamSpec("delta", "delta >= 0"),),
    lambda p: [
        (1, 2, 3, 1),
        (1, 4, 1, -p["delta"] / 2),
        (1, 4, 2, 1),
        (2, 4, 1, -1),
        (2, 4, 2, -p["delta"] / 2),
        (3, 4, 3, -p["delta"]),
    ],
    _structures_d4p,
    _check_d4p,
)
_define(
    "h4",
    "family",
    (),
    lambda p: [(1, 2, 3, 1), (3, 4, 3, -1), (1, 4, 1, F(-1, 2)), (2, 4, 1, -1), (2, 4, 2, F(-1, 2))],
    _structures_h4,
)
_define("rxe2", "family", (), lambda p: [(1, 2, 3, -1), (1, 3, 2, 1)], _structures_rxe2)
_define("r2xaffr", "family", (), lambda p: [(1, 2, 2, 1)], _structures_r2xaffr)
_define("R4_abelian", "abelian", (), lambda p: [], _structures_abelian)


ALIASES: dict[str, tuple[str, dict[str, Fraction]]] = {
    "rxh3": ("rh3", {}),
    "affC": ("aff_C", {}),
    "r2p": ("aff_C", {}),
    "affR2": ("r2r2", {}),
    "aff_R_aff_R": ("r2r2", {}),
    "rr3_0": ("r2xaffr", {}),
    "rr3p_0": ("rxe2", {}),
    "r4_abc": ("r4_ab", {}),
    "r4_alpha_beta": ("r4_ab", {}),
    "r4_m1m1": ("r4_ab", {"alpha": F(-1), "beta": F(-1)}),
    "r4p_0_delta": ("r4p_gd", {"gamma": F(0)}),
    "r4_prime_gamma_delta": ("r4p_gd", {}),
    "d4_1": ("d4_lambda", {"lambda": F(1)}),
    "d4_2": ("d4_lambda", {"lambda": F(2)}),
    "d4_half": ("d4_lambda", {"lambda": F(1, 2)}),
    "d4_prime_delta": ("d4p_delta", {}),
    "r4_abelian": ("R4_abelian", {}),
}

BUILDER_HOOKS = ("aff_A_builder",)

# entries built by affine.register_built at runtime, keyed "aff:<hash>"
_DYNAMIC: dict[str, CatalogEntry] = {}


def register_dynamic(entry: CatalogEntry) -> None:
    _DYNAMIC[entry.name] = entry


def dynamic_names() -> tuple[str, ...]:
    return tuple(sorted(_DYNAMIC))


def resolve(name: str) -> tuple[str, dict[str, Fraction]]:
    """Canonical (name, preset params) for a catalog name or alias."""
    if name in _DEFS or name in _DYNAMIC:
        return name, {}
    if name in ALIASES:
        target, preset = ALIASES[name]
        return target, dict(preset)
    raise UnknownName(f"unknown catalog name: {name!r}")


def get(name: str, params: Mapping[str, object] | None = None) -> CatalogEntry:
    """Build a catalog entry; parameters are validated against the normal-form
    ranges and every registered structure is revalidated on construction."""
    params = dict(params or {})
    if name in BUILDER_HOOKS:
        raise UnknownName(
            f"{name} is a builder hook, not a fixed entry; use `aff build` or invkahler.affine"
        )
    canonical, values = resolve(name)
    if canonical in _DYNAMIC:
        if params:
            raise ParamOutOfRange("params", params, "built entries take no parameters")
        return _DYNAMIC[canonical]
    definition = _DEFS[canonical]
    for key, raw in params.items():
        if key in values:
            raise ParamOutOfRange(key, raw, f"parameter preset by alias {name!r}")
        values[key] = as_scalar(raw)
    expected = {spec.name for spec in definition.param_specs}
    missing = expected - set(values)
    extra = set(values) - expected
    if missing:
        raise ParamOutOfRange(sorted(missing)[0], None, "parameter required")
    if extra:
        raise ParamOutOfRange(sorted(extra)[0], values[sorted(extra)[0]], "unknown parameter")
    definition.validate(values)
    algebra = new_lie_algebra(4, definition.brackets(values))
    structures = definition.structures(values)
    for s in structures:
        if is_integrable(algebra, s.j) != s.integrable_expected:
            raise AssertionError(
                f"registered structure {canonical}/{s.j_id} integrability mismatch"
            )
    return CatalogEntry(
        canonical,
        definition.kind,
        tuple(sorted(values.items())),
        algebra,
        structures,
    )


@dataclass(frozen=True)
class ListingRow:
    name: str
    kind: str
    params: tuple[ParamSpec, ...]
    aliases: tuple[str, ...]


def list_entries() -> list[ListingRow]:
    """Stable listing of all registered names, builder hooks included."""
    rows = []
    alias_map: dict[str, list[str]] = {}
    for alias, (target, preset) in ALIASES.items():
        if not preset:
            alias_map.setdefault(target, []).append(alias)
    for name in sorted(_DEFS):
        d = _DEFS[name]
        rows.append(ListingRow(name, d.kind, d.param_specs, tuple(sorted(alias_map.get(name, [])))))
    for name in dynamic_names():
        rows.append(ListingRow(name, "built", (), ()))
    for name in BUILDER_HOOKS:
        rows.append(ListingRow(name, "builder", (), ()))
    return rows
