"""
Holomorphic Function Operations
BC-holomorphic functions F(zeta) = f1(zeta1) e1 + f2(zeta2) e2 over product regions,
their derivatives, and the hyperbolic decomposition F = H-Re[F] + i H-Im[F].
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional, Tuple, Union

import numpy as np

from models.bicomplex import Bicomplex, Hyperbolic
from models.errors import ComponentMismatch, NonAnalytic, OutOfDomain, UnknownVariable
from models.region import Rectangle, Region
from operations.expression_operations import (
    DEFAULT_STEP,
    ExprAst,
    eval_complex,
    eval_real,
    eval_step_derivative,
    free_variables,
    non_analytic_calls,
    parse,
    to_source,
)
from utils.logger import console_debug

MODULE = "HolomorphicOps"

CENTRAL_DIFFERENCE_H = 1e-6

PlanarEvaluator = Callable[[np.ndarray, np.ndarray], np.ndarray]
ComplexEvaluator = Callable[[complex], complex]


class Part(Enum):
    RE = "Re"
    IM = "Im"


@dataclass(frozen=True)
class BCHoloFn:
    """Idempotent pair of holomorphic expressions in the variable z."""

    f1: ExprAst
    f2: ExprAst
    domain: Region = field(default_factory=Region)

    def __post_init__(self):
        for label, ast in (("f1", self.f1), ("f2", self.f2)):
            extra = free_variables(ast) - {"z"}
            if extra:
                raise UnknownVariable(f"{label} may only use z, found {sorted(extra)}")
            bad = non_analytic_calls(ast)
            if bad:
                raise NonAnalytic(f"{label} = {to_source(ast)!r} uses non-analytic {sorted(bad)}")

    @classmethod
    def from_text(cls, f1: str, f2: str, domain: Optional[Region] = None) -> "BCHoloFn":
        return cls(parse(f1, {"z"}), parse(f2, {"z"}), domain or Region())

    def component(self, index: int) -> ExprAst:
        return self.f1 if index == 1 else self.f2

    def evaluate_component(self, index: int, z):
        """Vectorised f_index(z) with a domain check on every point."""
        rectangle = self.domain.component(index)
        z = np.asarray(z, dtype=np.complex128)
        if not rectangle.contains(np.real(z), np.imag(z)):
            raise OutOfDomain(f"point(s) outside Omega{index} {rectangle}")
        return eval_complex(self.component(index), {"z": z})

    def describe(self) -> dict:
        return {"f1": to_source(self.f1), "f2": to_source(self.f2)}


@dataclass(frozen=True)
class HyperbolicFnPair:
    """Real planar maps u1(x1, y1) and u2(x2, y2), each living on its own rectangle."""

    u1: PlanarEvaluator
    u2: PlanarEvaluator
    domain: Region = field(default_factory=Region)
    label: str = ""

    @classmethod
    def from_text(cls, u1: str, u2: str, domain: Optional[Region] = None) -> "HyperbolicFnPair":
        ast1, ast2 = parse(u1, {"x", "y"}), parse(u2, {"x", "y"})
        return cls(
            lambda x, y: eval_real(ast1, {"x": x, "y": y}),
            lambda x, y: eval_real(ast2, {"x": x, "y": y}),
            domain or Region(),
            f"({to_source(ast1)}, {to_source(ast2)})",
        )

    @classmethod
    def constant(cls, c1: float, c2: float, domain: Optional[Region] = None) -> "HyperbolicFnPair":
        return cls(
            lambda x, y: np.full(np.shape(x), float(c1)) if np.ndim(x) else float(c1),
            lambda x, y: np.full(np.shape(x), float(c2)) if np.ndim(x) else float(c2),
            domain or Region(),
            f"({c1}, {c2})",
        )

    def component(self, index: int) -> PlanarEvaluator:
        return self.u1 if index == 1 else self.u2

    def rectangle(self, index: int) -> Rectangle:
        return self.domain.component(index)

    def evaluate(self, index: int, x, y):
        rectangle = self.rectangle(index)
        if not rectangle.contains(np.asarray(x), np.asarray(y)):
            raise OutOfDomain(f"point(s) outside Omega{index} {rectangle}")
        values = self.component(index)(x, y)
        if np.ndim(x) == 0 and np.ndim(y) == 0:
            return float(values)
        return np.broadcast_to(np.asarray(values, dtype=float), np.broadcast(x, y).shape).copy()

    def __call__(self, zeta: Bicomplex) -> Hyperbolic:
        return Hyperbolic(
            self.evaluate(1, zeta.zeta1.real, zeta.zeta1.imag),
            self.evaluate(2, zeta.zeta2.real, zeta.zeta2.imag),
        )


class HolomorphicOperations:
    """Evaluation, differentiation and decomposition of BC-holomorphic functions."""

    def __init__(self):
        self.agent_name = MODULE

    def eval_holo(self, F: BCHoloFn, zeta: Bicomplex) -> Bicomplex:
        """F(zeta) = f1(zeta1) e1 + f2(zeta2) e2."""
        F.domain.require(zeta)
        value = Bicomplex(
            eval_complex(F.f1, {"z": zeta.zeta1}),
            eval_complex(F.f2, {"z": zeta.zeta2}),
        )
        console_debug(f"F({zeta}) = {value}", self.agent_name)
        return value

    def derivative(self, F: BCHoloFn, zeta: Bicomplex, h: float = DEFAULT_STEP) -> Bicomplex:
        """F'(zeta) = f1'(zeta1) e1 + f2'(zeta2) e2 by the bicomplex step."""
        F.domain.require(zeta)
        return Bicomplex(
            eval_step_derivative(F.f1, "z", zeta.zeta1, h),
            eval_step_derivative(F.f2, "z", zeta.zeta2, h),
        )

    def central_difference_derivative(self, F: BCHoloFn, zeta: Bicomplex, h: float = CENTRAL_DIFFERENCE_H) -> Bicomplex:
        """Componentwise (f(z + h) - f(z - h)) / 2h along the real axis."""
        F.domain.require(zeta)
        components = []
        for index, z in ((1, zeta.zeta1), (2, zeta.zeta2)):
            ahead = F.evaluate_component(index, z + h)
            behind = F.evaluate_component(index, z - h)
            components.append((ahead - behind) / (2 * h))
        return Bicomplex(*components)

    def derivative_cross_check(self, F: BCHoloFn, zeta: Bicomplex, h: float = CENTRAL_DIFFERENCE_H) -> Hyperbolic:
        """Relative gap per component between the step derivative and central differences."""
        step = self.derivative(F, zeta)
        central = self.central_difference_derivative(F, zeta, h)
        gaps = []
        for exact, approx in ((step.zeta1, central.zeta1), (step.zeta2, central.zeta2)):
            gaps.append(abs(exact - approx) / max(1.0, abs(exact)))
        return Hyperbolic(*gaps)

    def _component_values(self, F: Union[BCHoloFn, Tuple[ComplexEvaluator, ComplexEvaluator]], zeta: Bicomplex):
        if isinstance(F, BCHoloFn):
            value = self.eval_holo(F, zeta)
            return value.zeta1, value.zeta2
        f1, f2 = F
        return complex(f1(zeta.zeta1)), complex(f2(zeta.zeta2))

    def hyperbolic_decompose(self, F, zeta: Bicomplex) -> Tuple[Hyperbolic, Hyperbolic]:
        """
        Split F(zeta) into H-Re and H-Im.

        F may be a BCHoloFn or a raw pair of complex callables (f1, f2).
        """
        w1, w2 = self._component_values(F, zeta)
        return Hyperbolic(w1.real, w2.real), Hyperbolic(w1.imag, w2.imag)

    def as_hyperbolic_fn(self, F: BCHoloFn, part: Part) -> HyperbolicFnPair:
        """H-Re[F] or H-Im[F] as planar evaluators over F's region."""
        project = np.real if part is Part.RE else np.imag

        def component(index: int) -> PlanarEvaluator:
            def evaluator(x, y):
                z = np.asarray(x, dtype=float) + 1j * np.asarray(y, dtype=float)
                return project(F.evaluate_component(index, z))

            return evaluator

        return HyperbolicFnPair(
            component(1),
            component(2),
            F.domain,
            f"H-{part.value}[({to_source(F.f1)}, {to_source(F.f2)})]",
        )

    def reduce_to_complex(self, F: BCHoloFn, z: complex) -> complex:
        """Evaluate F at a complex input when both components carry the same function."""
        if F.f1 != F.f2:
            raise ComponentMismatch(
                f"complex reduction needs f1 == f2, got {to_source(F.f1)!r} and {to_source(F.f2)!r}"
            )
        z = complex(z)
        result = eval_complex(F.f1, {"z": z})
        through_bicomplex = self.eval_holo(F, Bicomplex.from_complex(z))
        if not (through_bicomplex.zeta1 == result and through_bicomplex.zeta2 == result):
            raise ComponentMismatch(f"idempotent components disagree at {z}: {through_bicomplex}")
        return result


# Singleton instance
holomorphic_operations = HolomorphicOperations()
