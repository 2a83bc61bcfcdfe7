"""
Expression Operations
A small expression language used to define complex functions f(z), planar real
functions u(x, y) and boundary functions u(t) from CLI flags and config files.

Grammar (see docs/EXPRESSION_GRAMMAR.md):

    expression := term { ("+" | "-") term }
    term       := unary { ("*" | "/") unary }
    unary      := ("-" | "+") unary | power
    power      := atom [ "^" unary ]
    atom       := NUMBER | IMAG_NUMBER | NAME | NAME "(" expression { "," expression } ")"
                | "(" expression ")"

Evaluation is numpy-vectorised: bindings may be scalars or arrays.
"""

import math
import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from models.bicomplex import Bicomplex, format_real, from_standard
from models.errors import (
    EvalDomain,
    ExpressionSyntaxError,
    InvalidArgument,
    NonAnalytic,
    UnboundedData,
    UnknownFunction,
    UnknownVariable,
)
from utils.logger import console_debug

MODULE = "ExpressionOps"

REAL_TOLERANCE = 1e-12
DEFAULT_STEP = 1e-20


# AST

@dataclass(frozen=True)
class Constant:
    value: complex


@dataclass(frozen=True)
class Variable:
    name: str


@dataclass(frozen=True)
class BinaryOp:
    op: str  # one of + - * / ^
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Negate:
    operand: "ExprAst"


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["ExprAst", ...]


ExprAst = Union[Constant, Variable, BinaryOp, Negate, Call]

FUNCTION_ARITY: Dict[str, int] = {
    "sin": 1,
    "cos": 1,
    "exp": 1,
    "log": 1,
    "sqrt": 1,
    "atan": 1,
    "abs": 1,
    "re": 1,
    "im": 1,
    "step": 1,
    "conj": 1,
}
NON_ANALYTIC_FUNCTIONS = frozenset({"abs", "re", "im", "step", "conj"})
CONSTANTS: Dict[str, complex] = {"i": 1j, "pi": complex(math.pi)}


# Tokenizer

_TOKEN_REGEXP = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)(?P<imag>i(?![A-Za-z0-9_]))?
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<op>[-+*/^(),|\[\]])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # number, imag, name, op, end
    text: str
    offset: int
    value: Optional[complex] = None


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode("utf-8"))


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    index = 0
    while index < len(source):
        match = _TOKEN_REGEXP.match(source, index)
        if match is None:
            raise ExpressionSyntaxError(
                f"unexpected character {source[index]!r}", _byte_offset(source, index), source
            )
        offset = _byte_offset(source, index)
        if match.group("number") is not None:
            magnitude = float(match.group("number"))
            if match.group("imag"):
                tokens.append(Token("imag", match.group(0), offset, complex(0.0, magnitude)))
            else:
                tokens.append(Token("number", match.group(0), offset, complex(magnitude)))
        elif match.group("name") is not None:
            tokens.append(Token("name", match.group("name"), offset))
        elif match.group("op") is not None:
            tokens.append(Token("op", match.group("op"), offset))
        index = match.end()
    tokens.append(Token("end", "", _byte_offset(source, len(source))))
    return tokens


# Parser

class _Parser:
    def __init__(self, source: str, variables: FrozenSet[str]):
        self.source = source
        self.variables = variables
        self.tokens = tokenize(source)
        self.position = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.tokens[self.position]
        self.position += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None):
        token = token or self.current
        return ExpressionSyntaxError(message, token.offset, self.source)

    def _accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.position += 1
            return True
        return False

    def _expect(self, text: str):
        if not self._accept(text):
            shown = self.current.text or "end of input"
            raise self._error(f"expected {text!r}, found {shown!r}")

    def parse(self) -> ExprAst:
        node = self._expression()
        if self.current.kind != "end":
            raise self._error(f"unexpected {self.current.text!r}")
        return node

    def _expression(self) -> ExprAst:
        node = self._term()
        while self.current.kind == "op" and self.current.text in "+-":
            op = self._advance().text
            node = BinaryOp(op, node, self._term())
        return node

    def _term(self) -> ExprAst:
        node = self._unary()
        while self.current.kind == "op" and self.current.text in "*/":
            op = self._advance().text
            node = BinaryOp(op, node, self._unary())
        return node

    def _unary(self) -> ExprAst:
        if self._accept("-"):
            operand = self._unary()
            # a negated literal is a negative constant
            if isinstance(operand, Constant):
                return Constant(-operand.value)
            return Negate(operand)
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> ExprAst:
        base = self._atom()
        if self._accept("^"):
            return BinaryOp("^", base, self._unary())
        return base

    def _atom(self) -> ExprAst:
        token = self.current
        if token.kind in ("number", "imag"):
            self._advance()
            return Constant(token.value)
        if token.kind == "name":
            self._advance()
            if self.current.kind == "op" and self.current.text == "(":
                return self._call(token)
            if token.text in self.variables:
                return Variable(token.text)
            if token.text in CONSTANTS:
                return Constant(CONSTANTS[token.text])
            if token.text in FUNCTION_ARITY:
                raise self._error(f"function {token.text!r} must be followed by '('")
            raise UnknownVariable(
                f"unknown variable {token.text!r} at offset {token.offset}; declared: {sorted(self.variables)}"
            )
        if self._accept("("):
            node = self._expression()
            self._expect(")")
            return node
        shown = token.text or "end of input"
        raise self._error(f"unexpected {shown!r}")

    def _call(self, name_token: Token) -> ExprAst:
        name = name_token.text
        if name not in FUNCTION_ARITY:
            raise UnknownFunction(f"unknown function {name!r} at offset {name_token.offset}")
        self._expect("(")
        args = [self._expression()]
        while self._accept(","):
            args.append(self._expression())
        self._expect(")")
        if len(args) != FUNCTION_ARITY[name]:
            raise self._error(
                f"{name} takes {FUNCTION_ARITY[name]} argument(s), got {len(args)}", name_token
            )
        return Call(name, tuple(args))


def parse(source: str, variables: Iterable[str]) -> ExprAst:
    """Parse expression text; free variables must come from `variables`."""
    if source is None or not source.strip():
        raise ExpressionSyntaxError("empty expression", 0, source or "")
    declared = frozenset(variables)
    clashes = declared & set(CONSTANTS)
    if clashes:
        raise UnknownVariable(f"variable names clash with constants: {sorted(clashes)}")
    ast = _Parser(source, declared).parse()
    console_debug(f"Parsed {source!r} with variables {sorted(declared)}", MODULE)
    return ast


# Printer

_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}


def _precedence(node: ExprAst) -> int:
    if isinstance(node, BinaryOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Negate):
        return _PRECEDENCE["neg"]
    if isinstance(node, Constant) and not _is_simple_constant(node.value):
        return _PRECEDENCE["+"]
    return _PRECEDENCE["atom"]


def _is_simple_constant(value: complex) -> bool:
    return (value.imag == 0 and value.real >= 0) or (value.real == 0 and value.imag > 0)


def _wrap(node: ExprAst, needs_parens: bool) -> str:
    text = to_source(node)
    return f"({text})" if needs_parens else text


def to_source(node: ExprAst) -> str:
    """Render an AST back to expression text that re-parses to the same tree."""
    if isinstance(node, Constant):
        value = node.value
        if value.imag == 0 and value.real >= 0:
            return format_real(value.real)
        if value.real == 0 and value.imag > 0:
            return f"{format_real(value.imag)}i"
        if value.real == 0 and value.imag < 0:
            return f"-{format_real(-value.imag)}i"
        if value.imag == 0:
            return f"-{format_real(-value.real)}"
        sign = "-" if value.imag < 0 else "+"
        return f"{format_real(value.real)} {sign} {format_real(abs(value.imag))}i"
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Negate):
        return "-" + _wrap(node.operand, _precedence(node.operand) < _PRECEDENCE["neg"])
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(arg) for arg in node.args)})"
    own = _PRECEDENCE[node.op]
    if node.op == "^":
        left = _wrap(node.left, _precedence(node.left) <= own)
        right = _wrap(node.right, _precedence(node.right) < _PRECEDENCE["neg"])
        return f"{left}^{right}"
    left = _wrap(node.left, _precedence(node.left) < own)
    right = _wrap(node.right, _precedence(node.right) <= own)
    return f"{left} {node.op} {right}"


# Structural queries

def free_variables(node: ExprAst) -> FrozenSet[str]:
    if isinstance(node, Variable):
        return frozenset({node.name})
    if isinstance(node, Constant):
        return frozenset()
    if isinstance(node, Negate):
        return free_variables(node.operand)
    if isinstance(node, Call):
        return frozenset().union(*(free_variables(arg) for arg in node.args))
    return free_variables(node.left) | free_variables(node.right)


def non_analytic_calls(node: ExprAst) -> FrozenSet[str]:
    """Names of non-analytic functions used anywhere in the tree."""
    if isinstance(node, (Variable, Constant)):
        return frozenset()
    if isinstance(node, Negate):
        return non_analytic_calls(node.operand)
    if isinstance(node, Call):
        found = frozenset({node.name}) & NON_ANALYTIC_FUNCTIONS
        return found.union(*(non_analytic_calls(arg) for arg in node.args))
    return non_analytic_calls(node.left) | non_analytic_calls(node.right)


def is_analytic(node: ExprAst) -> bool:
    return not non_analytic_calls(node)


# Complex evaluation

def _integer_exponent(node: ExprAst) -> Optional[int]:
    if isinstance(node, Constant) and node.value.imag == 0 and float(node.value.real).is_integer():
        return int(node.value.real)
    if isinstance(node, Negate):
        inner = _integer_exponent(node.operand)
        return None if inner is None else -inner
    return None


def _apply_function(name: str, arg: np.ndarray) -> np.ndarray:
    if name == "sin":
        return np.sin(arg)
    if name == "cos":
        return np.cos(arg)
    if name == "exp":
        return np.exp(arg)
    if name == "log":
        if np.any(arg == 0):
            raise EvalDomain("log of zero")
        return np.log(arg)
    if name == "sqrt":
        return np.sqrt(arg)
    if name == "atan":
        if np.any(1 + arg * arg == 0):
            raise EvalDomain("atan singular at +-i")
        return np.arctan(arg)
    if name == "abs":
        return np.abs(arg).astype(np.complex128)
    if name == "re":
        return np.real(arg).astype(np.complex128)
    if name == "im":
        return np.imag(arg).astype(np.complex128)
    if name == "step":
        return np.sign(np.real(arg)).astype(np.complex128)
    if name == "conj":
        return np.conj(arg)
    raise EvalDomain(f"no evaluator for function {name!r}")


def _evaluate(node: ExprAst, env: Mapping[str, np.ndarray]) -> np.ndarray:
    if isinstance(node, Constant):
        return np.asarray(node.value, dtype=np.complex128)
    if isinstance(node, Variable):
        return env[node.name]
    if isinstance(node, Negate):
        return -_evaluate(node.operand, env)
    if isinstance(node, Call):
        return _apply_function(node.name, _evaluate(node.args[0], env))
    left = _evaluate(node.left, env)
    if node.op == "^":
        exponent = _integer_exponent(node.right)
        if exponent is not None:
            if exponent < 0 and np.any(left == 0):
                raise EvalDomain("zero raised to a negative power")
            return np.power(left, exponent)
        right = _evaluate(node.right, env)
        if np.any(left == 0):
            raise EvalDomain("zero raised to a non-integer power")
        return np.exp(right * np.log(left))
    right = _evaluate(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if np.any(right == 0):
        raise EvalDomain("division by zero")
    return left / right


def eval_complex(ast: ExprAst, bindings: Mapping[str, Union[complex, np.ndarray]]):
    """Evaluate with complex semantics; scalars in give a Python complex out."""
    missing = free_variables(ast) - set(bindings)
    if missing:
        raise UnknownVariable(f"no binding for {sorted(missing)}")
    env = {name: np.asarray(value, dtype=np.complex128) for name, value in bindings.items()}
    with np.errstate(all="ignore"):
        result = np.asarray(_evaluate(ast, env), dtype=np.complex128)
    if not np.all(np.isfinite(result)):
        raise EvalDomain(f"non-finite value evaluating {to_source(ast)!r}")
    if result.ndim == 0:
        return complex(result)
    return result


def eval_real(ast: ExprAst, bindings: Mapping[str, Union[float, np.ndarray]]):
    """Evaluate in a real context; results with |Im| > 1e-12 are rejected."""
    result = eval_complex(ast, bindings)
    imaginary = np.max(np.abs(np.imag(result))) if np.ndim(result) else abs(result.imag)
    if imaginary > REAL_TOLERANCE:
        raise EvalDomain(f"{to_source(ast)!r} is not real-valued (|Im| = {imaginary:.3g})")
    if np.ndim(result) == 0:
        return float(result.real)
    return np.real(result).copy()


# Bicomplex-step evaluation: values a + j*b carried in standard form

def _step_mul(x, y):
    (a1, b1), (a2, b2) = x, y
    return a1 * a2 - b1 * b2, a1 * b2 + a2 * b1


def _step_div(x, y):
    (a1, b1), (a2, b2) = x, y
    denominator = a2 * a2 + b2 * b2
    if denominator == 0:
        raise EvalDomain("division by zero")
    return (a1 * a2 + b1 * b2) / denominator, (b1 * a2 - a1 * b2) / denominator


def _step_log(x):
    a, b = x
    if a == 0:
        raise EvalDomain("log of zero")
    c = b / a
    return np.log(a) + 0.5 * np.log1p(c * c), np.arctan(c)


def _step_exp(x):
    a, b = x
    scale = np.exp(a)
    return scale * np.cos(b), scale * np.sin(b)


def _step_int_power(x, n: int):
    if n < 0:
        return _step_div((1.0 + 0j, 0j), _step_int_power(x, -n))
    result = (1.0 + 0j, 0j)
    base = x
    while n:
        if n & 1:
            result = _step_mul(result, base)
        base = _step_mul(base, base)
        n >>= 1
    return result


def _step_function(name: str, x):
    a, b = x
    if name == "exp":
        return _step_exp(x)
    if name == "sin":
        return np.sin(a) * np.cosh(b), np.cos(a) * np.sinh(b)
    if name == "cos":
        return np.cos(a) * np.cosh(b), -np.sin(a) * np.sinh(b)
    if name == "log":
        return _step_log(x)
    if name == "sqrt":
        if a == 0:
            raise EvalDomain("sqrt is not differentiable at zero")
        c = b / a
        modulus = np.exp(0.25 * np.log1p(c * c))
        angle = 0.5 * np.arctan(c)
        root = np.sqrt(a)
        return root * modulus * np.cos(angle), root * modulus * np.sin(angle)
    if name == "atan":
        if 1 + 1j * a == 0 or 1 - 1j * a == 0:
            raise EvalDomain("atan singular at +-i")
        c_minus = -1j * b / (1 - 1j * a)
        c_plus = 1j * b / (1 + 1j * a)
        real_part = np.arctan(a) + 0.25j * (np.log1p(c_minus * c_minus) - np.log1p(c_plus * c_plus))
        j_part = 0.5j * (np.arctan(c_minus) - np.arctan(c_plus))
        return real_part, j_part
    raise NonAnalytic(f"{name} has no complex derivative")


def _evaluate_step(node: ExprAst, env):
    if isinstance(node, Constant):
        return complex(node.value), 0j
    if isinstance(node, Variable):
        return env[node.name]
    if isinstance(node, Negate):
        a, b = _evaluate_step(node.operand, env)
        return -a, -b
    if isinstance(node, Call):
        return _step_function(node.name, _evaluate_step(node.args[0], env))
    left = _evaluate_step(node.left, env)
    if node.op == "^":
        exponent = _integer_exponent(node.right)
        if exponent is not None:
            if exponent < 0 and left[0] == 0 and left[1] == 0:
                raise EvalDomain("zero raised to a negative power")
            return _step_int_power(left, exponent)
        right = _evaluate_step(node.right, env)
        return _step_exp(_step_mul(right, _step_log(left)))
    right = _evaluate_step(node.right, env)
    if node.op == "+":
        return left[0] + right[0], left[1] + right[1]
    if node.op == "-":
        return left[0] - right[0], left[1] - right[1]
    if node.op == "*":
        return _step_mul(left, right)
    return _step_div(left, right)


def eval_step_derivative(ast: ExprAst, variable: str, z: complex, h: float = DEFAULT_STEP) -> complex:
    """
    Derivative of a holomorphic expression by the bicomplex step.

    The expression is evaluated at z + j*h in standard-form bicomplex arithmetic;
    the j-part divided by h is f'(z) with no subtractive cancellation.
    """
    bad = non_analytic_calls(ast)
    if bad:
        raise NonAnalytic(f"non-analytic functions {sorted(bad)} have no complex derivative")
    with np.errstate(all="ignore"):
        value, j_part = _evaluate_step(ast, {variable: (complex(z), complex(h))})
    derivative = complex(j_part) / h
    if not (np.isfinite(derivative.real) and np.isfinite(derivative.imag)):
        raise EvalDomain(f"non-finite derivative of {to_source(ast)!r} at {z}")
    return derivative


# Piecewise boundary data

def _sample_interval(lo: float, hi: float) -> np.ndarray:
    offsets = np.logspace(-3, 6, 64)
    if np.isfinite(lo) and np.isfinite(hi):
        return lo + (hi - lo) * np.linspace(0, 1, 129)[1:-1]
    if np.isfinite(lo):
        return lo + offsets
    if np.isfinite(hi):
        return hi - offsets
    return np.concatenate([-offsets[::-1], [0.0], offsets])


@dataclass(frozen=True)
class PiecewiseSpec:
    """
    Piecewise continuous bounded real function of t.

    pieces[k] applies on the open interval (breakpoints[k-1], breakpoints[k]);
    at a breakpoint the value is the average of the one-sided limits.
    """

    breakpoints: Tuple[float, ...]
    pieces: Tuple[ExprAst, ...]
    bound: float

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(float(b) for b in self.breakpoints))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if not all(math.isfinite(b) for b in self.breakpoints):
            raise ValueError("breakpoints must be finite")
        if any(b >= c for b, c in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError(f"breakpoints must be strictly increasing: {self.breakpoints}")
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise ValueError(
                f"{len(self.breakpoints)} breakpoint(s) need {len(self.breakpoints) + 1} pieces, got {len(self.pieces)}"
            )
        if not (self.bound > 0 and math.isfinite(self.bound)):
            raise ValueError(f"bound must be a positive real, got {self.bound}")
        for piece in self.pieces:
            extra = free_variables(piece) - {"t"}
            if extra:
                raise ValueError(f"pieces may only use t, found {sorted(extra)}")
        self._check_bound()

    @classmethod
    def from_text(cls, breakpoints: Sequence[float], pieces: Sequence[str], bound: float) -> "PiecewiseSpec":
        return cls(tuple(breakpoints), tuple(parse(text, {"t"}) for text in pieces), bound)

    @classmethod
    def constant(cls, value: float) -> "PiecewiseSpec":
        return cls((), (Constant(complex(value)),), max(abs(value), 1.0))

    def intervals(self) -> List[Tuple[float, float]]:
        edges = [-math.inf, *self.breakpoints, math.inf]
        return list(zip(edges[:-1], edges[1:]))

    def _check_bound(self):
        for (lo, hi), piece in zip(self.intervals(), self.pieces):
            values = eval_real(piece, {"t": _sample_interval(lo, hi)})
            peak = float(np.max(np.abs(values)))
            if peak > self.bound * (1 + 1e-12):
                raise UnboundedData(
                    f"piece {to_source(piece)!r} reaches {peak:.6g} on ({lo}, {hi}), above bound {self.bound}"
                )

    def describe(self) -> dict:
        return {
            "breakpoints": list(self.breakpoints),
            "pieces": [to_source(piece) for piece in self.pieces],
            "bound": self.bound,
        }


def eval_piecewise(spec: PiecewiseSpec, t):
    """Evaluate boundary data at scalar or array t."""
    scalar = np.ndim(t) == 0
    points = np.atleast_1d(np.asarray(t, dtype=float))
    if not np.all(np.isfinite(points)):
        raise EvalDomain("boundary data evaluated at a non-finite t")
    result = np.empty_like(points)
    for (lo, hi), piece in zip(spec.intervals(), spec.pieces):
        mask = (points > lo) & (points < hi)
        if np.any(mask):
            result[mask] = eval_real(piece, {"t": points[mask]})
    for index, breakpoint in enumerate(spec.breakpoints):
        mask = points == breakpoint
        if np.any(mask):
            left = eval_real(spec.pieces[index], {"t": breakpoint})
            right = eval_real(spec.pieces[index + 1], {"t": breakpoint})
            result[mask] = 0.5 * (left + right)
    return float(result[0]) if scalar else result


# Bicomplex literals

_UNITS = {"i": 1, "j": 2, "ij": 3, "ji": 3}


def parse_bicomplex(text: str) -> Bicomplex:
    """
    Parse a bicomplex literal in standard form `a + bi + cj + dij`
    or idempotent form `[zeta1 | zeta2]`; a leading bracket selects the latter.
    """
    if text is None or not text.strip():
        raise ExpressionSyntaxError("empty bicomplex literal", 0, text or "")
    try:
        if text.strip().startswith("["):
            return _parse_idempotent(text)
        return _parse_standard(text)
    except EvalDomain as e:
        raise InvalidArgument(f"bicomplex literal {text!r} is not a finite constant: {e}") from e


def _parse_idempotent(text: str) -> Bicomplex:
    start = text.index("[")
    end = text.rfind("]")
    if end < 0 or text[end + 1:].strip():
        raise ExpressionSyntaxError("idempotent literal must end with ']'", _byte_offset(text, len(text)), text)
    body = text[start + 1:end]
    parts = body.split("|")
    if len(parts) != 2:
        raise ExpressionSyntaxError("idempotent literal needs exactly one '|'", _byte_offset(text, start), text)
    components = []
    for part in parts:
        try:
            components.append(eval_complex(parse(part, set()), {}))
        except ExpressionSyntaxError as e:
            shift = _byte_offset(text, text.index(part, start))
            raise ExpressionSyntaxError(str(e).rsplit(" at offset", 1)[0], e.offset + shift, text) from e
    return Bicomplex(components[0], components[1])


def _parse_standard(text: str) -> Bicomplex:
    tokens = tokenize(text)
    coefficients = [0.0, 0.0, 0.0, 0.0]
    position = 0
    expect_term = True
    sign = 1.0
    while True:
        token = tokens[position]
        if expect_term:
            if token.kind == "op" and token.text in "+-":
                sign = -sign if token.text == "-" else sign
                position += 1
                continue
            if token.kind == "imag":
                coefficients[1] += sign * token.value.imag
                position += 1
            elif token.kind == "number":
                magnitude = token.value.real
                position += 1
                follow = tokens[position]
                if follow.kind == "op" and follow.text == "*":
                    position += 1
                    follow = tokens[position]
                    if follow.kind != "name":
                        raise ExpressionSyntaxError("expected a unit after '*'", follow.offset, text)
                if follow.kind == "name":
                    if follow.text not in _UNITS:
                        raise ExpressionSyntaxError(f"unknown unit {follow.text!r}", follow.offset, text)
                    coefficients[_UNITS[follow.text]] += sign * magnitude
                    position += 1
                else:
                    coefficients[0] += sign * magnitude
            elif token.kind == "name" and token.text in _UNITS:
                coefficients[_UNITS[token.text]] += sign
                position += 1
            else:
                shown = token.text or "end of input"
                raise ExpressionSyntaxError(f"unexpected {shown!r} in bicomplex literal", token.offset, text)
            expect_term = False
            sign = 1.0
            continue
        if token.kind == "end":
            break
        if token.kind == "op" and token.text in "+-":
            expect_term = True
            sign = -1.0 if token.text == "-" else 1.0
            position += 1
            continue
        raise ExpressionSyntaxError(f"unexpected {token.text!r} in bicomplex literal", token.offset, text)
    x1, y1, x2, y2 = coefficients
    return from_standard(complex(x1, y1), complex(x2, y2))
