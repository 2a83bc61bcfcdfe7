import cmath
import math

import numpy as np
import pytest

from models.bicomplex import Bicomplex, from_standard
from models.errors import (
    EvalDomain,
    ExpressionSyntaxError,
    InvalidArgument,
    NonAnalytic,
    UnboundedData,
    UnknownFunction,
    UnknownVariable,
)
from operations.expression_operations import (
    BinaryOp,
    Call,
    Constant,
    Negate,
    PiecewiseSpec,
    Variable,
    eval_complex,
    eval_piecewise,
    eval_real,
    eval_step_derivative,
    free_variables,
    is_analytic,
    parse,
    parse_bicomplex,
    to_source,
)


class TestParse:
    def test_precedence_and_associativity(self):
        assert parse("a - b - c", {"a", "b", "c"}) == BinaryOp("-", BinaryOp("-", Variable("a"), Variable("b")), Variable("c"))
        assert parse("a ^ b ^ c", {"a", "b", "c"}) == BinaryOp("^", Variable("a"), BinaryOp("^", Variable("b"), Variable("c")))
        assert parse("-a^2", {"a"}) == Negate(BinaryOp("^", Variable("a"), parse("2", set())))
        assert parse("sin(z)", {"z"}) == Call("sin", (Variable("z"),))

    def test_malformed_input_reports_offset(self):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse("x +* y", {"x", "y"})
        assert excinfo.value.offset == 3
        assert "offset 3" in str(excinfo.value)

    @pytest.mark.parametrize("source", ["", "   ", "(z", "z)", "sin z", "z $ 1", "sin(z, z)"])
    def test_syntax_errors(self, source):
        with pytest.raises(ExpressionSyntaxError):
            parse(source, {"z"})

    def test_function_name_without_call_is_a_syntax_error(self):
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse("2 * sin z", {"z"})
        assert excinfo.value.offset == 8

    def test_unknown_names(self):
        with pytest.raises(UnknownVariable):
            parse("w + 1", {"z"})
        with pytest.raises(UnknownFunction):
            parse("tan(z)", {"z"})
        with pytest.raises(UnknownVariable):
            parse("pi", {"pi"})

    @pytest.mark.parametrize("source", [
        "z^2 + 1",
        "2/pi * atan(x/y)",
        "-(z - 1)^3 / (2 - i)",
        "exp(-z^2) * sin(3i * z)",
        "(a - b) - (c - d)",
        "a / (b * c)",
        "2^-1",
        "-x^-2",
        "1.5e-3 * step(t) + abs(t)",
    ])
    def test_print_then_parse_is_a_fixpoint(self, source):
        variables = {"z", "x", "y", "t", "a", "b", "c", "d"}
        ast = parse(source, variables)
        assert parse(to_source(ast), variables) == ast

    def test_negative_constants_print_and_parse_back(self):
        assert parse("-2", set()) == Constant(-2)
        assert parse("x - -1.5", {"x"}) == BinaryOp("-", Variable("x"), Constant(-1.5))
        for value in (-1.0, -3j, -0.25):
            ast = Constant(complex(value))
            assert parse(to_source(ast), set()) == ast
        for piece in PiecewiseSpec.constant(-1.0).pieces:
            assert parse(to_source(piece), {"t"}) == piece
        assert to_source(BinaryOp("^", Constant(-1), Constant(2))) == "(-1)^2"

    def test_structural_queries(self):
        ast = parse("re(z) + x", {"z", "x"})
        assert free_variables(ast) == {"z", "x"}
        assert not is_analytic(ast)
        assert is_analytic(parse("log(z) * sqrt(z)", {"z"}))


class TestEvaluate:
    def test_complex_examples(self):
        assert eval_complex(parse("z^2 + 1", {"z"}), {"z": 1j}) == pytest.approx(0, abs=1e-15)
        assert eval_real(parse("2/pi * atan(x/y)", {"x", "y"}), {"x": 1.0, "y": 1.0}) == pytest.approx(0.5, abs=1e-15)
        assert eval_complex(parse("exp(z)", {"z"}), {"z": 0}) == 1

    def test_step_is_sign(self):
        step = parse("step(t)", {"t"})
        assert eval_real(step, {"t": -2.0}) == -1
        assert eval_real(step, {"t": 3.0}) == 1
        assert eval_real(step, {"t": 0.0}) == 0

    @pytest.mark.parametrize("source, value", [("1/z", 0), ("log(z)", 0), ("atan(z)", 1j), ("z^-1", 0), ("exp(z)", 1000)])
    def test_domain_errors(self, source, value):
        with pytest.raises(EvalDomain):
            eval_complex(parse(source, {"z"}), {"z": value})

    def test_real_context_rejects_complex_results(self):
        with pytest.raises(EvalDomain):
            eval_real(parse("sqrt(x)", {"x"}), {"x": -1.0})
        assert eval_real(parse("im(x + i)", {"x"}), {"x": 4.0}) == 1.0

    def test_vectorised_bindings(self):
        values = eval_complex(parse("z^2", {"z"}), {"z": np.array([1, 2, 3])})
        assert np.allclose(values, [1, 4, 9])
        planar = eval_real(parse("x*y", {"x", "y"}), {"x": np.array([1.0, 2.0]), "y": np.array([3.0, 4.0])})
        assert planar.tolist() == [3.0, 8.0]

    def test_missing_binding(self):
        with pytest.raises(UnknownVariable):
            eval_complex(parse("z + w", {"z", "w"}), {"z": 1})

    def test_evaluation_is_deterministic(self):
        ast = parse("exp(sin(z)) / (1 + z^2)", {"z"})
        assert eval_complex(ast, {"z": 0.3 - 0.7j}) == eval_complex(ast, {"z": 0.3 - 0.7j})


class TestStepDerivative:
    @pytest.mark.parametrize("source, derivative", [
        ("z^3", lambda z: 3 * z ** 2),
        ("sin(z)", cmath.cos),
        ("cos(z)", lambda z: -cmath.sin(z)),
        ("exp(2*z)", lambda z: 2 * cmath.exp(2 * z)),
        ("log(z)", lambda z: 1 / z),
        ("sqrt(z)", lambda z: 0.5 / cmath.sqrt(z)),
        ("atan(z)", lambda z: 1 / (1 + z * z)),
        ("1/z", lambda z: -1 / z ** 2),
        ("z^0.5", lambda z: 0.5 / cmath.sqrt(z)),
        ("z^5 - 3*z + i", lambda z: 5 * z ** 4 - 3),
    ])
    def test_matches_analytic_derivative(self, source, derivative):
        z = 0.7 + 0.4j
        value = eval_step_derivative(parse(source, {"z"}), "z", z)
        assert abs(value - derivative(z)) <= 1e-13 * max(1.0, abs(derivative(z)))

    def test_non_analytic_rejected(self):
        with pytest.raises(NonAnalytic):
            eval_step_derivative(parse("abs(z)", {"z"}), "z", 1.0)


class TestPiecewise:
    def test_step_data(self, step_spec):
        assert eval_piecewise(step_spec, 5.0) == 1
        assert eval_piecewise(step_spec, -0.5) == -1
        assert eval_piecewise(step_spec, 0.0) == 0
        assert eval_piecewise(step_spec, np.array([-1.0, 0.0, 2.0])).tolist() == [-1.0, 0.0, 1.0]

    def test_constant(self):
        spec = PiecewiseSpec.constant(1.0)
        assert eval_piecewise(spec, -1e9) == 1
        assert eval_piecewise(spec, 17.25) == 1

    def test_breakpoint_average_of_limits(self):
        spec = PiecewiseSpec.from_text([1.0], ["atan(t)", "3"], 3.0)
        assert eval_piecewise(spec, 1.0) == pytest.approx((math.pi / 4 + 3) / 2, abs=1e-15)
        assert eval_piecewise(spec, 0.5) == pytest.approx(math.atan(0.5), abs=1e-15)

    def test_bound_is_sampled(self):
        with pytest.raises(UnboundedData):
            PiecewiseSpec.from_text([0.0], ["0", "t"], 10.0)
        assert PiecewiseSpec.from_text([], ["1/(1 + t^2)"], 1.0).bound == 1.0

    @pytest.mark.parametrize("breakpoints, pieces", [
        ([1.0, 0.0], ["1", "2", "3"]),
        ([0.0], ["1"]),
        ([math.inf], ["1", "2"]),
        ([], ["x"]),
    ])
    def test_invalid_specs(self, breakpoints, pieces):
        with pytest.raises((ValueError, UnknownVariable)):
            PiecewiseSpec.from_text(breakpoints, pieces, 5.0)


class TestBicomplexLiterals:
    @pytest.mark.parametrize("text, expected", [
        ("1+1j", from_standard(1, 1)),
        ("1 + j", from_standard(1, 1)),
        ("i", Bicomplex(1j, 1j)),
        ("2ij", Bicomplex(2, -2)),
        ("2*ji", Bicomplex(2, -2)),
        ("-0.5 + 2i - 3j + 4ij", Bicomplex.from_real4(-0.5, 2, -3, 4)),
        ("[1 - i | 1 + i]", from_standard(1, 1)),
        ("  [2 | -3i]", Bicomplex(2, -3j)),
    ])
    def test_both_notations(self, text, expected):
        assert parse_bicomplex(text) == expected

    @pytest.mark.parametrize("text", ["", "1 + + ", "[1 | 2", "[1 | 2 | 3]", "1 + k", "1 2", "j j"])
    def test_malformed_literals(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse_bicomplex(text)

    @pytest.mark.parametrize("text", ["[1/0 | 1]", "[log(0) | 1]", "1e400 + j"])
    def test_non_finite_literals_are_invalid_arguments(self, text):
        with pytest.raises(InvalidArgument) as excinfo:
            parse_bicomplex(text)
        assert excinfo.value.exit_code == 2
