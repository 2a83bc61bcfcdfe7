import math

import numpy as np
import pytest

from models.bicomplex import Bicomplex, Hyperbolic, from_standard
from models.errors import NotHarmonic, OutOfDomain
from models.region import GridSpec, Interval, PlanarGrid, Rectangle, Region
from operations.harmonic_operations import HORIZONTAL_FIRST, VERTICAL_FIRST, harmonic_operations
from operations.holomorphic_operations import BCHoloFn, HyperbolicFnPair, Part, holomorphic_operations

ORIGIN = ((0.0, 0.0), (0.0, 0.0))


@pytest.fixture
def upper_region() -> Region:
    strip = Rectangle(Interval(-3, 3), Interval(0.5, 3))
    return Region(strip, strip)


@pytest.fixture
def upper_diagonal_grid() -> GridSpec:
    return GridSpec.diagonal(PlanarGrid((-2.0, 2.0), (0.7, 2.5), 9, 8))


def hyperbolic_part(f1: str, f2: str, part: Part) -> HyperbolicFnPair:
    return holomorphic_operations.as_hyperbolic_fn(BCHoloFn.from_text(f1, f2), part)


def grid_values(fn, grid: GridSpec, index: int):
    x, y = grid.component(index).points()
    return x, y, fn.evaluate(index, x, y)


class TestLaplacian:
    def test_examples(self):
        zeta = Bicomplex(0.3 + 0.2j, -0.7 + 1.1j)
        residual = harmonic_operations.bc_laplacian(HyperbolicFnPair.from_text("x^2 + y^2", "x"), zeta)
        assert residual.eta1 == pytest.approx(4, abs=1e-6)
        assert residual.eta2 == pytest.approx(0, abs=1e-6)
        squares = harmonic_operations.bc_laplacian(HyperbolicFnPair.from_text("x^2", "x^2"), zeta)
        assert squares.eta1 == pytest.approx(2, abs=1e-6)
        assert squares.eta2 == pytest.approx(2, abs=1e-6)

    def test_report_for_holomorphic_input(self):
        report = harmonic_operations.laplacian_report(BCHoloFn.from_text("z^2", "exp(z)"), from_standard(1, 1))
        assert report.verdict
        assert report.to_dict()["residual1"] <= 1e-4

    def test_stencil_must_stay_in_region(self, unit_region):
        u = HyperbolicFnPair.from_text("x", "y", unit_region)
        with pytest.raises(OutOfDomain):
            harmonic_operations.bc_laplacian(u, Bicomplex(1.9995, 0), h=1e-3)


class TestCertification:
    @pytest.mark.parametrize("f1, f2", [("z^2", "z^3"), ("exp(z)", "z^2"), ("z^5", "sin(z)")])
    @pytest.mark.parametrize("part", [Part.RE, Part.IM])
    def test_parts_of_holomorphic_functions_pass(self, interior_grid, f1, f2, part):
        report = harmonic_operations.is_bc_harmonic(hyperbolic_part(f1, f2, part), interior_grid, tol=1e-4)
        assert report.verdict
        assert max(report.max_residual.eta1, report.max_residual.eta2) <= 1e-4

    def test_verdict_needs_both_components(self, interior_grid):
        u = HyperbolicFnPair.from_text("x^2 + y^2", "x*y")
        report = harmonic_operations.is_bc_harmonic(u, interior_grid, tol=1e-4)
        _, first = harmonic_operations.is_planar_harmonic(u, 1, interior_grid.component1, report.h, 1e-4)
        _, second = harmonic_operations.is_planar_harmonic(u, 2, interior_grid.component2, report.h, 1e-4)
        assert report.component_pass == (first, second) == (False, True)
        assert not report.verdict
        assert report.to_dict()["verdict"] is False

    def test_second_order_convergence_on_quartic_control(self, interior_grid):
        u = HyperbolicFnPair.from_text("x^4", "y^4")
        ratio = harmonic_operations.refinement_ratio(u, interior_grid, 1e-2)
        assert 3.5 <= ratio.eta1 <= 4.5
        assert 3.5 <= ratio.eta2 <= 4.5
        zeta = Bicomplex(0.5 + 0.1j, 0.2 - 0.8j)
        exact = Hyperbolic(12 * 0.5 ** 2, 12 * 0.8 ** 2)
        error_ratio = harmonic_operations.laplacian_error_ratio(u, exact, zeta, 1e-2)
        assert error_ratio.eta1 == pytest.approx(4, rel=0.05)
        assert error_ratio.eta2 == pytest.approx(4, rel=0.05)

    def test_report_includes_refinement(self, interior_grid):
        report = harmonic_operations.is_bc_harmonic(
            hyperbolic_part("z^3", "z^3", Part.RE), interior_grid, with_refinement=True
        )
        document = report.to_dict()
        assert {"refinement_ratio1", "refinement_ratio2", "tol", "points"} <= set(document)
        assert document["points"] == 800


class TestConjugate:
    def test_polynomial_conjugates(self, interior_grid):
        u = HyperbolicFnPair.from_text("x^2 - y^2", "x")
        conjugate = harmonic_operations.harmonic_conjugate(u, ORIGIN)
        x, y, v1 = grid_values(conjugate, interior_grid, 1)
        assert np.max(np.abs(v1 - 2 * x * y)) <= 1e-8
        x, y, v2 = grid_values(conjugate, interior_grid, 2)
        assert np.max(np.abs(v2 - y)) <= 1e-8

    def test_basepoint_value_is_zero(self):
        conjugate = harmonic_operations.harmonic_conjugate(HyperbolicFnPair.from_text("x*y", "x^3 - 3*x*y^2"), ((0.4, -0.3), (1.0, 2.0)))
        assert conjugate(Bicomplex(0.4 - 0.3j, 1 + 2j)) == Hyperbolic(0.0, 0.0)

    def test_conjugate_as_hyperbolic_pair(self, interior_grid):
        u = HyperbolicFnPair.from_text("x^2 - y^2", "x*y")
        conjugate = harmonic_operations.harmonic_conjugate(u, ORIGIN).as_pair()
        assert conjugate.label == "conj" + u.label
        residual = harmonic_operations.cauchy_riemann_residual(u, conjugate, interior_grid)
        assert max(residual.eta1, residual.eta2) <= 1e-7

    def test_second_product_conjugate(self, interior_grid):
        conjugate = harmonic_operations.harmonic_conjugate(HyperbolicFnPair.from_text("2*x*y", "2*x*y"), ORIGIN)
        for index in (1, 2):
            x, y, values = grid_values(conjugate, interior_grid, index)
            assert np.max(np.abs(values - (y ** 2 - x ** 2))) <= 1e-8

    def test_constant_has_zero_conjugate(self, interior_grid):
        conjugate = harmonic_operations.harmonic_conjugate(HyperbolicFnPair.constant(3.0, -2.0), ORIGIN)
        for index in (1, 2):
            _, _, values = grid_values(conjugate, interior_grid, index)
            assert np.max(np.abs(values)) <= 1e-12

    def test_path_independence(self, interior_grid):
        u = hyperbolic_part("exp(z)", "sin(z) + z^3", Part.RE)
        vertical = harmonic_operations.harmonic_conjugate(u, ORIGIN, path=VERTICAL_FIRST)
        horizontal = harmonic_operations.harmonic_conjugate(u, ORIGIN, path=HORIZONTAL_FIRST)
        for index in (1, 2):
            x, y = interior_grid.component(index).points()
            gap = vertical.evaluate(index, x, y) - horizontal.evaluate(index, x, y)
            assert np.max(np.abs(gap)) <= 2e-6

    def test_angle_function_conjugate_is_log_radius(self, upper_region, upper_diagonal_grid):
        u = HyperbolicFnPair.from_text("2/pi * atan(x/y)", "2/pi * atan(x/y)", upper_region)
        conjugate = harmonic_operations.harmonic_conjugate(u)
        for index in (1, 2):
            x, y, values = grid_values(conjugate, upper_diagonal_grid, index)
            difference = values - np.log(x ** 2 + y ** 2) / math.pi
            assert np.max(np.abs(difference - difference.mean())) <= 1e-6
        residual = harmonic_operations.cauchy_riemann_residual(u, conjugate, upper_diagonal_grid)
        assert max(residual.eta1, residual.eta2) <= 1e-5

    def test_conjugates_differ_by_constants(self, upper_region, upper_diagonal_grid):
        u = HyperbolicFnPair.from_text("2/pi * atan(x/y)", "x^2 - y^2", upper_region)
        deviation = harmonic_operations.conjugate_uniqueness_check(
            u, ((0.0, 1.0), (0.0, 1.0)), ((1.5, 2.0), (-1.0, 0.8)), upper_diagonal_grid
        )
        assert max(deviation.eta1, deviation.eta2) < 1e-7

    def test_non_harmonic_input_rejected_when_certified(self, interior_grid):
        u = HyperbolicFnPair.from_text("x^2 + y^2", "x")
        with pytest.raises(NotHarmonic):
            harmonic_operations.harmonic_conjugate(u, ORIGIN, certify_grid=interior_grid, tol=1e-4)
        # without a certification grid the construction proceeds
        assert harmonic_operations.harmonic_conjugate(u, ORIGIN) is not None

    def test_basepoint_outside_region(self, unit_region):
        u = HyperbolicFnPair.from_text("x", "y", unit_region)
        with pytest.raises(OutOfDomain):
            harmonic_operations.harmonic_conjugate(u, ((0.0, 0.0), (5.0, 0.0)))

    def test_unknown_path(self):
        with pytest.raises(ValueError):
            harmonic_operations.harmonic_conjugate(HyperbolicFnPair.from_text("x", "x"), ORIGIN, path="diagonal")


class TestHolomorphicFromHyperbolic:
    def test_identity_from_real_part(self):
        F = harmonic_operations.holomorphic_from_hyperbolic(HyperbolicFnPair.from_text("x", "x"), ORIGIN)
        value = F(from_standard(1, 1))
        assert abs(value.zeta1 - (1 - 1j)) <= 1e-10
        assert abs(value.zeta2 - (1 + 1j)) <= 1e-10
        assert F.hyperbolic_real_part(from_standard(1, 1)) == Hyperbolic(1.0, 1.0)

    def test_round_trip_on_random_polynomials(self, interior_grid):
        rng = np.random.default_rng(7)

        def polynomial() -> str:
            coefficients = rng.uniform(-1, 1, size=(5, 2))
            return " + ".join(f"({float(re)!r} + {float(im)!r}i) * z^{power}" for power, (re, im) in enumerate(coefficients))

        for _ in range(10):
            original = BCHoloFn.from_text(polynomial(), polynomial())
            u = holomorphic_operations.as_hyperbolic_fn(original, Part.RE)
            rebuilt = harmonic_operations.holomorphic_from_hyperbolic(u, ORIGIN)
            for index in (1, 2):
                x, y = interior_grid.component(index).points()
                z = x + 1j * y
                expected = original.evaluate_component(index, z)
                expected = expected - 1j * original.evaluate_component(index, 0j).imag
                assert np.max(np.abs(rebuilt.evaluate_component(index, z) - expected)) <= 1e-6
