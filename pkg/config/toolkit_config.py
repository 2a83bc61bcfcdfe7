"""
Toolkit Configuration Management
Environment-driven defaults for numerical steps, tolerances, quadrature and output.
Values come from the process environment (main.py loads a .env file first).
"""
import os


class ToolkitConfig:
    """Typed access to the BICOMPLEX_* environment settings."""

    def __init__(self):
        self.environment = os.getenv('ENVIRONMENT', 'development').lower()

    def _get_float(self, name: str, default: float) -> float:
        raw = os.getenv(name)
        if raw is None or raw.strip() == '':
            return default
        return float(raw)

    def _get_int(self, name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == '':
            return default
        return int(raw)

    def get_output_dir(self) -> str:
        """Default directory for result files"""
        return os.getenv('BICOMPLEX_OUTPUT_DIR', '.')

    def get_log_level(self) -> str:
        return os.getenv('BICOMPLEX_LOG_LEVEL', 'INFO').upper()

    def get_log_dir(self) -> str:
        """Directory for per-run log files; empty disables file logging"""
        return os.getenv('BICOMPLEX_LOG_DIR', '')

    def get_laplacian_h(self) -> float:
        """Finite-difference step for the 5-point Laplacian"""
        return self._get_float('BICOMPLEX_LAPLACIAN_H', 1e-3)

    def get_partial_h(self) -> float:
        """Finite-difference step for first partial derivatives"""
        return self._get_float('BICOMPLEX_PARTIAL_H', 1e-4)

    def get_harmonic_tol(self) -> float:
        return self._get_float('BICOMPLEX_HARMONIC_TOL', 1e-4)

    def get_quadrature_nodes(self) -> int:
        """Gauss-Legendre nodes per panel for Poisson integrals"""
        return self._get_int('BICOMPLEX_QUAD_NODES', 32)

    def get_quadrature_panels(self) -> int:
        return self._get_int('BICOMPLEX_QUAD_PANELS', 64)

    def get_quadrature_abs_tol(self) -> float:
        return self._get_float('BICOMPLEX_QUAD_ABS_TOL', 1e-10)

    def get_mismatch_tol(self) -> float:
        """Allowed disagreement between closed form and quadrature"""
        return self._get_float('BICOMPLEX_MISMATCH_TOL', 1e-8)

    def get_noninvertible_eps(self) -> float:
        return self._get_float('BICOMPLEX_NONINVERTIBLE_EPS', 1e-12)

    def validate_configuration(self) -> dict:
        """Check that every numeric setting parses and is positive"""
        checks = {
            'laplacian_h': self.get_laplacian_h,
            'partial_h': self.get_partial_h,
            'harmonic_tol': self.get_harmonic_tol,
            'quadrature_nodes': self.get_quadrature_nodes,
            'quadrature_panels': self.get_quadrature_panels,
            'quadrature_abs_tol': self.get_quadrature_abs_tol,
            'mismatch_tol': self.get_mismatch_tol,
            'noninvertible_eps': self.get_noninvertible_eps,
        }
        validation = {}
        for name, getter in checks.items():
            try:
                validation[name] = getter() > 0
            except ValueError:
                validation[name] = False
        return validation

    def get_configuration_summary(self) -> str:
        validation = self.validate_configuration()
        invalid = [k for k, v in validation.items() if not v]

        summary = f"Environment: {self.environment}\n"
        summary += f"Output dir: {self.get_output_dir()}\n"
        summary += f"Log dir: {self.get_log_dir() or '⚪ (disabled)'}\n"
        for name, ok in validation.items():
            summary += f"{name}: {'✅' if ok else '❌'}\n"

        if invalid:
            summary += f"\n⚠️  Invalid: {', '.join(invalid)}"
        else:
            summary += "\n🎯 All numeric settings valid!"
        return summary


# Global instance
toolkit_config = ToolkitConfig()
