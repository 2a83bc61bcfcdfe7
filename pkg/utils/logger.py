"""
Toolkit Logging Helpers
Everything goes through Python's logging module; main.py owns handler setup.
Library modules tag messages with a short module label.
"""
import logging
import time
from contextlib import contextmanager


def get_logger(name="BicomplexToolkit"):
    """Get a logger instance with the specified name."""
    return logging.getLogger(name)


def console_info(message, module="BicomplexToolkit"):
    get_logger(module).info(f"ℹ️  [{module}] {message}")


def console_debug(message, module="BicomplexToolkit"):
    get_logger(module).debug(f"🐛 [{module}] {message}")


def console_warning(message, module="BicomplexToolkit"):
    get_logger(module).warning(f"⚠️  [{module}] {message}")


def console_error(message, module="BicomplexToolkit"):
    get_logger(module).error(f"❌ [{module}] {message}")


def console_telemetry_event(event_name, properties, module="BicomplexToolkit"):
    """Log a run summary (grid sizes, residuals, timings) as one line."""
    get_logger(module).info(f"📊 [{module}] {event_name}: {properties}")


@contextmanager
def timed_event(event_name, properties, module="BicomplexToolkit"):
    """Emit a telemetry event carrying the wall time of the wrapped block."""
    started = time.perf_counter()
    try:
        yield properties
    finally:
        properties["elapsed_s"] = round(time.perf_counter() - started, 6)
        console_telemetry_event(event_name, properties, module)
