"""Configuration module for the Bicomplex Harmonic Toolkit"""

from .toolkit_config import toolkit_config, ToolkitConfig

__all__ = ['toolkit_config', 'ToolkitConfig']
