"""Command handlers for the detector-metrology command line"""

from .detector_commands import cmd_point, cmd_sweep, cmd_peak, cmd_figures, cmd_verify

__all__ = ["cmd_point", "cmd_sweep", "cmd_peak", "cmd_figures", "cmd_verify"]
