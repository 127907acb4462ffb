"""Grid evaluation of every output column along one parameter"""

import logging
import math
from typing import Dict, List, Tuple

import numpy as np

from app.config import DEFAULT_CONFIG, NumericsConfig
from app.exceptions import Overflow
from app.models import DetectorParams, FigurePanel, SweepRow, SweepSpec, SweepTable, validate
from app.services import vacuum
from app.services.correlations import lqu_closed
from app.services.metrology import qfi_closed
from app.utils.common_utils import format_label

logger = logging.getLogger(__name__)

# Parameter order used for file names and fixed-parameter lookups
PARAMETER_ORDER = ("omega", "beta", "alpha_abs", "tau")

_FILE_LABELS = {"omega": "omega", "beta": "beta", "alpha_abs": "alpha", "tau": "tau"}


class SweepService:
    """Service evaluating parameter points and one-dimensional sweeps"""

    def __init__(self, config: NumericsConfig = DEFAULT_CONFIG):
        self.config = config

    @staticmethod
    def evaluate_point(params: DetectorParams) -> SweepRow:
        """
        Evaluate every output column at one point.

        A KMS defect beyond the binary64 range is written as inf; the
        other columns stay finite.

        Args:
            params: Validated parameter point

        Returns:
            SweepRow with the closed-form QFI and LQU
        """
        T = vacuum.ratio(params)
        lqu = lqu_closed(T, params.tau)
        try:
            kms_defect = vacuum.kms_defect(params)
        except Overflow as e:
            logger.warning(f"{e} at omega={params.omega:g}, beta={params.beta:g}; writing inf")
            kms_defect = math.inf
        return SweepRow(
            omega=params.omega,
            beta=params.beta,
            alpha_abs=params.alpha_abs,
            tau=params.tau,
            t_ratio=T,
            qfi=qfi_closed(params).value,
            lqu=lqu.value,
            theta11=lqu.theta11,
            theta33=lqu.theta33,
            kms_defect=kms_defect
        )

    @staticmethod
    def grid(spec: SweepSpec) -> np.ndarray:
        """Abscissae in order: from + i (to - from)/(steps - 1), or log-spaced"""
        if spec.scale == "log":
            return np.geomspace(spec.start, spec.stop, spec.steps)
        step = (spec.stop - spec.start) / (spec.steps - 1)
        return np.array([spec.start + index * step for index in range(spec.steps)])

    @staticmethod
    def point_params(spec: SweepSpec, value: float) -> DetectorParams:
        """Validated parameters for one abscissa value"""
        values: Dict[str, float] = dict(spec.fixed())
        values[spec.varying] = float(value)
        return validate(values["omega"], values["beta"], -values["alpha_abs"], values["tau"])

    def run_sweep(self, spec: SweepSpec, name: str = "sweep") -> SweepTable:
        """
        Evaluate a sweep row by row in abscissa order.

        Args:
            spec: Validated sweep specification
            name: File stem the table is written under

        Returns:
            SweepTable with spec.steps rows

        Raises:
            OutOfDomain: If some grid point leaves the parameter domain
        """
        rows = [self.evaluate_point(self.point_params(spec, value)) for value in self.grid(spec)]
        logger.info(f"Evaluated {len(rows)} rows of sweep '{name}' over {spec.varying}")
        return SweepTable(name=name, spec=spec, rows=rows)

    def panel_specs(self, panel: FigurePanel) -> List[Tuple[str, SweepSpec]]:
        """Expand a figure panel into named sweeps, one per curve, on the default grids"""
        if panel.varying == "beta":
            (start, stop), steps, scale = self.config.beta_range, self.config.beta_steps, "log"
        else:
            (start, stop), steps, scale = self.config.alpha_range, self.config.alpha_steps, "linear"

        specs = []
        for curve in panel.curves:
            fixed = {
                name: getattr(curve, name) if getattr(curve, name) is not None else getattr(panel.fixed, name)
                for name in PARAMETER_ORDER
                if name != panel.varying
            }
            spec = SweepSpec(
                varying=panel.varying, start=start, stop=stop, steps=steps, scale=scale, **fixed
            )
            label = "_".join(f"{_FILE_LABELS[key]}{format_label(value)}" for key, value in spec.fixed().items())
            specs.append((f"{panel.figure}_{panel.panel}_{label}", spec))
        return specs
