from .golden import GoldenData, GoldenDataError, load_golden
from .instance import CuboidInstance, InvalidInstance, instance_check
from .report import Certificate, StageReport
from .runner import RunConfig, run_all
from .constructors import build_Qpq, build_Qr

__all__ = [
    "Certificate",
    "CuboidInstance",
    "GoldenData",
    "GoldenDataError",
    "InvalidInstance",
    "RunConfig",
    "StageReport",
    "build_Qpq",
    "build_Qr",
    "instance_check",
    "load_golden",
    "run_all",
]
