"""Text, CSV and JSON reports."""

from qrotor.reporting.tables import (
    format_parameter_table,
    format_prediction_table,
    prediction_frame,
    residual_frame,
    write_csv,
    write_json,
)

__all__ = [
    "format_parameter_table",
    "format_prediction_table",
    "prediction_frame",
    "residual_frame",
    "write_csv",
    "write_json",
]
