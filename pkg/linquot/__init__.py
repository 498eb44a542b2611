"""Exact linear algebra over QQ on finite filtered pieces."""

from linquot.bounds import ZERO_GRADE, Bounds, BoundsMismatch, Grade, TruncationOverflow, total_grade
from linquot.combination import Combination, accumulate
from linquot.echelon import QuotientSpace, Subspace, echelonize, empty_subspace, project
from linquot.piece import FilteredPiece, piece_from_labels
from linquot.saturation import SaturationConfig, SaturationFailure, SaturationResult, saturate

__all__ = [
    "Bounds",
    "BoundsMismatch",
    "Combination",
    "FilteredPiece",
    "Grade",
    "QuotientSpace",
    "SaturationConfig",
    "SaturationFailure",
    "SaturationResult",
    "Subspace",
    "TruncationOverflow",
    "ZERO_GRADE",
    "accumulate",
    "echelonize",
    "empty_subspace",
    "piece_from_labels",
    "project",
    "saturate",
    "total_grade",
]
