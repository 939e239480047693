from ._fconn import Error, PrecisionError, classes, orbit, reduce, slope, valid_type

__all__ = ["Error", "PrecisionError", "classes", "orbit", "reduce", "slope", "valid_type"]
