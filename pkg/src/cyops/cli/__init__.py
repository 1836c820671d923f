"""Operator records, result cache and the command line interface."""
from .parser import format_poly, parse_laurent, parse_poly
from .records import OperatorRecord, parse_record, read_record, serialize_record

__all__ = ["OperatorRecord", "format_poly", "parse_laurent", "parse_poly", "parse_record",
           "read_record", "serialize_record"]
