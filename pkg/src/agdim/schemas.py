"""Versioned JSON schemas for every machine-readable output.

The schema ids double as the ``schema`` field embedded in the documents
themselves, so consumers can dispatch on it; bump the trailing version on any
breaking change.
"""

from __future__ import annotations

__all__ = [
    "VERIFICATION_REPORT_SCHEMA",
    "DIMENSION_TABLE_SCHEMA",
    "TABLES_DOCUMENT_SCHEMA",
    "DMAX_TABLE_SCHEMA",
    "EXPLAIN_SCHEMA",
    "CATALOG_SCHEMA",
    "SCHEMAS_BY_COMMAND",
]

_KIND = {"enum": ["exact", "lower-bound", "upper-bound"]}

VERIFICATION_REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.verification-report/1",
    "title": "Exhaustive claim verification report",
    "type": "object",
    "required": ["claim", "range", "status", "counterexamples", "witnesses", "details"],
    "properties": {
        "claim": {"type": "string"},
        "range": {"type": "object", "additionalProperties": {"type": "integer"}},
        "status": {"enum": ["pass", "fail"]},
        "counterexamples": {"type": "array", "items": {"type": "object"}},
        "witnesses": {"type": "array", "items": {"type": "object"}},
        "details": {"type": "object"},
        "generated_at": {"type": "string"},
    },
    "additionalProperties": False,
}

_CELL = {
    "type": "object",
    "required": ["g", "value", "kind"],
    "properties": {
        "g": {"type": "integer"},
        "value": {"type": "integer"},
        "kind": _KIND,
    },
    "additionalProperties": False,
}

DIMENSION_TABLE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.dimension-table/1",
    "title": "Labeled per-genus dimension table",
    "type": "object",
    "required": ["schema", "name", "title", "genera", "rows", "records"],
    "properties": {
        "schema": {"const": "agdim.dimension-table/1"},
        "name": {"type": "string"},
        "title": {"type": "string"},
        "genera": {"type": "array", "items": {"type": "integer"}},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["key", "label", "provenance", "cells"],
                "properties": {
                    "key": {"type": "string"},
                    "label": {"type": "string"},
                    "provenance": {"type": "string"},
                    "cells": {"type": "array", "items": _CELL},
                },
                "additionalProperties": False,
            },
        },
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["g"],
                "properties": {"g": {"type": "integer"}},
                "additionalProperties": {
                    "type": "object",
                    "required": ["value", "kind"],
                    "properties": {"value": {"type": "integer"}, "kind": _KIND},
                    "additionalProperties": False,
                },
            },
        },
    },
    "additionalProperties": False,
}

TABLES_DOCUMENT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.tables/1",
    "title": "Collection of dimension tables",
    "type": "object",
    "required": ["schema", "tables"],
    "properties": {
        "schema": {"const": "agdim.tables/1"},
        "tables": {"type": "array", "items": DIMENSION_TABLE_SCHEMA},
        "generated_at": {"type": "string"},
    },
    "additionalProperties": False,
}

DMAX_TABLE_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.dmax-table/1",
    "title": "Genus bound values over a range",
    "type": "object",
    "required": ["schema", "values"],
    "properties": {
        "schema": {"const": "agdim.dmax-table/1"},
        "values": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["g", "dmax"],
                "properties": {"g": {"type": "integer"}, "dmax": {"type": "integer"}},
                "additionalProperties": False,
            },
        },
        "generated_at": {"type": "string"},
    },
    "additionalProperties": False,
}

_DESCRIPTOR = {
    "type": "object",
    "required": ["type", "dim"],
    "properties": {
        "type": {"enum": ["HodgeGeneric", "SpecialFamily", "ProductWithPoint"]},
        "dim": {"type": "integer"},
        "family": {"type": "string"},
        "k": {"type": ["integer", "null"]},
        "n": {"type": ["integer", "null"]},
        "inner": {"type": "object"},
    },
    "additionalProperties": False,
}

EXPLAIN_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.explain/1",
    "title": "Attainment narrative for one genus",
    "type": "object",
    "required": ["schema", "g", "dmc", "case", "attained_by", "narrative"],
    "properties": {
        "schema": {"const": "agdim.explain/1"},
        "g": {"type": "integer"},
        "dmc": {"type": "integer"},
        "case": {"enum": ["o", "i", "ii", "iii", "iv", "v"]},
        "attained_by": {"type": "array", "items": _DESCRIPTOR},
        "narrative": {"type": "string"},
        "generated_at": {"type": "string"},
    },
    "additionalProperties": False,
}

CATALOG_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "$id": "agdim.catalog/1",
    "title": "Classification catalog export",
    "type": "object",
    "required": ["schema", "max_rep_dim", "cases"],
    "properties": {
        "schema": {"const": "agdim.catalog/1"},
        "max_rep_dim": {"type": "integer"},
        "cases": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "case",
                    "params",
                    "hss_dim",
                    "rep_dim",
                    "duality",
                    "min_compact_factors",
                ],
                "properties": {
                    "case": {"type": "string"},
                    "params": {
                        "type": "object",
                        "additionalProperties": {"type": "integer"},
                    },
                    "hss_dim": {"type": "integer"},
                    "rep_dim": {"type": "integer"},
                    "duality": {"enum": ["symplectic", "orthogonal", "non-self-dual"]},
                    "min_compact_factors": {"enum": [0, 1]},
                },
                "additionalProperties": False,
            },
        },
        "generated_at": {"type": "string"},
    },
    "additionalProperties": False,
}

SCHEMAS_BY_COMMAND = {
    "dmax": DMAX_TABLE_SCHEMA,
    "tables": TABLES_DOCUMENT_SCHEMA,
    "verify": VERIFICATION_REPORT_SCHEMA,
    "explain": EXPLAIN_SCHEMA,
    "catalog": CATALOG_SCHEMA,
}
